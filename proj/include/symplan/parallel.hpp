#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

#include "symplan/geometry.hpp"

namespace symplan {

/// Worker count: SYMPLAN_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
std::size_t worker_count();

/// Calls fn(i) for i in [0, n) on up to `workers` threads. The first
/// exception thrown by any call is rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, std::size_t workers = worker_count());

/// Independent generator for chunk `index` of a computation seeded by `seed`.
Rng substream_rng(std::uint64_t seed, std::uint64_t index);

}  // namespace symplan
