#include "symplan/bounds.hpp"

#include "symplan/parallel.hpp"
#include "symplan/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace symplan {

namespace {

constexpr std::size_t kChunks = 64;

std::size_t chunk_size(std::size_t total, std::size_t chunk) {
  return total / kChunks + (chunk < total % kChunks ? 1 : 0);
}

double group_order(const BoundInputs& in) { return static_cast<double>(in.group_order); }

}  // namespace

void BoundInputs::validate() const {
  if (!(path_length > 0.0) || !(clearance > 0.0) || !(eta > 0.0) || !(free_volume > 0.0) || !(c_star > 0.0)) {
    throw std::invalid_argument("lengths and volumes must be positive");
  }
  if (d == 0 || group_order == 0) throw std::invalid_argument("dimension and group order must be positive");
  if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("p must lie in (0, 1]");
  if (!(theta > 0.0 && theta < 0.25)) throw std::invalid_argument("theta must lie in (0, 1/4)");
  if (!(mu > 0.0 && mu < 1.0)) throw std::invalid_argument("mu must lie in (0, 1)");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
}

double harmonic(std::size_t n) {
  double h = 0.0;
  for (std::size_t k = n; k >= 1; --k) h += 1.0 / static_cast<double>(k);  // small terms first
  return h;
}

std::size_t rrt_segment_count(const BoundInputs& in) {
  const double nu = std::min(in.clearance, in.eta);
  return static_cast<std::size_t>(std::ceil(5.0 * in.path_length / nu));
}

double log_rrt_failure_bound(double k, const BoundInputs& in) {
  in.validate();
  if (!(k >= 1.0)) throw std::invalid_argument("k must be at least 1");
  const double m = static_cast<double>(rrt_segment_count(in));
  return m * std::log(k) + std::log(m) - group_order(in) * in.p * k - std::lgamma(m);
}

double rrt_failure_bound(double k, const BoundInputs& in) {
  return std::clamp(std::exp(log_rrt_failure_bound(k, in)), 0.0, 1.0);
}

double prm_expected_samples(const BoundInputs& in) {
  in.validate();
  const auto n = static_cast<std::size_t>(std::ceil(2.0 * in.path_length / in.clearance));
  const double ball = unit_ball_volume(in.d) * std::pow(in.clearance / 2.0, static_cast<double>(in.d));
  return harmonic(n) * in.free_volume / (group_order(in) * ball);
}

double prm_star_rho(const BoundInputs& in) {
  in.validate();
  const double d = static_cast<double>(in.d);
  return 2.0 * std::pow(1.0 + 1.0 / d, 1.0 / d) * std::pow(in.free_volume / unit_ball_volume(in.d), 1.0 / d) *
         std::pow(group_order(in), -1.0 / d);
}

double rrt_star_rho(const BoundInputs& in) {
  in.validate();
  const double d = static_cast<double>(in.d);
  const double inner = (1.0 + in.epsilon / 4.0) * in.c_star * in.free_volume /
                       ((d + 1.0) * in.theta * (1.0 - in.mu) * unit_ball_volume(in.d));
  return (2.0 + in.theta) * std::pow(inner, 1.0 / (d + 1.0)) * std::pow(group_order(in), -1.0 / (d + 1.0));
}

double ball_hit_probability(double radius, std::size_t d, double space_volume) {
  if (!(radius > 0.0) || !(space_volume > 0.0)) throw std::invalid_argument("radius and volume must be positive");
  return unit_ball_volume(d) * std::pow(radius, static_cast<double>(d)) / space_volume;
}

double config_space_volume(const Space& space, const MetricWeights& w) {
  if (w.size() != space.objects) throw std::invalid_argument("metric weights do not match object count");
  double v = 1.0;
  for (std::size_t i = 0; i < space.objects; ++i) v *= space.bounds.volume(space.dim) * rotation_volume(space.dim, w[i]);
  return v;
}

VolumeEstimate estimate_free_volume(const World& world, std::span<const MovingObject> objects,
                                    const SymmetryGroup& group, const MetricWeights& w, std::size_t samples,
                                    Rng& rng) {
  if (samples == 0) throw std::invalid_argument("need at least one sample");
  const Space space{world.dim(), objects.size(), world.bounds()};
  const std::uint64_t seed = rng();
  std::vector<std::size_t> hits(kChunks, 0);
  parallel_for(kChunks, [&](std::size_t c) {
    Rng local = substream_rng(seed, c);
    for (std::size_t i = 0, n = chunk_size(samples, c); i < n; ++i) {
      if (is_free(world, objects, sample_uniform(space, local))) ++hits[c];
    }
  });
  std::size_t free = 0;
  for (std::size_t h : hits) free += h;
  if (free == 0) throw std::runtime_error("no free sample; free volume cannot be estimated");
  const double total = config_space_volume(space, w);
  const double f = static_cast<double>(free) / static_cast<double>(samples);
  VolumeEstimate e;
  e.samples = samples;
  e.free_fraction = f;
  e.volume = f * total;
  e.standard_error = std::sqrt(f * (1.0 - f) / static_cast<double>(samples)) * total;
  const double order = static_cast<double>(group.order());
  e.quotient_volume = e.volume / order;
  e.quotient_standard_error = e.standard_error / order;
  return e;
}

BallProbability mc_ball_probability(const Space& space, const SymmetryGroup& group, const Config& q, double eps,
                                    const MetricWeights& w, std::size_t samples, Rng& rng) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  if (!(eps < injectivity_radius_bound(space, group, w))) {
    throw std::invalid_argument("eps must lie below the injectivity radius bound");
  }
  if (samples == 0) throw std::invalid_argument("need at least one sample");
  const std::uint64_t seed = rng();
  std::vector<std::size_t> base(kChunks, 0), quot(kChunks, 0);
  parallel_for(kChunks, [&](std::size_t c) {
    Rng local = substream_rng(seed, c);
    for (std::size_t i = 0, n = chunk_size(samples, c); i < n; ++i) {
      const Config x = sample_uniform(space, local);
      if (dist_config(q, x, w) < eps) ++base[c];
      if (q_dist(group, q, x, w).length < eps) ++quot[c];
    }
  });
  BallProbability b;
  b.samples = samples;
  for (std::size_t c = 0; c < kChunks; ++c) {
    b.base_hits += base[c];
    b.quotient_hits += quot[c];
  }
  const double n = static_cast<double>(samples);
  b.p_base = static_cast<double>(b.base_hits) / n;
  b.p_quotient = static_cast<double>(b.quotient_hits) / n;
  if (b.quotient_hits > 0) {
    b.ratio = static_cast<double>(b.base_hits) / static_cast<double>(b.quotient_hits);
    b.ratio_stderr = std::sqrt(b.ratio * (1.0 - b.ratio) / static_cast<double>(b.quotient_hits));
  }
  return b;
}

double injectivity_radius_bound(const Space& space, const SymmetryGroup& group, const MetricWeights& w) {
  if (w.size() != space.objects) throw std::invalid_argument("metric weights do not match object count");
  double r = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < space.objects; ++i) r = std::min(r, w[i] * kPi);
  return r / static_cast<double>(group.order());
}

double min_orbit_separation(const SymmetryGroup& group, const Space& space, const MetricWeights& w,
                            std::size_t trials, Rng& rng) {
  double best = std::numeric_limits<double>::infinity();
  if (group.is_trivial()) return best;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::vector<Config> orb = orbit(group, sample_uniform(space, rng));
    for (std::size_t a = 0; a < orb.size(); ++a) {
      for (std::size_t b = a + 1; b < orb.size(); ++b) best = std::min(best, dist_config(orb[a], orb[b], w));
    }
  }
  return best;
}

ClearanceReport clearance_check(std::span<const Config> path, double delta, const World& world,
                                std::span<const MovingObject> objects, const SymmetryGroup& group,
                                const MetricWeights& w, std::size_t probes, Rng& rng) {
  if (path.empty()) throw std::invalid_argument("empty path");
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
  const Space space{world.dim(), objects.size(), world.bounds()};
  if (!(delta < injectivity_radius_bound(space, group, w))) {
    throw std::invalid_argument("delta must lie below the injectivity radius bound");
  }
  // Path points spaced at most delta apart.
  std::vector<Config> points{path.front()};
  for (std::size_t i = 1; i < path.size(); ++i) {
    const double len = dist_config(path[i - 1], path[i], w);
    const auto steps = static_cast<std::size_t>(std::max(1.0, std::ceil(len / delta)));
    for (std::size_t s = 1; s <= steps; ++s) {
      points.push_back(geodesic(path[i - 1], path[i], static_cast<double>(s) / static_cast<double>(steps)));
    }
  }
  std::uniform_int_distribution<std::size_t> pick_point(0, points.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_element(0, group.order() - 1);
  ClearanceReport report;
  for (std::size_t k = 0; k < probes; ++k) {
    const Config& p = points[pick_point(rng)];
    if (!is_free(world, objects, sample_ball(p, delta, w, rng))) report.base_clear = false;
    const Config member = act(group, pick_element(rng), p);
    if (!is_free(world, objects, sample_ball(member, delta, w, rng))) report.quotient_clear = false;
    ++report.probes;
  }
  return report;
}

}  // namespace symplan
