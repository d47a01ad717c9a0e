#pragma once

// Closed-form sample-complexity evaluators for planning on Q/G and the
// Monte-Carlo checks of the geometric facts behind them.

#include "symplan/collision.hpp"
#include "symplan/geometry.hpp"
#include "symplan/symmetry.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace symplan {

struct BoundInputs {
  double path_length = 1.0;   // ℓ
  double clearance = 0.1;     // δ
  double eta = 1.0;           // RRT step
  std::size_t d = 3;          // manifold dimension
  std::size_t group_order = 1;
  double p = 0.01;            // ball-hit probability
  double free_volume = 1.0;   // Vol(Q_free), base space
  double c_star = 1.0;
  double theta = 0.24;        // (0, 1/4)
  double mu = 0.01;           // (0, 1)
  double epsilon = 0.01;      // (0, 1)

  void validate() const;
};

double harmonic(std::size_t n);

/// m = ceil(5ℓ/ν) with ν = min(δ, η).
std::size_t rrt_segment_count(const BoundInputs& in);

/// log of k^m · m · exp(−|G|pk) / (m−1)!, unclamped.
double log_rrt_failure_bound(double k, const BoundInputs& in);
/// The same value, clamped to [0, 1].
double rrt_failure_bound(double k, const BoundInputs& in);

/// H(ceil(2ℓ/δ)) · Vol(Q_free) / (|G| · ζ_d (δ/2)^d).
double prm_expected_samples(const BoundInputs& in);

/// 2 (1 + 1/d)^(1/d) (Vol(Q_free)/ζ_d)^(1/d) |G|^(−1/d).
double prm_star_rho(const BoundInputs& in);

/// (2 + θ) ((1 + ε/4) c* Vol(Q_free) / ((d+1) θ (1−μ) ζ_d))^(1/(d+1)) |G|^(−1/(d+1)).
double rrt_star_rho(const BoundInputs& in);

/// ζ_d r^d / Vol(Q): chance that a uniform sample of Q lands in a flat
/// ball of radius r.
double ball_hit_probability(double radius, std::size_t d, double space_volume);

/// Metric volume of Q: translation box volume per object times the
/// rotation factor volume.
double config_space_volume(const Space& space, const MetricWeights& w);

struct VolumeEstimate {
  double free_fraction = 0.0;
  double volume = 0.0;  // Vol(Q_free)
  double standard_error = 0.0;
  double quotient_volume = 0.0;  // Vol(Q_free / G)
  double quotient_standard_error = 0.0;
  std::size_t samples = 0;
};

/// Rejection-sampling estimate of the free volume. Throws
/// std::runtime_error when no sample is free.
VolumeEstimate estimate_free_volume(const World& world, std::span<const MovingObject> objects,
                                    const SymmetryGroup& group, const MetricWeights& w, std::size_t samples,
                                    Rng& rng);

struct BallProbability {
  double p_base = 0.0;
  double p_quotient = 0.0;
  double ratio = 0.0;         // p_base / p_quotient, expected 1/|G|
  double ratio_stderr = 0.0;  // binomial, conditioned on quotient hits
  std::size_t base_hits = 0;
  std::size_t quotient_hits = 0;
  std::size_t samples = 0;
};

/// Empirical P[d(q', q) < ε] and P[q_dist(q', q) < ε] for q' uniform in Q.
/// Requires ε below the injectivity radius bound.
BallProbability mc_ball_probability(const Space& space, const SymmetryGroup& group, const Config& q, double eps,
                                    const MetricWeights& w, std::size_t samples, Rng& rng);

/// r_inj(Q)/|G| where r_inj(Q) = min over objects of w_i·π; the translation
/// factor does not bind.
double injectivity_radius_bound(const Space& space, const SymmetryGroup& group, const MetricWeights& w);

/// Smallest distance between distinct orbit points over random q; infinity
/// for the trivial group.
double min_orbit_separation(const SymmetryGroup& group, const Space& space, const MetricWeights& w,
                            std::size_t trials, Rng& rng);

struct ClearanceReport {
  bool base_clear = true;
  bool quotient_clear = true;
  std::size_t probes = 0;

  /// Base clearance implies quotient clearance.
  bool consistent() const { return !base_clear || quotient_clear; }
};

/// Probes the δ-balls around path points: base probes around the path point
/// itself, quotient probes around a random orbit member of it.
ClearanceReport clearance_check(std::span<const Config> path, double delta, const World& world,
                                std::span<const MovingObject> objects, const SymmetryGroup& group,
                                const MetricWeights& w, std::size_t probes, Rng& rng);

}  // namespace symplan
