#pragma once

// Paired symmetry-aware / symmetry-unaware experiments over seeded random
// worlds, the multi-rectangle scaling study and the theory check suite.

#include "symplan/collision.hpp"
#include "symplan/planners.hpp"
#include "symplan/worldgen.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace symplan {

/// Objects by name: triangle, square, pentagon, hexagon, octagon, rectangle,
/// scalene (2D); N-pyramid, N-prism, tetrahedron, cube, icosahedron, wedge
/// (3D); rectangle-stack(M) for M rectangles in 2D. Throws
/// std::invalid_argument for unknown names or a dimension mismatch.
std::vector<MovingObject> make_objects(const std::string& name, int dim);

enum class PlannerKind { rrt, birrt, rrt_star, prm_star_knn, prm_star_radius };
PlannerKind planner_from_string(const std::string& name);
std::string to_string(PlannerKind kind);

enum class ResourceMode { equal, reduced };
ResourceMode mode_from_string(const std::string& name);
std::string to_string(ResourceMode mode);

struct ExperimentConfig {
  int dim = 2;
  std::string object = "octagon";
  PlannerKind planner = PlannerKind::rrt;
  int worlds = 10;
  int pairs = 10;
  ResourceMode mode = ResourceMode::equal;
  std::uint64_t seed = 1;
  std::size_t max_samples = 0;  // 0: the mode's default cap
  std::optional<WorldGenParams> world;  // unset: WorldGenParams::defaults(dim)
  double eta = 0.0;             // 0: default for the dimension
  double resolution = 0.01;
  std::size_t volume_samples = 20000;  // Monte-Carlo samples for Vol(Q_free)
  std::size_t threads = 0;      // 0: worker_count()

  void validate() const;
};

double default_eta(int dim);

struct RunRecord {
  std::uint64_t world_seed = 0;
  int pair = 0;
  std::string arm;  // "aware" or "unaware"
  PlanStatus status = PlanStatus::exhausted;
  double length = 0.0;
  double runtime_s = 0.0;
  std::size_t samples = 0;
  std::size_t collision_checks = 0;
};

struct ArmSummary {
  std::size_t runs = 0;
  std::size_t successes = 0;
  double success_rate = 0.0;
  double mean_length = 0.0;
  double sd_length = 0.0;
  double mean_runtime_s = 0.0;
  double sd_runtime_s = 0.0;
};

struct Comparison {
  std::size_t both_success = 0;
  /// unaware/aware of the mean length over pairs where both arms succeeded.
  double length_ratio = 0.0;
  /// Mean over the same pairs of unaware_length / aware_length.
  double mean_pair_length_ratio = 0.0;
  double runtime_ratio = 0.0;
  double samples_ratio = 0.0;
  std::size_t aware_shorter = 0;
  std::size_t unaware_shorter = 0;
  /// One-sided sign test p-value against "the unaware arm is not longer".
  double sign_test_p = 1.0;
};

struct Report {
  ExperimentConfig config;
  std::size_t group_order = 1;
  std::vector<RunRecord> records;  // sorted by (world_seed, pair, arm)
  std::size_t skipped_pairs = 0;   // RRT* pairs without a reference cost
  ArmSummary aware;
  ArmSummary unaware;
  Comparison comparison;
};

/// Probability that Binomial(n, 1/2) is at least k.
double sign_test_upper_p(std::size_t k, std::size_t n);

Comparison compare_arms(const std::vector<RunRecord>& records);
ArmSummary summarize_arm(const std::vector<RunRecord>& records, const std::string& arm);

Report run_experiment(const ExperimentConfig& config);

/// CSV with header world_seed,pair,arm,status,length,runtime_s,samples,collision_checks.
void write_csv(const Report& report, std::ostream& out);
nlohmann::json report_to_json(const Report& report);

struct ScalingRow {
  int copies = 0;
  std::size_t group_order = 0;
  std::size_t config_dim = 0;
  double qdist_seconds = 0.0;  // per call
  Report report;
};

struct ScalingConfig {
  int max_copies = 5;
  int worlds = 2;
  int pairs = 5;
  std::uint64_t seed = 1;
  std::size_t max_samples = 40000;
  std::optional<WorldGenParams> world;
  double eta = 0.0;
  double resolution = 0.01;
  std::size_t threads = 0;
  bool run_planners = true;
};

/// Seconds per q_dist call for `copies` rectangles under (C2)^copies; the
/// best of `repeats` batches of `calls` calls.
double measure_qdist_time(int copies, std::size_t calls, int repeats, std::uint64_t seed);

std::vector<ScalingRow> run_dimension_scaling(const ScalingConfig& config);
nlohmann::json scaling_to_json(const std::vector<ScalingRow>& rows);

struct TheoryCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct TheoryConfig {
  std::uint64_t seed = 1;
  std::size_t mc_samples = 1000000;
  bool inject_corrupted_group = false;
};

struct TheoryReport {
  std::vector<TheoryCheck> checks;
  bool all_passed() const;
};

TheoryReport verify_theory(const TheoryConfig& config);
nlohmann::json theory_to_json(const TheoryReport& report);
TheoryReport theory_from_json(const nlohmann::json& j);

}  // namespace symplan
