#include "symplan/bench.hpp"

#include "symplan/bounds.hpp"
#include "symplan/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <numeric>
#include <ostream>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace symplan {

namespace {

using Json = nlohmann::json;

GroupPtr share(SymmetryGroup g) { return std::make_shared<const SymmetryGroup>(std::move(g)); }

ConvexShape icosahedron(double circumradius) {
  const double phi = 0.5 * (1.0 + std::sqrt(5.0));
  const double s = circumradius / std::sqrt(1.0 + phi * phi);
  std::vector<Eigen::Vector3d> pts;
  for (double a : {-1.0, 1.0}) {
    for (double b : {-phi, phi}) {
      pts.emplace_back(0.0, a * s, b * s);
      pts.emplace_back(a * s, b * s, 0.0);
      pts.emplace_back(b * s, 0.0, a * s);
    }
  }
  return ConvexShape(3, std::move(pts));
}

int parse_count(const std::smatch& m) { return std::stoi(m[1].str()); }

double mean_of(const std::vector<double>& v) {
  return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double sd_of(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double m = mean_of(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

RunRecord make_record(std::uint64_t world_seed, int pair, const char* arm, const PlanResult& r) {
  return {world_seed, pair, arm, r.status, r.length, r.wall_time_s, r.samples, r.collision_checks};
}

std::uint64_t pair_seed(std::uint64_t world_seed, int pair) {
  return substream_rng(world_seed, 1000 + static_cast<std::uint64_t>(pair))();
}

}  // namespace

std::vector<MovingObject> make_objects(const std::string& name, int dim) {
  if (dim != 2 && dim != 3) throw std::invalid_argument("dimension must be 2 or 3");
  std::smatch m;
  auto need = [&](int d) {
    if (dim != d) throw std::invalid_argument("object " + name + " is " + std::to_string(d) + "D");
  };
  auto one = [&](ConvexShape shape, SymmetryGroup g) {
    std::vector<MovingObject> out;
    out.emplace_back(name, std::move(shape), share(std::move(g)));
    return out;
  };
  const Eigen::Vector3d z = Eigen::Vector3d::UnitZ();
  const Eigen::Vector3d x = Eigen::Vector3d::UnitX();
  static const std::map<std::string, int> polygons{
      {"triangle", 3}, {"square", 4}, {"pentagon", 5}, {"hexagon", 6}, {"octagon", 8}};
  if (auto it = polygons.find(name); it != polygons.end()) {
    need(2);
    return one(regular_polygon(it->second, 0.5), make_cyclic_2d(it->second));
  }
  if (name == "rectangle") {
    need(2);
    return one(rectangle(1.0, 0.4), make_cyclic_2d(2));
  }
  if (name == "scalene") {
    need(2);
    return one(ConvexShape(2, {{0.0, 0.0, 0.0}, {0.9, 0.0, 0.0}, {0.2, 0.5, 0.0}}).centered(), make_cyclic_2d(1));
  }
  static const std::regex pyramid(R"((\d+)-pyramid)");
  static const std::regex prism(R"((\d+)-prism)");
  static const std::regex stack(R"(rectangle-stack[(:](\d+)\)?)");
  if (std::regex_match(name, m, pyramid)) {
    need(3);
    const int n = parse_count(m);
    return one(regular_pyramid(n, 0.8, 1.2), make_cyclic_3d(n, z));
  }
  if (std::regex_match(name, m, prism)) {
    need(3);
    const int n = parse_count(m);
    return one(regular_prism(n, 0.8, 1.0), make_dihedral_3d(n, z, x));
  }
  if (name == "tetrahedron" || name == "cube" || name == "icosahedron") {
    need(3);
    if (name == "tetrahedron") return one(regular_tetrahedron(1.0), make_tetrahedral());
    if (name == "cube") return one(cube(0.6), make_octahedral());
    return one(icosahedron(1.0), make_icosahedral());
  }
  if (name == "wedge") {
    need(3);
    return one(ConvexShape(3, {{0, 0, 0}, {1.0, 0, 0}, {0.1, 0.7, 0}, {0.2, 0.1, 0.5}}).centered(),
               make_trivial(3));
  }
  if (std::regex_match(name, m, stack)) {
    need(2);
    const int copies = parse_count(m);
    if (copies < 1) throw std::invalid_argument("rectangle-stack needs at least one copy");
    std::vector<MovingObject> out;
    auto g = share(make_cyclic_2d(2));
    for (int i = 0; i < copies; ++i) out.emplace_back("rectangle" + std::to_string(i), rectangle(0.8, 0.3), g);
    return out;
  }
  throw std::invalid_argument("unknown object: " + name);
}

PlannerKind planner_from_string(const std::string& name) {
  if (name == "rrt") return PlannerKind::rrt;
  if (name == "birrt") return PlannerKind::birrt;
  if (name == "rrt_star") return PlannerKind::rrt_star;
  if (name == "prm_star_knn") return PlannerKind::prm_star_knn;
  if (name == "prm_star_radius") return PlannerKind::prm_star_radius;
  throw std::invalid_argument("unknown planner: " + name);
}

std::string to_string(PlannerKind kind) {
  switch (kind) {
    case PlannerKind::rrt:
      return "rrt";
    case PlannerKind::birrt:
      return "birrt";
    case PlannerKind::rrt_star:
      return "rrt_star";
    case PlannerKind::prm_star_knn:
      return "prm_star_knn";
    case PlannerKind::prm_star_radius:
      return "prm_star_radius";
  }
  return "unknown";
}

ResourceMode mode_from_string(const std::string& name) {
  if (name == "equal") return ResourceMode::equal;
  if (name == "reduced") return ResourceMode::reduced;
  throw std::invalid_argument("unknown resource mode: " + name);
}

std::string to_string(ResourceMode mode) { return mode == ResourceMode::equal ? "equal" : "reduced"; }

double default_eta(int dim) { return dim == 3 ? 2.0 : 1.0; }

void ExperimentConfig::validate() const {
  if (dim != 2 && dim != 3) throw std::invalid_argument("dimension must be 2 or 3");
  if (worlds < 1 || pairs < 1) throw std::invalid_argument("worlds and pairs must be positive");
  if (eta < 0.0 || !(resolution > 0.0)) throw std::invalid_argument("eta and resolution must be positive");
  if (volume_samples == 0) throw std::invalid_argument("volume_samples must be positive");
  if (world && world->dim != dim) throw std::invalid_argument("world parameters have the wrong dimension");
  make_objects(object, dim);
}

double sign_test_upper_p(std::size_t k, std::size_t n) {
  if (k == 0) return 1.0;
  if (k > n) return 0.0;
  const double nn = static_cast<double>(n);
  double p = 0.0;
  for (std::size_t i = k; i <= n; ++i) {
    const double ii = static_cast<double>(i);
    p += std::exp(std::lgamma(nn + 1.0) - std::lgamma(ii + 1.0) - std::lgamma(nn - ii + 1.0) - nn * std::log(2.0));
  }
  return std::min(1.0, p);
}

ArmSummary summarize_arm(const std::vector<RunRecord>& records, const std::string& arm) {
  ArmSummary s;
  std::vector<double> lengths, runtimes;
  for (const auto& r : records) {
    if (r.arm != arm) continue;
    ++s.runs;
    if (r.status == PlanStatus::success) {
      ++s.successes;
      lengths.push_back(r.length);
      runtimes.push_back(r.runtime_s);
    }
  }
  s.success_rate = s.runs ? static_cast<double>(s.successes) / static_cast<double>(s.runs) : 0.0;
  s.mean_length = mean_of(lengths);
  s.sd_length = sd_of(lengths);
  s.mean_runtime_s = mean_of(runtimes);
  s.sd_runtime_s = sd_of(runtimes);
  return s;
}

Comparison compare_arms(const std::vector<RunRecord>& records) {
  std::map<std::pair<std::uint64_t, int>, std::pair<const RunRecord*, const RunRecord*>> pairs;
  for (const auto& r : records) {
    auto& slot = pairs[{r.world_seed, r.pair}];
    (r.arm == "aware" ? slot.first : slot.second) = &r;
  }
  Comparison c;
  std::vector<double> la, lu, ta, tu, sa, su, per_pair;
  for (const auto& [key, p] : pairs) {
    const auto* a = p.first;
    const auto* u = p.second;
    if (!a || !u || a->status != PlanStatus::success || u->status != PlanStatus::success) continue;
    ++c.both_success;
    la.push_back(a->length);
    lu.push_back(u->length);
    ta.push_back(a->runtime_s);
    tu.push_back(u->runtime_s);
    sa.push_back(static_cast<double>(a->samples));
    su.push_back(static_cast<double>(u->samples));
    if (a->length > 0.0) per_pair.push_back(u->length / a->length);
    const double diff = u->length - a->length;
    if (diff > 1e-12) ++c.aware_shorter;
    if (diff < -1e-12) ++c.unaware_shorter;
  }
  if (c.both_success > 0) {
    c.length_ratio = mean_of(la) > 0.0 ? mean_of(lu) / mean_of(la) : 0.0;
    c.runtime_ratio = mean_of(ta) > 0.0 ? mean_of(tu) / mean_of(ta) : 0.0;
    c.samples_ratio = mean_of(sa) > 0.0 ? mean_of(su) / mean_of(sa) : 0.0;
    c.mean_pair_length_ratio = mean_of(per_pair);
  }
  c.sign_test_p = sign_test_upper_p(c.aware_shorter, c.aware_shorter + c.unaware_shorter);
  return c;
}

Report run_experiment(const ExperimentConfig& config) {
  config.validate();
  const int dim = config.dim;
  const std::vector<MovingObject> objects = make_objects(config.object, dim);
  const GroupPtr group = joint_group(objects);
  const std::size_t order = group->order();
  const double eta = config.eta > 0.0 ? config.eta : default_eta(dim);
  const bool prm = config.planner == PlannerKind::prm_star_knn || config.planner == PlannerKind::prm_star_radius;
  const std::size_t tree_cap = config.max_samples > 0 ? config.max_samples : (dim == 2 ? 1000 : 250);
  const std::size_t prm_cap = config.max_samples > 0 ? config.max_samples : (dim == 2 ? 3000 : 500) * order;
  const bool reduced = config.mode == ResourceMode::reduced;

  Report report;
  report.config = config;
  report.group_order = order;

  struct WorldData {
    std::uint64_t seed;
    std::shared_ptr<const PlanningSpace> aware;
    std::shared_ptr<const PlanningSpace> unaware;
    std::vector<Problem> problems;
    double free_volume;
  };
  std::vector<WorldData> worlds(static_cast<std::size_t>(config.worlds));
  const std::size_t workers = config.threads > 0 ? config.threads : worker_count();
  parallel_for(
      worlds.size(),
      [&](std::size_t w) {
        WorldData& wd = worlds[w];
        wd.seed = config.seed + w;
        WorldGenParams wp = config.world.value_or(WorldGenParams::defaults(dim));
        wp.seed = wd.seed;
        World world = gen_world(wp);
        wd.aware = std::make_shared<const PlanningSpace>(world, objects, group);
        wd.unaware = std::make_shared<const PlanningSpace>(PlanningSpace::unaware(world, objects));
        Rng rng = substream_rng(wd.seed, 1);
        for (int p = 0; p < config.pairs; ++p) {
          wd.problems.push_back(gen_problem(world, objects, *group, wd.aware->weights(), rng));
        }
        Rng vol_rng = substream_rng(wd.seed, 2);
        wd.free_volume =
            estimate_free_volume(world, objects, *group, wd.aware->weights(), config.volume_samples, vol_rng).volume;
      },
      workers);

  auto base_inputs = [&](const WorldData& wd, std::size_t g) {
    BoundInputs in;
    in.d = wd.aware->dimension();
    in.free_volume = wd.free_volume;
    in.group_order = g;
    in.eta = eta;
    return in;
  };

  std::vector<std::vector<RunRecord>> slots;
  std::vector<int> skipped;
  std::vector<std::function<void(std::size_t)>> tasks;
  if (prm) {
    slots.resize(worlds.size());
    for (std::size_t w = 0; w < worlds.size(); ++w) tasks.push_back([&, w](std::size_t) {
      const WorldData& wd = worlds[w];
      const PrmVariant variant = config.planner == PlannerKind::prm_star_knn ? PrmVariant::knn : PrmVariant::radius;
      PlannerParams pa;
      pa.resolution = config.resolution;
      pa.eta = eta;
      pa.seed = substream_rng(wd.seed, 3)();
      PlannerParams pu = pa;
      pu.max_samples = prm_cap;
      pu.rho_prm = prm_star_rho(base_inputs(wd, 1));
      pa.max_samples = reduced ? std::max<std::size_t>(1, prm_cap / order) : prm_cap;
      pa.rho_prm = prm_star_rho(base_inputs(wd, reduced ? order : 1));
      const PrmResult ra = prm_star(wd.problems, *wd.aware, pa, variant);
      const PrmResult ru = prm_star(wd.problems, *wd.unaware, pu, variant);
      for (int p = 0; p < config.pairs; ++p) {
        slots[w].push_back(make_record(wd.seed, p, "aware", ra.queries[static_cast<std::size_t>(p)]));
        slots[w].push_back(make_record(wd.seed, p, "unaware", ru.queries[static_cast<std::size_t>(p)]));
      }
    });
  } else {
    const std::size_t total = worlds.size() * static_cast<std::size_t>(config.pairs);
    slots.resize(total);
    skipped.assign(total, 0);
    for (std::size_t t = 0; t < total; ++t) tasks.push_back([&, t](std::size_t) {
      const WorldData& wd = worlds[t / static_cast<std::size_t>(config.pairs)];
      const int p = static_cast<int>(t % static_cast<std::size_t>(config.pairs));
      const Problem& problem = wd.problems[static_cast<std::size_t>(p)];
      PlannerParams params;
      params.max_samples = tree_cap;
      params.eta = eta;
      params.resolution = config.resolution;
      params.seed = pair_seed(wd.seed, p);
      PlanResult ra, ru;
      switch (config.planner) {
        case PlannerKind::rrt:
          ra = rrt(problem, *wd.aware, params);
          ru = rrt(problem, *wd.unaware, params);
          break;
        case PlannerKind::birrt:
          ra = birrt(problem, *wd.aware, params);
          ru = birrt(problem, *wd.unaware, params);
          break;
        default: {
          // Reference cost c*: the unaware RRT in equal mode, the aware one
          // in reduced mode.
          const PlanResult ref = rrt(problem, reduced ? *wd.aware : *wd.unaware, params);
          if (!ref.success()) {
            skipped[t] = 1;
            return;
          }
          BoundInputs in = base_inputs(wd, 1);
          in.c_star = ref.length;
          PlannerParams pu = params;
          pu.rho_rrt = rrt_star_rho(in);
          PlannerParams pa = params;
          in.group_order = reduced ? order : 1;
          pa.rho_rrt = rrt_star_rho(in);
          ra = rrt_star(problem, *wd.aware, pa);
          ru = rrt_star(problem, *wd.unaware, pu);
        }
      }
      slots[t].push_back(make_record(wd.seed, p, "aware", ra));
      slots[t].push_back(make_record(wd.seed, p, "unaware", ru));
    });
  }
  parallel_for(tasks.size(), [&](std::size_t i) { tasks[i](i); }, workers);

  for (auto& s : slots) {
    for (auto& r : s) report.records.push_back(std::move(r));
  }
  std::stable_sort(report.records.begin(), report.records.end(), [](const RunRecord& a, const RunRecord& b) {
    return std::tie(a.world_seed, a.pair, a.arm) < std::tie(b.world_seed, b.pair, b.arm);
  });
  for (int s : skipped) report.skipped_pairs += static_cast<std::size_t>(s);
  report.aware = summarize_arm(report.records, "aware");
  report.unaware = summarize_arm(report.records, "unaware");
  report.comparison = compare_arms(report.records);
  return report;
}

void write_csv(const Report& report, std::ostream& out) {
  out << "world_seed,pair,arm,status,length,runtime_s,samples,collision_checks\n";
  out << std::setprecision(12);
  for (const auto& r : report.records) {
    out << r.world_seed << ',' << r.pair << ',' << r.arm << ',' << to_string(r.status) << ',' << r.length << ','
        << r.runtime_s << ',' << r.samples << ',' << r.collision_checks << '\n';
  }
}

namespace {

Json arm_to_json(const ArmSummary& s) {
  return {{"runs", s.runs},
          {"successes", s.successes},
          {"success_rate", s.success_rate},
          {"mean_length", s.mean_length},
          {"sd_length", s.sd_length},
          {"mean_runtime_s", s.mean_runtime_s},
          {"sd_runtime_s", s.sd_runtime_s}};
}

}  // namespace

Json report_to_json(const Report& report) {
  const auto& c = report.comparison;
  Json records = Json::array();
  for (const auto& r : report.records) {
    records.push_back({{"world_seed", r.world_seed},
                       {"pair", r.pair},
                       {"arm", r.arm},
                       {"status", to_string(r.status)},
                       {"length", r.length},
                       {"runtime_s", r.runtime_s},
                       {"samples", r.samples},
                       {"collision_checks", r.collision_checks}});
  }
  return {{"config",
           {{"dim", report.config.dim},
            {"object", report.config.object},
            {"planner", to_string(report.config.planner)},
            {"worlds", report.config.worlds},
            {"pairs", report.config.pairs},
            {"mode", to_string(report.config.mode)},
            {"seed", report.config.seed},
            {"max_samples", report.config.max_samples}}},
          {"group_order", report.group_order},
          {"skipped_pairs", report.skipped_pairs},
          {"aware", arm_to_json(report.aware)},
          {"unaware", arm_to_json(report.unaware)},
          {"comparison",
           {{"both_success", c.both_success},
            {"length_ratio", c.length_ratio},
            {"mean_pair_length_ratio", c.mean_pair_length_ratio},
            {"runtime_ratio", c.runtime_ratio},
            {"samples_ratio", c.samples_ratio},
            {"aware_shorter", c.aware_shorter},
            {"unaware_shorter", c.unaware_shorter},
            {"sign_test_p", c.sign_test_p}}},
          {"records", std::move(records)}};
}

double measure_qdist_time(int copies, std::size_t calls, int repeats, std::uint64_t seed) {
  const auto objects = make_objects("rectangle-stack(" + std::to_string(copies) + ")", 2);
  const GroupPtr group = joint_group(objects);
  const MetricWeights w = weights_of(objects);
  const Space space{2, objects.size(), Bounds::box2d(0, 0, 10, 10)};
  Rng rng(seed);
  std::vector<Config> pool;
  for (int i = 0; i < 64; ++i) pool.push_back(sample_uniform(space, rng));
  double best = std::numeric_limits<double>::infinity();
  volatile double sink = 0.0;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    double acc = 0.0;
    for (std::size_t i = 0; i < calls; ++i) acc += q_dist(*group, pool[i % 64], pool[(i * 7 + 3) % 64], w).length;
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    sink = sink + acc;
    best = std::min(best, dt / static_cast<double>(calls));
  }
  return best;
}

std::vector<ScalingRow> run_dimension_scaling(const ScalingConfig& config) {
  if (config.max_copies < 1) throw std::invalid_argument("max_copies must be positive");
  std::vector<ScalingRow> rows;
  for (int m = 1; m <= config.max_copies; ++m) {
    ScalingRow row;
    row.copies = m;
    row.group_order = std::size_t{1} << m;
    row.config_dim = 3 * static_cast<std::size_t>(m);
    row.qdist_seconds = measure_qdist_time(m, 20000, 5, config.seed);
    if (config.run_planners) {
      ExperimentConfig e;
      e.dim = 2;
      e.object = "rectangle-stack(" + std::to_string(m) + ")";
      e.planner = PlannerKind::birrt;
      e.worlds = config.worlds;
      e.pairs = config.pairs;
      e.seed = config.seed;
      e.max_samples = config.max_samples;
      e.world = config.world;
      e.eta = config.eta;
      e.resolution = config.resolution;
      e.threads = config.threads;
      e.volume_samples = 2000;
      row.report = run_experiment(e);
      row.group_order = row.report.group_order;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json scaling_to_json(const std::vector<ScalingRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    const auto& c = r.report.comparison;
    out.push_back({{"copies", r.copies},
                   {"group_order", r.group_order},
                   {"config_dim", r.config_dim},
                   {"qdist_seconds", r.qdist_seconds},
                   {"aware_success_rate", r.report.aware.success_rate},
                   {"unaware_success_rate", r.report.unaware.success_rate},
                   {"both_success", c.both_success},
                   {"runtime_ratio", c.runtime_ratio},
                   {"length_ratio", c.length_ratio}});
  }
  return out;
}

bool TheoryReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const TheoryCheck& c) { return c.passed; });
}

TheoryReport verify_theory(const TheoryConfig& config) {
  TheoryReport report;
  auto add = [&](std::string name, bool passed, std::string detail) {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
  };
  auto fmt = [](double v) {
    std::ostringstream s;
    s << std::setprecision(10) << v;
    return s.str();
  };
  Rng rng(config.seed);
  const Eigen::Vector3d z = Eigen::Vector3d::UnitZ();

  std::vector<std::pair<std::string, SymmetryGroup>> groups;
  for (int n : {1, 2, 3, 4, 5, 6, 8}) groups.emplace_back("C" + std::to_string(n) + "/SO2", make_cyclic_2d(n));
  groups.emplace_back("C5/SO3", make_cyclic_3d(5, z));
  groups.emplace_back("D6", make_dihedral_3d(6, z, Eigen::Vector3d::UnitX()));
  groups.emplace_back("tetrahedral", make_tetrahedral());
  groups.emplace_back("octahedral", make_octahedral());
  groups.emplace_back("icosahedral", make_icosahedral());
  {
    std::vector<std::pair<SymmetryGroup, std::size_t>> parts;
    for (std::size_t i = 0; i < 3; ++i) parts.emplace_back(make_cyclic_2d(2), i);
    groups.emplace_back("(C2)^3", product(parts));
  }
  if (config.inject_corrupted_group) {
    GroupDescriptor d;
    d.kind = "custom";
    groups.emplace_back("corrupted", SymmetryGroup::from_rotations(
                                         d, {Rotation2(0.0), Rotation2(kPi / 2), Rotation2(kPi / 2 + 0.1)}));
  }

  // Group axioms and orders.
  for (const auto& [name, g] : groups) {
    const GroupAxiomReport r = verify_group_axioms(g, 1e-9);
    add("group_axioms:" + name, r.ok(), "order=" + std::to_string(g.order()) + " max_dev=" + fmt(r.max_deviation));
  }

  auto rotation_space = [](int dim) {
    return Space{dim, 1, dim == 2 ? Bounds::box2d(0, 0, 0, 0) : Bounds::box3d(Eigen::Vector3d::Zero(), Eigen::Vector3d::Zero())};
  };
  const MetricWeights unit = MetricWeights::uniform(1);

  // Ball-probability ratio equals 1/|G|.
  {
    struct Case {
      std::string name;
      SymmetryGroup g;
      int dim;
      double eps;
    };
    std::vector<Case> cases;
    cases.push_back({"C4/SO2", make_cyclic_2d(4), 2, 0.1});
    cases.push_back({"octahedral/SO3", make_octahedral(), 3, 0.05});
    for (const auto& c : cases) {
      const Space space = rotation_space(c.dim);
      const Config q = sample_uniform(space, rng);
      const BallProbability b = mc_ball_probability(space, c.g, q, c.eps, unit, config.mc_samples, rng);
      const double expected = 1.0 / static_cast<double>(c.g.order());
      const bool ok = b.quotient_hits > 0 && std::abs(b.ratio - expected) <= 4.0 * b.ratio_stderr + 1e-15;
      add("ball_ratio:" + c.name, ok,
          "ratio=" + fmt(b.ratio) + " expected=" + fmt(expected) + " stderr=" + fmt(b.ratio_stderr));
    }
  }

  // Orbit separation versus the injectivity-radius bound.
  for (const auto& [name, g] : groups) {
    if (name == "corrupted" || g.is_trivial() || g.factors().size() != 1) continue;
    const Space space = rotation_space(g.dim());
    const double sep = min_orbit_separation(g, space, unit, 20, rng);
    const double bound = 2.0 * kPi / static_cast<double>(g.order());
    const bool cyclic2 = g.descriptor().kind == "cyclic2d";
    const bool ok = cyclic2 ? std::abs(sep - bound) <= 1e-9 : sep >= bound - 1e-9;
    add("orbit_separation:" + name, ok, "separation=" + fmt(sep) + " bound=" + fmt(bound));
    const double rinj = injectivity_radius_bound(space, g, unit);
    add("injectivity_bound:" + name, rinj <= 0.5 * sep + 1e-9, "bound=" + fmt(rinj) + " half_sep=" + fmt(0.5 * sep));
  }

  // Closed-form |G| scaling of the sample-complexity expressions.
  {
    BoundInputs in;
    in.path_length = 1.0;
    in.clearance = 0.2;
    in.eta = 0.5;
    in.d = 3;
    in.p = 0.01;
    in.free_volume = 50.0;
    in.c_star = 4.0;
    BoundInputs g8 = in;
    g8.group_order = 8;
    const double k = 1000.0;
    const double eq3 = std::exp(log_rrt_failure_bound(k, g8) - log_rrt_failure_bound(k, in));
    const double eq3_expected = std::exp(-7.0 * in.p * k);
    add("rrt_bound_scaling", std::abs(eq3 / eq3_expected - 1.0) < 1e-12, "ratio=" + fmt(eq3));
    const double eq4 = prm_expected_samples(g8) / prm_expected_samples(in);
    add("prm_samples_scaling", std::abs(eq4 - 0.125) < 1e-15, "ratio=" + fmt(eq4));
    const double eq5 = prm_star_rho(g8) / prm_star_rho(in);
    add("prm_radius_scaling", std::abs(eq5 - 0.5) < 1e-15, "ratio=" + fmt(eq5));
    const double eq6 = rrt_star_rho(g8) / rrt_star_rho(in);
    add("rrt_star_radius_scaling", std::abs(eq6 - std::pow(8.0, -0.25)) < 1e-15, "ratio=" + fmt(eq6));
  }

  // Free volume of an empty world and its quotient.
  {
    const World empty(2, Bounds::box2d(0, 0, 4, 4));
    const auto objects = make_objects("square", 2);
    const MetricWeights w = weights_of(objects);
    const VolumeEstimate v = estimate_free_volume(empty, objects, *objects[0].symmetry, w, 20000, rng);
    const double full = config_space_volume(Space{2, 1, empty.bounds()}, w);
    // Bounds constrain only the reference point, so every sample is free.
    add("free_volume_empty", std::abs(v.volume - full) <= 3.0 * v.standard_error + 1e-9 * full,
        "estimate=" + fmt(v.volume) + " full=" + fmt(full));
    add("quotient_volume", std::abs(v.quotient_volume * 4.0 - v.volume) <= 1e-12 * v.volume,
        "quotient=" + fmt(v.quotient_volume));
  }

  // Clearance carries over to the quotient.
  {
    const World world(2, Bounds::box2d(0, 0, 10, 10),
                      {ConvexShape(2, {{4, 4, 0}, {6, 4, 0}, {6, 6, 0}, {4, 6, 0}})});
    const auto objects = make_objects("square", 2);
    const MetricWeights w = weights_of(objects);
    const std::vector<Config> path{Config::planar(1.5, 1.5, 0.3), Config::planar(8.5, 1.5, 1.0)};
    const ClearanceReport c = clearance_check(path, 0.1, world, objects, *objects[0].symmetry, w, 2000, rng);
    add("clearance_quotient", c.consistent() && c.base_clear, "probes=" + std::to_string(c.probes));
  }

  // Action by isometries and even orbit spacing.
  {
    const auto& g = groups[3].second;  // C4
    const Space space{2, 1, Bounds::box2d(0, 0, 10, 10)};
    const MetricWeights w = MetricWeights::uniform(1, 0.7);
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
      const Config a = sample_uniform(space, rng);
      const Config b = sample_uniform(space, rng);
      for (std::size_t e = 0; e < g.order(); ++e) {
        worst = std::max(worst, std::abs(dist_config(act(g, e, a), act(g, e, b), w) - dist_config(a, b, w)));
        const Config ga = act(g, e, a);
        const Config gga = act(g, e, ga);
        worst = std::max(worst, std::abs(dist_config(a, ga, w) - dist_config(ga, gga, w)));
      }
    }
    add("isometric_action", worst <= 1e-9, "max_dev=" + fmt(worst));
  }
  return report;
}

Json theory_to_json(const TheoryReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"passed", report.all_passed()}, {"checks", std::move(checks)}};
}

TheoryReport theory_from_json(const Json& j) {
  TheoryReport r;
  for (const auto& c : j.at("checks")) {
    r.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(), c.at("detail").get<std::string>()});
  }
  return r;
}

}  // namespace symplan
