#include "symplan/planners.hpp"

#include "symplan/nearest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace symplan {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Adds the elapsed time of a scope to an accumulator.
class ScopedTimer {
 public:
  explicit ScopedTimer(double& sink) : sink_(sink), t0_(Clock::now()) {}
  ~ScopedTimer() { sink_ += seconds_since(t0_); }
  ScopedTimer(const ScopedTimer&) = delete;
  ScopedTimer& operator=(const ScopedTimer&) = delete;

 private:
  double& sink_;
  Clock::time_point t0_;
};

struct Steer {
  Config target;
  double length = 0.0;
};

// Point at most eta along the minimizing geodesic from `from` toward the class
// of `toward`. The target's own class distance from `from` equals its
// distance in Q, so the new edge needs no group element.
std::optional<Steer> steer(const PlanningSpace& space, const Config& from, const Config& toward, double eta) {
  const QDist d = space.dist(from, toward);
  if (d.length < 1e-12) return std::nullopt;
  Config target = act(space.group(), d.element, toward);
  if (d.length > eta) {
    try {
      target = geodesic(from, target, eta / d.length);
    } catch (const std::domain_error&) {
      return std::nullopt;
    }
  }
  const double length = dist_config(from, target, space.weights());
  return Steer{std::move(target), length};
}

void check_params(const PlannerParams& p) {
  if (!(p.eta > 0.0) || !(p.resolution > 0.0) || !(p.rho_rrt > 0.0) || !(p.rho_prm > 0.0)) {
    throw std::invalid_argument("planner parameters must be positive");
  }
}

std::vector<std::size_t> chain_to_root(const std::vector<std::size_t>& parent, std::size_t v) {
  std::vector<std::size_t> out{v};
  while (parent[v] != v) {
    v = parent[v];
    out.push_back(v);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

void finish_success(PlanResult& r, const Roadmap& rm, std::span<const std::size_t> vertex_path,
                    const PlanningSpace& space) {
  r.status = PlanStatus::success;
  r.path = lift_path(rm, vertex_path, space.weights());
  r.length = r.path.total_length;
}

constexpr std::size_t kNoVertex = std::numeric_limits<std::size_t>::max();

}  // namespace

GroupPtr joint_group(std::span<const MovingObject> objects) {
  if (objects.empty()) throw std::invalid_argument("no objects");
  if (objects.size() == 1) {
    return objects[0].symmetry;
  }
  std::vector<std::pair<SymmetryGroup, std::size_t>> parts;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (objects[i].symmetry->factors().size() != 1) {
      throw std::invalid_argument("each object needs a single-factor group");
    }
    if (objects[i].symmetry->is_trivial()) continue;
    parts.emplace_back(*objects[i].symmetry, i);
  }
  if (parts.empty()) return std::make_shared<const SymmetryGroup>(make_trivial(objects[0].shape.dim()));
  return std::make_shared<const SymmetryGroup>(product(parts));
}

PlanningSpace::PlanningSpace(World world, std::vector<MovingObject> objects, GroupPtr group)
    : world_(std::move(world)),
      objects_(std::move(objects)),
      group_(std::move(group)),
      weights_(weights_of(objects_)),
      space_{world_.dim(), objects_.size(), world_.bounds()} {
  if (!group_) throw std::invalid_argument("planning space needs a group");
  if (group_->dim() != world_.dim()) throw std::invalid_argument("group and world dimensions differ");
  for (const auto& o : objects_) {
    if (o.shape.dim() != world_.dim()) throw std::invalid_argument("object and world dimensions differ");
  }
}

PlanningSpace PlanningSpace::aware(World world, std::vector<MovingObject> objects) {
  GroupPtr g = joint_group(objects);
  return PlanningSpace(std::move(world), std::move(objects), std::move(g));
}

PlanningSpace PlanningSpace::unaware(World world, std::vector<MovingObject> objects) {
  auto g = std::make_shared<const SymmetryGroup>(make_trivial(world.dim()));
  return PlanningSpace(std::move(world), std::move(objects), std::move(g));
}

bool PlanningSpace::is_free(const Config& q, std::size_t* checks) const {
  if (checks) ++*checks;
  return symplan::is_free(world_, objects_, q);
}

bool PlanningSpace::segment_free(const Config& a, const Config& b, double resolution, std::size_t* checks) const {
  try {
    return edge_free(world_, objects_, a, b, resolution, checks);
  } catch (const std::domain_error&) {
    return false;
  }
}

std::optional<EdgeEnd> PlanningSpace::connect(const Config& a, const Config& b, double resolution,
                                              std::size_t* checks) const {
  return local_plan(ClassPoint(a, group_), ClassPoint(b, group_), world_, objects_, resolution, checks);
}

std::string to_string(PlanStatus status) {
  switch (status) {
    case PlanStatus::success:
      return "success";
    case PlanStatus::exhausted:
      return "exhausted";
    case PlanStatus::infeasible_endpoints:
      return "infeasible_endpoints";
  }
  return "unknown";
}

std::size_t prm_star_k(std::size_t n, double k_const) {
  if (n < 2) return 1;
  return static_cast<std::size_t>(std::ceil(k_const * std::log(static_cast<double>(n))));
}

double prm_star_radius(std::size_t n, double rho, std::size_t d) {
  if (n < 2) return rho;
  const double nn = static_cast<double>(n);
  return rho * std::pow(std::log(nn) / nn, 1.0 / static_cast<double>(d));
}

double rrt_star_radius(std::size_t n, double rho, double eta, std::size_t d) {
  if (n < 2) return 0.0;
  const double nn = static_cast<double>(n);
  return std::min(eta, rho * std::pow(std::log(nn) / nn, 1.0 / static_cast<double>(d + 1)));
}

PlanResult rrt(const Problem& problem, const PlanningSpace& space, const PlannerParams& params) {
  check_params(params);
  const auto t0 = Clock::now();
  PlanResult r;
  std::size_t* checks = &r.collision_checks;
  if (!space.is_free(problem.start, checks) || !space.is_free(problem.goal, checks)) {
    r.status = PlanStatus::infeasible_endpoints;
    r.wall_time_s = seconds_since(t0);
    return r;
  }
  Rng rng(params.seed);
  Roadmap rm(space.group_ptr());
  std::vector<std::size_t> parent;
  rm.add_vertex(problem.start);
  parent.push_back(0);
  std::size_t goal_id = kNoVertex;

  auto try_goal = [&](std::size_t v) {
    const Config& q = rm.vertex(v).q;
    if (space.dist(q, problem.goal).length > params.eta) return false;
    std::optional<EdgeEnd> e;
    {
      ScopedTimer t(r.phases.local_plan_s);
      e = space.connect(q, problem.goal, params.resolution, checks);
    }
    if (!e) return false;
    goal_id = rm.add_vertex(problem.goal);
    parent.push_back(v);
    rm.add_edge(v, goal_id, *e);
    return true;
  };

  bool done = try_goal(0);
  while (!done && r.samples < params.max_samples) {
    Config x = [&] {
      ScopedTimer t(r.phases.sampling_s);
      return space.sample(rng);
    }();
    ++r.samples;
    std::size_t nearest = 0;
    {
      ScopedTimer t(r.phases.nearest_s);
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t v = 0; v < rm.vertex_count(); ++v) {
        const double d = space.dist(rm.vertex(v).q, x).length;
        if (d < best) {
          best = d;
          nearest = v;
        }
      }
    }
    auto s = steer(space, rm.vertex(nearest).q, x, params.eta);
    if (!s) continue;
    bool ok;
    {
      ScopedTimer t(r.phases.local_plan_s);
      ok = space.segment_free(rm.vertex(nearest).q, s->target, params.resolution, checks);
    }
    if (!ok) continue;
    const std::size_t v = rm.add_vertex(s->target);
    parent.push_back(nearest);
    rm.add_edge(nearest, v, EdgeEnd{s->target, s->length, 0});
    done = try_goal(v);
  }
  r.vertices = rm.vertex_count();
  if (done) {
    ScopedTimer t(r.phases.graph_s);
    finish_success(r, rm, chain_to_root(parent, goal_id), space);
  }
  r.wall_time_s = seconds_since(t0);
  return r;
}

PlanResult birrt(const Problem& problem, const PlanningSpace& space, const PlannerParams& params) {
  check_params(params);
  const auto t0 = Clock::now();
  PlanResult r;
  std::size_t* checks = &r.collision_checks;
  if (!space.is_free(problem.start, checks) || !space.is_free(problem.goal, checks)) {
    r.status = PlanStatus::infeasible_endpoints;
    r.wall_time_s = seconds_since(t0);
    return r;
  }
  Rng rng(params.seed);
  // Both trees live in one roadmap with edges in both directions.
  Roadmap rm(space.group_ptr());
  std::vector<std::size_t> parent;
  std::vector<int> tree_of;
  std::array<std::vector<std::size_t>, 2> members;
  auto add = [&](Config q, int tree, std::size_t par) {
    const std::size_t v = rm.add_vertex(std::move(q));
    parent.push_back(par == kNoVertex ? v : par);
    tree_of.push_back(tree);
    members[static_cast<std::size_t>(tree)].push_back(v);
    return v;
  };
  add(problem.start, 0, kNoVertex);
  const std::size_t root_b = add(problem.goal, 1, kNoVertex);

  auto nearest_in = [&](int tree, const Config& x) {
    ScopedTimer t(r.phases.nearest_s);
    std::size_t best_v = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t v : members[static_cast<std::size_t>(tree)]) {
      const double d = space.dist(rm.vertex(v).q, x).length;
      if (d < best) {
        best = d;
        best_v = v;
      }
    }
    return best_v;
  };
  // Extends `from` toward the class of x by at most eta; returns the new vertex.
  auto extend = [&](int tree, std::size_t from, const Config& x) -> std::optional<std::size_t> {
    auto s = steer(space, rm.vertex(from).q, x, params.eta);
    if (!s) return std::nullopt;
    bool ok;
    {
      ScopedTimer t(r.phases.local_plan_s);
      ok = space.segment_free(rm.vertex(from).q, s->target, params.resolution, checks);
    }
    if (!ok) return std::nullopt;
    const std::size_t v = add(s->target, tree, from);
    rm.add_edge_pair(from, v, EdgeEnd{s->target, s->length, 0});
    return v;
  };
  // Greedy connect of `tree` toward vertex `target` of the other tree.
  auto connect_to = [&](int tree, std::size_t target) -> std::optional<std::size_t> {
    std::size_t cur = nearest_in(tree, rm.vertex(target).q);
    while (true) {
      const QDist d = space.dist(rm.vertex(cur).q, rm.vertex(target).q);
      if (d.length <= params.eta) {
        std::optional<EdgeEnd> e;
        {
          ScopedTimer t(r.phases.local_plan_s);
          e = space.connect(rm.vertex(cur).q, rm.vertex(target).q, params.resolution, checks);
        }
        if (!e) return std::nullopt;
        rm.add_edge_pair(cur, target, *e);
        return cur;
      }
      auto next = extend(tree, cur, rm.vertex(target).q);
      if (!next) return std::nullopt;
      cur = *next;
    }
  };

  std::optional<std::pair<std::size_t, std::size_t>> bridge;  // (vertex in A, vertex in B)
  if (auto c = connect_to(0, root_b)) bridge = std::make_pair(*c, root_b);
  int tree = 0;
  while (!bridge && r.samples < params.max_samples) {
    Config x = [&] {
      ScopedTimer t(r.phases.sampling_s);
      return space.sample(rng);
    }();
    ++r.samples;
    const std::size_t near = nearest_in(tree, x);
    if (auto v = extend(tree, near, x)) {
      if (auto c = connect_to(1 - tree, *v)) {
        bridge = tree == 0 ? std::make_pair(*v, *c) : std::make_pair(*c, *v);
      }
    }
    tree = 1 - tree;
  }
  r.vertices = rm.vertex_count();
  if (bridge) {
    ScopedTimer t(r.phases.graph_s);
    std::vector<std::size_t> path = chain_to_root(parent, bridge->first);
    std::vector<std::size_t> tail = chain_to_root(parent, bridge->second);
    path.insert(path.end(), tail.rbegin(), tail.rend());
    finish_success(r, rm, path, space);
  }
  r.wall_time_s = seconds_since(t0);
  return r;
}

PlanResult rrt_star(const Problem& problem, const PlanningSpace& space, const PlannerParams& params) {
  check_params(params);
  const auto t0 = Clock::now();
  PlanResult r;
  std::size_t* checks = &r.collision_checks;
  if (!space.is_free(problem.start, checks) || !space.is_free(problem.goal, checks)) {
    r.status = PlanStatus::infeasible_endpoints;
    r.wall_time_s = seconds_since(t0);
    return r;
  }
  Rng rng(params.seed);
  const std::size_t d = space.dimension();

  struct Node {
    Config q;
    std::size_t parent;
    EdgeEnd edge;  // from parent
    double cost;
    std::vector<std::size_t> children;
  };
  std::vector<Node> nodes;
  nodes.push_back({problem.start, 0, EdgeEnd{problem.start, 0.0, 0}, 0.0, {}});

  struct GoalLink {
    std::size_t vertex;
    EdgeEnd edge;
  };
  std::vector<GoalLink> goal_links;
  double best_cost = std::numeric_limits<double>::infinity();

  auto timed_connect = [&](const Config& a, const Config& b) {
    ScopedTimer t(r.phases.local_plan_s);
    return space.connect(a, b, params.resolution, checks);
  };
  auto refresh_goal = [&] {
    double c = std::numeric_limits<double>::infinity();
    for (const auto& g : goal_links) c = std::min(c, nodes[g.vertex].cost + g.edge.length);
    if (c < best_cost) {
      best_cost = c;
      r.cost_trace.emplace_back(r.samples, c);
    }
  };
  auto try_goal = [&](std::size_t v) {
    if (space.dist(nodes[v].q, problem.goal).length > params.eta) return;
    if (auto e = timed_connect(nodes[v].q, problem.goal)) goal_links.push_back({v, std::move(*e)});
  };
  auto propagate = [&](std::size_t root) {
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t c : nodes[v].children) {
        nodes[c].cost = nodes[v].cost + nodes[c].edge.length;
        stack.push_back(c);
      }
    }
  };

  try_goal(0);
  refresh_goal();
  std::vector<std::pair<double, std::size_t>> near;  // (distance, vertex)
  while (r.samples < params.max_samples) {
    Config x = [&] {
      ScopedTimer t(r.phases.sampling_s);
      return space.sample(rng);
    }();
    ++r.samples;
    std::size_t nearest = 0;
    {
      ScopedTimer t(r.phases.nearest_s);
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t v = 0; v < nodes.size(); ++v) {
        const double dv = space.dist(nodes[v].q, x).length;
        if (dv < best) {
          best = dv;
          nearest = v;
        }
      }
    }
    auto s = steer(space, nodes[nearest].q, x, params.eta);
    if (!s) continue;
    {
      ScopedTimer t(r.phases.local_plan_s);
      if (!space.segment_free(nodes[nearest].q, s->target, params.resolution, checks)) continue;
    }
    const double radius = rrt_star_radius(nodes.size() + 1, params.rho_rrt, params.eta, d);
    near.clear();
    {
      ScopedTimer t(r.phases.nearest_s);
      for (std::size_t v = 0; v < nodes.size(); ++v) {
        if (v == nearest) continue;
        const double dv = space.dist(nodes[v].q, s->target).length;
        if (dv <= radius) near.emplace_back(dv, v);
      }
    }
    // Cheapest parent first; the nearest vertex's edge is already known free.
    std::size_t parent = nearest;
    EdgeEnd parent_edge{s->target, s->length, 0};
    double cost = nodes[nearest].cost + s->length;
    std::vector<std::pair<double, std::size_t>> order;
    for (const auto& [dv, v] : near) {
      if (nodes[v].cost + dv < cost) order.emplace_back(nodes[v].cost + dv, v);
    }
    std::sort(order.begin(), order.end());
    for (const auto& [c, v] : order) {
      if (auto e = timed_connect(nodes[v].q, s->target)) {
        parent = v;
        parent_edge = std::move(*e);
        cost = nodes[v].cost + parent_edge.length;
        break;
      }
    }
    const std::size_t id = nodes.size();
    nodes.push_back({s->target, parent, std::move(parent_edge), cost, {}});
    nodes[parent].children.push_back(id);

    for (const auto& [dv, v] : near) {
      if (v == parent || v == 0) continue;
      if (nodes[id].cost + dv >= nodes[v].cost - 1e-12) continue;
      auto e = timed_connect(nodes[id].q, nodes[v].q);
      if (!e) continue;
      const double new_cost = nodes[id].cost + e->length;
      if (new_cost >= nodes[v].cost) continue;
      auto& siblings = nodes[nodes[v].parent].children;
      siblings.erase(std::find(siblings.begin(), siblings.end(), v));
      nodes[v].parent = id;
      nodes[v].edge = std::move(*e);
      nodes[v].cost = new_cost;
      nodes[id].children.push_back(v);
      propagate(v);
    }
    try_goal(id);
    refresh_goal();
  }
  r.vertices = nodes.size();
  if (!goal_links.empty()) {
    ScopedTimer t(r.phases.graph_s);
    const GoalLink* best = &goal_links.front();
    for (const auto& g : goal_links) {
      if (nodes[g.vertex].cost + g.edge.length < nodes[best->vertex].cost + best->edge.length) best = &g;
    }
    Roadmap rm(space.group_ptr());
    for (const auto& n : nodes) rm.add_vertex(n.q);
    for (std::size_t v = 1; v < nodes.size(); ++v) rm.add_edge(nodes[v].parent, v, nodes[v].edge);
    const std::size_t goal_id = rm.add_vertex(problem.goal);
    rm.add_edge(best->vertex, goal_id, best->edge);
    std::vector<std::size_t> path{goal_id};
    for (std::size_t v = best->vertex; v != 0; v = nodes[v].parent) path.push_back(v);
    path.push_back(0);
    std::reverse(path.begin(), path.end());
    finish_success(r, rm, path, space);
  }
  r.wall_time_s = seconds_since(t0);
  return r;
}

std::vector<std::size_t> shortest_path(const Roadmap& roadmap, std::size_t start, std::size_t goal) {
  const std::size_t n = roadmap.vertex_count();
  if (start >= n || goal >= n) throw std::out_of_range("vertex id out of range");
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> prev(n, kNoVertex);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> open;
  dist[start] = 0.0;
  open.push({0.0, start});
  while (!open.empty()) {
    const auto [d, v] = open.top();
    open.pop();
    if (d > dist[v]) continue;
    if (v == goal) break;
    for (std::size_t e : roadmap.out_edges(v)) {
      const auto& edge = roadmap.edge(e);
      const double nd = d + edge.length;
      if (nd < dist[edge.target]) {
        dist[edge.target] = nd;
        prev[edge.target] = v;
        open.push({nd, edge.target});
      }
    }
  }
  if (!std::isfinite(dist[goal])) throw std::runtime_error("goal unreachable");
  std::vector<std::size_t> path{goal};
  for (std::size_t v = goal; v != start;) {
    v = prev[v];
    path.push_back(v);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

PrmResult prm_star(std::span<const Problem> problems, const PlanningSpace& space, const PlannerParams& params,
                   PrmVariant variant) {
  check_params(params);
  PrmResult out;
  const auto t0 = Clock::now();
  Rng rng(params.seed);
  const std::size_t d = space.dimension();
  std::vector<Config> free;
  for (std::size_t i = 0; i < params.max_samples; ++i) {
    Config x = space.sample(rng);
    ++out.samples;
    if (space.is_free(x, &out.build_collision_checks)) free.push_back(std::move(x));
  }
  const std::size_t n = free.size();
  const double k_const = params.knn_k_const > 0.0 ? params.knn_k_const
                                                 : std::exp(1.0) * (1.0 + 1.0 / static_cast<double>(d));
  const std::size_t k = prm_star_k(n, k_const);
  const double radius = prm_star_radius(n, params.rho_prm, d);

  auto metric = [&space](const Config& a, const Config& b) { return space.dist(a, b).length; };
  VpTree<Config, decltype(metric)> index(free, metric);
  auto neighbors = [&](const Config& q, bool member) {
    if (variant == PrmVariant::knn) {
      auto nb = index.knn(q, member ? k + 1 : k);
      return nb;
    }
    return index.within(q, radius);
  };

  Roadmap rm(space.group_ptr());
  for (const auto& q : free) rm.add_vertex(q);
  std::unordered_set<std::uint64_t> tried;
  for (std::size_t i = 0; i < n; ++i) {
    for (const Neighbor& nb : neighbors(free[i], true)) {
      const std::size_t j = nb.index;
      if (j == i) continue;
      const std::uint64_t key = static_cast<std::uint64_t>(std::min(i, j)) * n + std::max(i, j);
      if (!tried.insert(key).second) continue;
      if (auto e = space.connect(free[i], free[j], params.resolution, &out.build_collision_checks)) {
        rm.add_edge_pair(i, j, *e);
      }
    }
  }
  out.roadmap_vertices = rm.vertex_count();
  out.roadmap_edges = rm.edge_count();
  out.build_time_s = seconds_since(t0);

  for (const Problem& problem : problems) {
    const auto tq = Clock::now();
    PlanResult r;
    r.samples = out.samples;
    std::size_t* checks = &r.collision_checks;
    if (!space.is_free(problem.start, checks) || !space.is_free(problem.goal, checks)) {
      r.status = PlanStatus::infeasible_endpoints;
      r.wall_time_s = seconds_since(tq);
      out.queries.push_back(std::move(r));
      continue;
    }
    const auto cp = rm.checkpoint();
    const std::size_t s = rm.add_vertex(problem.start);
    const std::size_t g = rm.add_vertex(problem.goal);
    double reach_s = 0.0;
    for (std::size_t qv : {s, g}) {
      std::vector<Neighbor> nb;
      {
        ScopedTimer t(r.phases.nearest_s);
        nb = neighbors(rm.vertex(qv).q, false);
      }
      if (qv == s) reach_s = variant == PrmVariant::knn ? (nb.empty() ? 0.0 : nb.back().distance) : radius;
      ScopedTimer t(r.phases.local_plan_s);
      for (const Neighbor& x : nb) {
        if (auto e = space.connect(rm.vertex(qv).q, free[x.index], params.resolution, checks)) {
          rm.add_edge_pair(qv, x.index, *e);
        }
      }
    }
    if (space.dist(problem.start, problem.goal).length <= reach_s) {
      ScopedTimer t(r.phases.local_plan_s);
      if (auto e = space.connect(problem.start, problem.goal, params.resolution, checks)) rm.add_edge_pair(s, g, *e);
    }
    r.vertices = rm.vertex_count();
    try {
      ScopedTimer t(r.phases.graph_s);
      const auto path = shortest_path(rm, s, g);
      finish_success(r, rm, path, space);
    } catch (const std::runtime_error&) {
      r.status = PlanStatus::exhausted;
    }
    rm.rollback(cp);
    r.wall_time_s = seconds_since(tq);
    out.queries.push_back(std::move(r));
  }
  out.roadmap = std::move(rm);
  return out;
}

PlanResult prm_star(const Problem& problem, const PlanningSpace& space, const PlannerParams& params,
                    PrmVariant variant) {
  PrmResult all = prm_star(std::span<const Problem>(&problem, 1), space, params, variant);
  PlanResult r = std::move(all.queries.front());
  r.wall_time_s += all.build_time_s;
  r.collision_checks += all.build_collision_checks;
  return r;
}

PathCheck validate_path(const PlanResult& result, const Problem& problem, const PlanningSpace& space,
                        double resolution, double tol) {
  PathCheck c;
  const auto& w = result.path.waypoints;
  if (w.empty()) return c;
  c.start_ok = dist_config(w.front(), problem.start, space.weights()) <= tol;
  c.goal_ok = space.dist(w.back(), problem.goal).length <= tol;
  c.segments_free = true;
  double total = 0.0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    total += dist_config(w[i - 1], w[i], space.weights());
    if (!space.segment_free(w[i - 1], w[i], resolution)) c.segments_free = false;
  }
  if (w.size() == 1) c.segments_free = space.is_free(w.front());
  c.length_error = std::abs(total - result.length);
  c.length_ok = c.length_error <= tol;
  return c;
}

}  // namespace symplan
