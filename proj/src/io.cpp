#include "symplan/io.hpp"

#include <fstream>
#include <stdexcept>

namespace symplan {

namespace {

Json vec_to_json(const Eigen::Vector3d& v, int dim) {
  Json out = Json::array();
  for (int k = 0; k < dim; ++k) out.push_back(v[k]);
  return out;
}

Eigen::Vector3d vec_from_json(const Json& j, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) throw std::invalid_argument("vector of wrong length");
  Eigen::Vector3d v = Eigen::Vector3d::Zero();
  for (int k = 0; k < dim; ++k) v[k] = j.at(static_cast<std::size_t>(k)).get<double>();
  return v;
}

}  // namespace

Json config_to_json(const Config& q) {
  Json objects = Json::array();
  for (const auto& o : q.objects()) {
    Json e{{"t", vec_to_json(o.translation, q.dim())}};
    if (const auto* r2 = std::get_if<Rotation2>(&o.rotation)) {
      e["angle"] = r2->angle();
    } else {
      const auto& h = std::get<Rotation3>(o.rotation).quaternion();
      e["q"] = {h.w(), h.x(), h.y(), h.z()};
    }
    objects.push_back(std::move(e));
  }
  return {{"dim", q.dim()}, {"objects", std::move(objects)}};
}

Config config_from_json(const Json& j) {
  const int dim = j.at("dim").get<int>();
  std::vector<ObjectPose> objects;
  for (const auto& e : j.at("objects")) {
    ObjectPose p;
    p.translation = vec_from_json(e.at("t"), dim);
    if (dim == 2) {
      p.rotation = Rotation2(e.at("angle").get<double>());
    } else {
      const auto& h = e.at("q");
      if (h.size() != 4) throw std::invalid_argument("quaternion needs 4 entries");
      p.rotation = Rotation3(Eigen::Quaterniond(h[0].get<double>(), h[1].get<double>(), h[2].get<double>(),
                                                h[3].get<double>()));
    }
    objects.push_back(std::move(p));
  }
  return Config(dim, std::move(objects));
}

Json group_to_json(const GroupDescriptor& g) {
  Json j{{"kind", g.kind}};
  if (g.kind == "cyclic2d" || g.kind == "cyclic3d" || g.kind == "dihedral") j["n"] = g.n;
  if (g.kind == "cyclic3d" || g.kind == "dihedral") j["axis"] = vec_to_json(g.axis, 3);
  if (g.kind == "dihedral") j["perp"] = vec_to_json(g.perp, 3);
  if (g.kind == "product") {
    Json factors = Json::array();
    for (const auto& [sub, object] : g.factors) factors.push_back({{"group", group_to_json(sub)}, {"object", object}});
    j["factors"] = std::move(factors);
  }
  return j;
}

GroupDescriptor group_from_json(const Json& j) {
  GroupDescriptor g;
  g.kind = j.at("kind").get<std::string>();
  if (j.contains("n")) g.n = j.at("n").get<int>();
  if (j.contains("axis")) g.axis = vec_from_json(j.at("axis"), 3);
  if (j.contains("perp")) g.perp = vec_from_json(j.at("perp"), 3);
  if (j.contains("factors")) {
    for (const auto& f : j.at("factors")) {
      g.factors.emplace_back(group_from_json(f.at("group")), f.at("object").get<std::size_t>());
    }
  }
  return g;
}

Json world_to_json(const World& world) {
  const int dim = world.dim();
  Json obstacles = Json::array();
  for (const auto& o : world.obstacles()) {
    Json verts = Json::array();
    for (const auto& v : o.vertices()) verts.push_back(vec_to_json(v, dim));
    obstacles.push_back({{"vertices", std::move(verts)}});
  }
  return {{"dim", dim},
          {"bounds", {{"lo", vec_to_json(world.bounds().lo, dim)}, {"hi", vec_to_json(world.bounds().hi, dim)}}},
          {"obstacles", std::move(obstacles)}};
}

World world_from_json(const Json& j) {
  const int dim = j.at("dim").get<int>();
  if (dim != 2 && dim != 3) throw std::invalid_argument("scene dimension must be 2 or 3");
  Bounds b;
  b.lo = vec_from_json(j.at("bounds").at("lo"), dim);
  b.hi = vec_from_json(j.at("bounds").at("hi"), dim);
  std::vector<ConvexShape> obstacles;
  for (const auto& o : j.value("obstacles", Json::array())) {
    std::vector<Eigen::Vector3d> verts;
    for (const auto& v : o.at("vertices")) verts.push_back(vec_from_json(v, dim));
    obstacles.emplace_back(dim, std::move(verts));
  }
  return World(dim, b, std::move(obstacles));
}

World load_world(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scene file " + path.string());
  return world_from_json(Json::parse(in));
}

void save_world(const World& world, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write scene file " + path.string());
  out << world_to_json(world).dump(2) << '\n';
}

Json roadmap_to_json(const Roadmap& roadmap) {
  Json vertices = Json::array();
  for (std::size_t v = 0; v < roadmap.vertex_count(); ++v) vertices.push_back(config_to_json(roadmap.vertex(v).q));
  Json edges = Json::array();
  for (std::size_t e = 0; e < roadmap.edge_count(); ++e) {
    const auto& edge = roadmap.edge(e);
    edges.push_back({{"src", edge.source},
                     {"dst", edge.target},
                     {"q_e", config_to_json(edge.endpoint)},
                     {"length", edge.length},
                     {"element", edge.element}});
  }
  return {{"group", group_to_json(roadmap.group().descriptor())}, {"vertices", vertices}, {"edges", edges}};
}

Roadmap roadmap_from_json(const Json& j) {
  Roadmap rm(std::make_shared<const SymmetryGroup>(make_group(group_from_json(j.at("group")))));
  for (const auto& v : j.at("vertices")) rm.add_vertex(config_from_json(v));
  for (const auto& e : j.at("edges")) {
    rm.add_edge(e.at("src").get<std::size_t>(), e.at("dst").get<std::size_t>(),
                EdgeEnd{config_from_json(e.at("q_e")), e.at("length").get<double>(), e.at("element").get<std::size_t>()});
  }
  return rm;
}

Json plan_result_to_json(const PlanResult& r, bool with_waypoints) {
  Json j{{"status", to_string(r.status)},
         {"length", r.length},
         {"samples", r.samples},
         {"vertices", r.vertices},
         {"collision_checks", r.collision_checks},
         {"wall_time_s", r.wall_time_s},
         {"phases",
          {{"sampling_s", r.phases.sampling_s},
           {"nearest_s", r.phases.nearest_s},
           {"local_plan_s", r.phases.local_plan_s},
           {"graph_s", r.phases.graph_s}}}};
  if (with_waypoints) {
    Json w = Json::array();
    for (const auto& q : r.path.waypoints) w.push_back(config_to_json(q));
    j["waypoints"] = std::move(w);
  }
  return j;
}

}  // namespace symplan
