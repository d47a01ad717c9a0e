#pragma once

// JSON forms of configurations, groups, scenes, roadmaps and plan results.

#include "symplan/collision.hpp"
#include "symplan/planners.hpp"
#include "symplan/quotient.hpp"
#include "symplan/symmetry.hpp"

#include <json.hpp>

#include <filesystem>

namespace symplan {

using Json = nlohmann::json;

// Planar object: {"t": [x, y], "angle": a}; spatial: {"t": [x, y, z], "q": [w, x, y, z]}.
Json config_to_json(const Config& q);
Config config_from_json(const Json& j);

// {"kind": ..., "n"?: n, "axis"?: [...], "perp"?: [...], "factors"?: [{"group": ..., "object": i}]}
Json group_to_json(const GroupDescriptor& g);
GroupDescriptor group_from_json(const Json& j);

// {"dim": d, "bounds": {"lo": [...], "hi": [...]}, "obstacles": [{"vertices": [[...], ...]}]}
Json world_to_json(const World& world);
World world_from_json(const Json& j);
World load_world(const std::filesystem::path& path);
void save_world(const World& world, const std::filesystem::path& path);

// {"group": ..., "vertices": [config], "edges": [{"src", "dst", "q_e", "length", "element"}]}
Json roadmap_to_json(const Roadmap& roadmap);
Roadmap roadmap_from_json(const Json& j);

Json plan_result_to_json(const PlanResult& r, bool with_waypoints = true);

}  // namespace symplan
