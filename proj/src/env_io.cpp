#include "swarmpath/env_io.hpp"

#include <json.hpp>

#include <utility>

namespace swarmpath {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

void require_keys(const json& obj, std::string_view path,
                  std::initializer_list<std::string_view> keys) {
    if (!obj.is_object()) throw EnvSchemaError(std::string(path), "expected an object");
    for (std::string_view key : keys) {
        if (!obj.contains(key))
            throw EnvSchemaError(std::string(path), "missing field '" + std::string(key) + "'");
    }
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (std::string_view k : keys) known = known || key == k;
        if (!known)
            throw EnvSchemaError(std::string(path), "unknown field '" + key + "'");
    }
}

double number_at(const json& obj, const std::string& path, const std::string& key) {
    const json& v = obj.at(key);
    if (!v.is_number())
        throw EnvSchemaError(path.empty() ? key : path + "." + key, "expected a number");
    return v.get<double>();
}

Point2 point_at(const json& value, const std::string& path) {
    if (!value.is_array() || value.size() != 2 || !value[0].is_number() ||
        !value[1].is_number())
        throw EnvSchemaError(path, "expected [x, y]");
    return {value[0].get<double>(), value[1].get<double>()};
}

Obstacle parse_obstacle(const json& obj, const std::string& path) {
    if (!obj.is_object() || !obj.contains("kind") || !obj.at("kind").is_string())
        throw EnvSchemaError(path, "expected an object with a 'kind' string");
    const std::string kind = obj.at("kind").get<std::string>();
    if (kind == "circle") {
        require_keys(obj, path, {"kind", "center", "radius"});
        const Point2 center = point_at(obj.at("center"), path + ".center");
        const double radius = number_at(obj, path, "radius");
        try {
            return Circle(center, radius);
        } catch (const std::invalid_argument& e) {
            throw EnvValidationError(path, e.what());
        }
    }
    if (kind == "polygon") {
        require_keys(obj, path, {"kind", "vertices"});
        const json& verts = obj.at("vertices");
        if (!verts.is_array())
            throw EnvSchemaError(path + ".vertices", "expected an array of [x, y]");
        std::vector<Point2> points;
        points.reserve(verts.size());
        for (std::size_t i = 0; i < verts.size(); ++i) {
            points.push_back(
                point_at(verts[i], path + ".vertices[" + std::to_string(i) + "]"));
        }
        try {
            return ConvexPolygon(std::move(points));
        } catch (const std::invalid_argument& e) {
            throw EnvValidationError(path + ".vertices", e.what());
        }
    }
    throw EnvSchemaError(path + ".kind", "unknown obstacle kind '" + kind + "'");
}

}  // namespace

Workspace load_environment(std::string_view document) {
    json root;
    try {
        root = json::parse(document);
    } catch (const json::parse_error& e) {
        throw EnvParseError("", e.what());
    }

    require_keys(root, "", {"schema_version", "bounds", "start", "goal", "robot_radius",
                            "safety_margin", "obstacles"});
    if (!root.at("schema_version").is_number_integer() ||
        root.at("schema_version").get<int>() != 1)
        throw EnvSchemaError("schema_version", "unsupported schema version (expected 1)");

    Workspace ws;
    const json& bounds = root.at("bounds");
    require_keys(bounds, "bounds", {"xmin", "ymin", "xmax", "ymax"});
    ws.bounds = {number_at(bounds, "bounds", "xmin"), number_at(bounds, "bounds", "ymin"),
                 number_at(bounds, "bounds", "xmax"), number_at(bounds, "bounds", "ymax")};
    ws.start = point_at(root.at("start"), "start");
    ws.goal = point_at(root.at("goal"), "goal");
    ws.robot_radius = number_at(root, "", "robot_radius");
    ws.safety_margin = number_at(root, "", "safety_margin");

    const json& obstacles = root.at("obstacles");
    if (!obstacles.is_array()) throw EnvSchemaError("obstacles", "expected an array");
    for (std::size_t i = 0; i < obstacles.size(); ++i) {
        ws.obstacles.push_back(
            parse_obstacle(obstacles[i], "obstacles[" + std::to_string(i) + "]"));
    }

    try {
        ws.validate();
    } catch (const WorkspaceError& e) {
        throw EnvValidationError(e.field(), e.what());
    }
    return ws;
}

std::string serialize_environment(const Workspace& workspace) {
    ordered_json root;
    root["schema_version"] = 1;
    root["bounds"] = {{"xmin", workspace.bounds.xmin},
                      {"ymin", workspace.bounds.ymin},
                      {"xmax", workspace.bounds.xmax},
                      {"ymax", workspace.bounds.ymax}};
    root["start"] = {workspace.start.x, workspace.start.y};
    root["goal"] = {workspace.goal.x, workspace.goal.y};
    root["robot_radius"] = workspace.robot_radius;
    root["safety_margin"] = workspace.safety_margin;
    root["obstacles"] = ordered_json::array();
    for (const Obstacle& o : workspace.obstacles) {
        ordered_json entry;
        if (const auto* circle = std::get_if<Circle>(&o)) {
            entry["kind"] = "circle";
            entry["center"] = {circle->center().x, circle->center().y};
            entry["radius"] = circle->radius();
        } else {
            const auto& poly = std::get<ConvexPolygon>(o);
            entry["kind"] = "polygon";
            entry["vertices"] = ordered_json::array();
            for (const Point2& v : poly.vertices()) {
                entry["vertices"].push_back({v.x, v.y});
            }
        }
        root["obstacles"].push_back(std::move(entry));
    }
    return root.dump(2);
}

namespace {

// Reconstructed layouts: start/goal and obstacle counts are fixed
// (9/7/8 convex polygons, 16 circles); coordinates are hand-authored so
// the straight start-goal segment is blocked and corridors stay wide
// enough for the inflated robot.
constexpr std::string_view kEnv1 = R"({
  "schema_version": 1,
  "bounds": {"xmin": -2.0, "ymin": -1.0, "xmax": 6.5, "ymax": 10.0},
  "start": [0.0, 0.0],
  "goal": [3.5, 9.0],
  "robot_radius": 0.1,
  "safety_margin": 0.2,
  "obstacles": [
    {"kind": "polygon", "vertices": [[0.8, 1.25], [1.45, 2.0], [0.8, 2.75], [0.15, 2.0]]},
    {"kind": "polygon", "vertices": [[2.9, 2.4], [3.7, 3.2], [2.5, 3.3]]},
    {"kind": "polygon", "vertices": [[-1.2, 3.2], [-0.5, 3.5], [-0.5, 4.2], [-1.2, 4.5], [-1.7, 3.85]]},
    {"kind": "polygon", "vertices": [[1.6, 4.35], [2.2, 5.0], [1.6, 5.65], [1.0, 5.0]]},
    {"kind": "polygon", "vertices": [[4.2, 5.0], [5.0, 5.8], [3.8, 5.9]]},
    {"kind": "polygon", "vertices": [[-0.3, 5.9], [0.4, 6.15], [0.3, 6.9], [-0.6, 6.7]]},
    {"kind": "polygon", "vertices": [[2.8, 6.7], [3.4, 7.1], [3.2, 7.8], [2.4, 7.9], [2.1, 7.3]]},
    {"kind": "polygon", "vertices": [[4.9, 7.7], [5.9, 7.7], [5.9, 8.7], [4.9, 8.7]]},
    {"kind": "polygon", "vertices": [[-0.3, 8.0], [0.9, 8.3], [0.2, 9.0]]}
  ]
}
)";

constexpr std::string_view kEnv2 = R"({
  "schema_version": 1,
  "bounds": {"xmin": -1.5, "ymin": -1.0, "xmax": 9.5, "ymax": 10.5},
  "start": [0.0, 0.0],
  "goal": [7.8, 9.2],
  "robot_radius": 0.1,
  "safety_margin": 0.2,
  "obstacles": [
    {"kind": "polygon", "vertices": [[1.3, 0.9], [2.0, 1.6], [1.3, 2.3], [0.6, 1.6]]},
    {"kind": "polygon", "vertices": [[-1.0, 2.6], [0.1, 2.9], [-0.7, 3.7]]},
    {"kind": "polygon", "vertices": [[3.4, 3.4], [4.0, 3.8], [3.9, 4.6], [3.0, 4.7], [2.7, 4.0]]},
    {"kind": "polygon", "vertices": [[6.5, 3.8], [7.5, 3.8], [7.5, 4.8], [6.5, 4.8]]},
    {"kind": "polygon", "vertices": [[1.4, 5.8], [2.6, 6.1], [1.7, 6.9]]},
    {"kind": "polygon", "vertices": [[5.6, 5.9], [6.3, 6.6], [5.6, 7.3], [4.9, 6.6]]},
    {"kind": "polygon", "vertices": [[2.6, 7.9], [3.6, 8.1], [3.7, 8.9], [2.9, 9.3], [2.2, 8.7]]}
  ]
}
)";

constexpr std::string_view kEnv3 = R"({
  "schema_version": 1,
  "bounds": {"xmin": -1.0, "ymin": -1.5, "xmax": 11.0, "ymax": 8.0},
  "start": [0.0, 0.0],
  "goal": [10.0, 6.5],
  "robot_radius": 0.1,
  "safety_margin": 0.2,
  "obstacles": [
    {"kind": "polygon", "vertices": [[0.8, 1.0], [1.5, 0.35], [2.2, 1.0], [1.5, 1.65]]},
    {"kind": "polygon", "vertices": [[2.6, -1.0], [3.8, -0.7], [3.0, 0.0]]},
    {"kind": "polygon", "vertices": [[3.8, 3.0], [4.3, 2.5], [5.0, 2.7], [5.2, 3.4], [4.4, 3.8]]},
    {"kind": "polygon", "vertices": [[4.8, 5.8], [5.8, 5.8], [5.8, 6.8], [4.8, 6.8]]},
    {"kind": "polygon", "vertices": [[6.2, 0.4], [7.4, 0.7], [6.6, 1.6]]},
    {"kind": "polygon", "vertices": [[6.5, 3.6], [7.2, 2.9], [7.9, 3.6], [7.2, 4.3]]},
    {"kind": "polygon", "vertices": [[8.0, 5.3], [8.9, 4.9], [9.0, 5.9]]},
    {"kind": "polygon", "vertices": [[9.3, 1.2], [10.3, 1.2], [10.3, 2.2], [9.3, 2.2]]}
  ]
}
)";

constexpr std::string_view kEnv4 = R"({
  "schema_version": 1,
  "bounds": {"xmin": -5.0, "ymin": -4.0, "xmax": 10.0, "ymax": 13.0},
  "start": [-3.0, 11.0],
  "goal": [8.0, -2.0],
  "robot_radius": 0.1,
  "safety_margin": 0.2,
  "obstacles": [
    {"kind": "circle", "center": [-1.3, 9.0], "radius": 0.5},
    {"kind": "circle", "center": [0.5, 10.2], "radius": 0.45},
    {"kind": "circle", "center": [-3.4, 7.6], "radius": 0.5},
    {"kind": "circle", "center": [1.0, 8.0], "radius": 0.55},
    {"kind": "circle", "center": [-1.2, 6.2], "radius": 0.45},
    {"kind": "circle", "center": [2.9, 6.9], "radius": 0.5},
    {"kind": "circle", "center": [0.8, 4.6], "radius": 0.5},
    {"kind": "circle", "center": [3.3, 4.3], "radius": 0.55},
    {"kind": "circle", "center": [5.5, 3.0], "radius": 0.5},
    {"kind": "circle", "center": [7.6, 2.4], "radius": 0.45},
    {"kind": "circle", "center": [4.2, 1.2], "radius": 0.5},
    {"kind": "circle", "center": [6.3, 0.0], "radius": 0.4},
    {"kind": "circle", "center": [1.9, 2.3], "radius": 0.45},
    {"kind": "circle", "center": [-0.5, 2.0], "radius": 0.5},
    {"kind": "circle", "center": [3.6, -1.2], "radius": 0.45},
    {"kind": "circle", "center": [8.8, -0.8], "radius": 0.4}
  ]
}
)";

}  // namespace

std::string_view bundled_environment_json(int id) {
    switch (id) {
        case 1: return kEnv1;
        case 2: return kEnv2;
        case 3: return kEnv3;
        case 4: return kEnv4;
        default: throw std::out_of_range("bundled environment id must be 1..4");
    }
}

Workspace bundled_environment(int id) {
    return load_environment(bundled_environment_json(id));
}

}  // namespace swarmpath
