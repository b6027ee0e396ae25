#include "swarmpath/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace swarmpath {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[32];
    const int len = std::snprintf(buf, sizeof buf, "%.17g", v);
    return {buf, static_cast<std::size_t>(len)};
}

ordered_json pso_to_json(const PsoConfig& c) {
    return {{"swarm_size", c.swarm_size},
            {"max_iterations", c.max_iterations},
            {"omega_max", c.omega_max},
            {"omega_min", c.omega_min},
            {"c1", c.c1},
            {"c2", c.c2},
            {"v_max", c.v_max},
            {"v_init_min", c.v_init_min},
            {"convergence_epsilon", c.convergence_epsilon}};
}

}  // namespace

std::string path_to_csv(const Path& path) {
    std::string out = "x,y\n";
    for (const Point2& p : path.waypoints) {
        out += format_double(p.x);
        out += ',';
        out += format_double(p.y);
        out += '\n';
    }
    return out;
}

Path path_from_csv(std::string_view csv) {
    std::istringstream stream{std::string(csv)};
    std::string line;
    if (!std::getline(stream, line) || line != "x,y")
        throw std::invalid_argument("csv must start with an 'x,y' header");
    Path path;
    while (std::getline(stream, line)) {
        if (line.empty()) continue;
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("csv row missing comma: " + line);
        Point2 p;
        const auto rx =
            std::from_chars(line.data(), line.data() + comma, p.x);
        const auto ry =
            std::from_chars(line.data() + comma + 1, line.data() + line.size(), p.y);
        if (rx.ec != std::errc{} || ry.ec != std::errc{})
            throw std::invalid_argument("csv row is not numeric: " + line);
        path.waypoints.push_back(p);
    }
    return path;
}

std::string report_to_json(const RunReport& report) {
    ordered_json root;
    root["environment"] = report.environment;
    root["seed"] = report.seed;
    root["pso"] = pso_to_json(report.pso);
    root["waypoints"] = report.waypoints;
    root["strict_segments"] = report.strict_segments;
    root["penalty_mode"] = report.penalty_mode == PenaltyMode::Soft ? "soft" : "hard";
    root["feasible"] = report.feasible;
    root["path_length"] = report.path_length;
    if (report.oracle_length) {
        root["oracle_length"] = *report.oracle_length;
        root["length_ratio"] = *report.length_ratio;
    } else {
        root["oracle_length"] = nullptr;
        root["length_ratio"] = nullptr;
    }
    root["wall_ms"] = report.wall_ms;
    root["iterations_per_waypoint"] = report.iterations_per_waypoint;
    return root.dump(2);
}

SweepReport aggregate_sweep(std::vector<RunReport> runs) {
    SweepReport sweep;
    sweep.runs = std::move(runs);
    if (sweep.runs.empty()) return sweep;
    double feasible = 0.0;
    double sum = 0.0;
    double wall = 0.0;
    sweep.length_min = std::numeric_limits<double>::infinity();
    sweep.length_max = -std::numeric_limits<double>::infinity();
    for (const RunReport& r : sweep.runs) {
        feasible += r.feasible ? 1.0 : 0.0;
        sum += r.path_length;
        wall += r.wall_ms;
        sweep.length_min = std::min(sweep.length_min, r.path_length);
        sweep.length_max = std::max(sweep.length_max, r.path_length);
    }
    const double n = static_cast<double>(sweep.runs.size());
    sweep.success_rate = feasible / n;
    sweep.length_mean = sum / n;
    sweep.mean_wall_ms = wall / n;
    return sweep;
}

std::string sweep_to_json(const SweepReport& report) {
    ordered_json root;
    root["runs"] = ordered_json::array();
    for (const RunReport& r : report.runs) {
        root["runs"].push_back(ordered_json::parse(report_to_json(r)));
    }
    root["success_rate"] = report.success_rate;
    root["length_min"] = report.length_min;
    root["length_mean"] = report.length_mean;
    root["length_max"] = report.length_max;
    root["mean_wall_ms"] = report.mean_wall_ms;
    return root.dump(2);
}

namespace {

void append_polygon_points(std::string& svg, const ConvexPolygon& poly) {
    for (std::size_t i = 0; i < poly.vertices().size(); ++i) {
        if (i) svg += ' ';
        svg += format_double(poly.vertices()[i].x);
        svg += ',';
        svg += format_double(poly.vertices()[i].y);
    }
}

void append_polyline(std::string& svg, const std::vector<Point2>& points,
                     const char* style) {
    svg += "  <polyline fill=\"none\" ";
    svg += style;
    svg += " points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i) svg += ' ';
        svg += format_double(points[i].x);
        svg += ',';
        svg += format_double(points[i].y);
    }
    svg += "\"/>\n";
}

}  // namespace

std::string render_svg(const Workspace& workspace, const Path* path,
                       const std::vector<Point2>* oracle_polyline) {
    const Bounds& b = workspace.bounds;
    const double width = b.xmax - b.xmin;
    const double height = b.ymax - b.ymin;
    const double pixels = 800.0;
    const double scale = pixels / width;

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           format_double(pixels) + "\" height=\"" + format_double(height * scale) +
           "\" viewBox=\"" + format_double(b.xmin) + " " + format_double(-b.ymax) + " " +
           format_double(width) + " " + format_double(height) + "\">\n";
    // Workspace y grows upward; flip into SVG's downward y once here.
    svg += "<g transform=\"scale(1,-1)\" stroke-width=\"" + format_double(width / 400.0) +
           "\">\n";
    svg += "  <rect x=\"" + format_double(b.xmin) + "\" y=\"" + format_double(b.ymin) +
           "\" width=\"" + format_double(width) + "\" height=\"" + format_double(height) +
           "\" fill=\"white\" stroke=\"black\"/>\n";

    const std::vector<Obstacle> inflated = workspace.inflated_obstacles();
    for (std::size_t i = 0; i < workspace.obstacles.size(); ++i) {
        if (const auto* c = std::get_if<Circle>(&workspace.obstacles[i])) {
            svg += "  <circle cx=\"" + format_double(c->center().x) + "\" cy=\"" +
                   format_double(c->center().y) + "\" r=\"" + format_double(c->radius()) +
                   "\" fill=\"#444444\"/>\n";
            const auto& ic = std::get<Circle>(inflated[i]);
            svg += "  <circle cx=\"" + format_double(ic.center().x) + "\" cy=\"" +
                   format_double(ic.center().y) + "\" r=\"" + format_double(ic.radius()) +
                   "\" fill=\"none\" stroke=\"#888888\" stroke-dasharray=\"0.12 0.08\"/>\n";
        } else {
            svg += "  <polygon fill=\"#444444\" points=\"";
            append_polygon_points(svg, std::get<ConvexPolygon>(workspace.obstacles[i]));
            svg += "\"/>\n";
            svg += "  <polygon fill=\"none\" stroke=\"#888888\" stroke-dasharray=\"0.12 "
                   "0.08\" points=\"";
            append_polygon_points(svg, std::get<ConvexPolygon>(inflated[i]));
            svg += "\"/>\n";
        }
    }

    if (oracle_polyline) {
        append_polyline(svg, *oracle_polyline,
                        "stroke=\"#2060c0\" stroke-dasharray=\"0.2 0.1\"");
    }
    if (path) {
        append_polyline(svg, path->waypoints, "stroke=\"#d02020\"");
    }

    const double marker = std::max(width, height) / 120.0;
    svg += "  <circle cx=\"" + format_double(workspace.start.x) + "\" cy=\"" +
           format_double(workspace.start.y) + "\" r=\"" + format_double(marker) +
           "\" fill=\"#108010\"/>\n";
    svg += "  <circle cx=\"" + format_double(workspace.goal.x) + "\" cy=\"" +
           format_double(workspace.goal.y) + "\" r=\"" + format_double(marker) +
           "\" fill=\"#d02020\"/>\n";
    svg += "</g>\n</svg>\n";
    return svg;
}

}  // namespace swarmpath
