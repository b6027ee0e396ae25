#pragma once

#include <optional>
#include <string>
#include <vector>

#include "swarmpath/planner.hpp"

namespace swarmpath {

/// Everything a single planning run reports. Emitted human-readable and as
/// JSON; wall_ms is the only field that varies between identical runs.
struct RunReport {
    std::string environment;  // file path or "bundled:N"
    std::uint64_t seed = 0;
    PsoConfig pso;
    int waypoints = 0;
    bool strict_segments = true;
    PenaltyMode penalty_mode = PenaltyMode::Soft;
    bool feasible = false;
    double path_length = 0.0;
    std::optional<double> oracle_length;
    std::optional<double> length_ratio;  // path_length / oracle_length
    double wall_ms = 0.0;
    std::vector<int> iterations_per_waypoint;
};

struct SweepReport {
    std::vector<RunReport> runs;
    double success_rate = 0.0;
    double length_min = 0.0;
    double length_mean = 0.0;
    double length_max = 0.0;
    double mean_wall_ms = 0.0;
};

/// CSV with an "x,y" header and one shortest-round-trip row per waypoint.
std::string path_to_csv(const Path& path);
Path path_from_csv(std::string_view csv);

std::string report_to_json(const RunReport& report);
std::string sweep_to_json(const SweepReport& report);

SweepReport aggregate_sweep(std::vector<RunReport> runs);

/// SVG 1.1 scene: bounds frame, raw obstacles filled, inflated outlines
/// dashed, optional oracle polyline, planned path polyline, start/goal dots.
std::string render_svg(const Workspace& workspace, const Path* path,
                       const std::vector<Point2>* oracle_polyline = nullptr);

}  // namespace swarmpath
