#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "swarmpath/geometry.hpp"
#include "swarmpath/pso.hpp"

namespace swarmpath {

struct Bounds {
    double xmin = 0.0;
    double ymin = 0.0;
    double xmax = 0.0;
    double ymax = 0.0;

    [[nodiscard]] bool contains(Point2 p) const {
        return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
    }
    [[nodiscard]] double diagonal() const {
        return distance({xmin, ymin}, {xmax, ymax});
    }
};

/// Thrown when a workspace violates an invariant; `field` names the part
/// that failed (e.g. "start", "bounds").
class WorkspaceError : public std::invalid_argument {
public:
    WorkspaceError(std::string field, const std::string& message)
        : std::invalid_argument(message), field_(std::move(field)) {}
    [[nodiscard]] const std::string& field() const { return field_; }

private:
    std::string field_;
};

struct Workspace {
    Bounds bounds;
    std::vector<Obstacle> obstacles;
    Point2 start;
    Point2 goal;
    double robot_radius = 0.0;
    double safety_margin = 0.0;

    [[nodiscard]] double inflation() const { return robot_radius + safety_margin; }
    /// Obstacles grown by robot_radius + safety_margin (copies when zero),
    /// reducing the robot to the point at its center.
    [[nodiscard]] std::vector<Obstacle> inflated_obstacles() const;
    /// Throws WorkspaceError unless start/goal are inside bounds, distinct,
    /// and clear of every inflated obstacle.
    void validate() const;
};

enum class Axis { X, Y };

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/**
 * The grid-line workspace model: n lines perpendicular to the dominant axis
 * of goal - start, spaced d(start,goal)/(n+1) apart, each searched along
 * the other axis within free_range.
 */
struct GridModel {
    int n = 0;
    double spacing = 0.0;  // segment spacing Np
    Axis sweep_axis = Axis::X;
    std::vector<double> line_coordinates;  // fixed coordinate per line, index 0 = first
    std::vector<Interval> free_ranges;     // searchable range per line

    [[nodiscard]] Point2 point_on_line(int line_index, double free_coord) const {
        return sweep_axis == Axis::X
                   ? Point2{line_coordinates[line_index], free_coord}
                   : Point2{free_coord, line_coordinates[line_index]};
    }
};

GridModel build_grid(Point2 start, Point2 goal, int n, Interval free_range);
GridModel build_grid(const Workspace& workspace, int n);

struct Path {
    std::vector<Point2> waypoints;  // [start, wp_1, ..., wp_n, goal]
};

double path_length(const Path& path);

/// Whole-path reporting objective: path length plus the root of the summed
/// squared goal distances of the interior waypoints.
double whole_path_objective(const Path& path, Point2 goal);

enum class PenaltyMode {
    Soft,  // feasible value + penalty constant; keeps ordering among invalid points
    Hard,  // +infinity
};

/// Per-waypoint objective: d(previous, candidate) + d(candidate, goal),
/// penalized when the candidate lies inside any inflated obstacle.
double waypoint_fitness(Point2 candidate, Point2 previous, Point2 goal,
                        std::span<const Obstacle> inflated_obstacles, double penalty,
                        PenaltyMode mode = PenaltyMode::Soft);
/// Convenience overload that inflates the workspace obstacles per call and
/// uses the default penalty of 10x the bounds diagonal.
double waypoint_fitness(Point2 candidate, Point2 previous, Point2 goal,
                        const Workspace& workspace, PenaltyMode mode = PenaltyMode::Soft);

struct PlanResult {
    Path path;
    double total_length = 0.0;
    std::vector<double> per_waypoint_fitness;
    std::vector<int> iterations_per_waypoint;
    bool feasible = false;
    std::uint64_t seed = 0;
};

/// Sub-seed for waypoint i, splitmix64-mixed from the base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/**
 * Runs the grid planner: inflate obstacles, build the grid, then one
 * seeded PSO per line, each conditioned on the previous waypoint. With
 * strict_segments the penalty also covers the connecting segment from the
 * previous waypoint, so the optimizer cannot cut obstacle corners between
 * lines; without it only candidate containment is penalized (dense-grid
 * point sampling). Never throws on unreachable layouts; the result comes
 * back with feasible = false instead.
 */
PlanResult plan(const Workspace& workspace, const PsoConfig& pso_config, int n,
                bool strict_segments = true, PenaltyMode mode = PenaltyMode::Soft);

}  // namespace swarmpath
