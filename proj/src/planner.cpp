#include "swarmpath/planner.hpp"

#include <algorithm>
#include <cmath>

namespace swarmpath {

std::vector<Obstacle> Workspace::inflated_obstacles() const {
    std::vector<Obstacle> out;
    out.reserve(obstacles.size());
    const double margin = inflation();
    for (const Obstacle& o : obstacles) {
        out.push_back(margin > 0.0 ? inflate(o, margin) : o);
    }
    return out;
}

void Workspace::validate() const {
    if (!std::isfinite(bounds.xmin) || !std::isfinite(bounds.ymin) ||
        !std::isfinite(bounds.xmax) || !std::isfinite(bounds.ymax) ||
        bounds.xmin >= bounds.xmax || bounds.ymin >= bounds.ymax)
        throw WorkspaceError("bounds", "bounds must be a non-empty finite rectangle");
    if (!std::isfinite(robot_radius) || robot_radius < 0.0)
        throw WorkspaceError("robot_radius", "robot_radius must be >= 0");
    if (!std::isfinite(safety_margin) || safety_margin < 0.0)
        throw WorkspaceError("safety_margin", "safety_margin must be >= 0");
    if (!is_finite(start)) throw WorkspaceError("start", "start must be finite");
    if (!is_finite(goal)) throw WorkspaceError("goal", "goal must be finite");
    if (!bounds.contains(start)) throw WorkspaceError("start", "start outside bounds");
    if (!bounds.contains(goal)) throw WorkspaceError("goal", "goal outside bounds");
    if (start == goal) throw WorkspaceError("goal", "start and goal coincide");
    const std::vector<Obstacle> inflated = inflated_obstacles();
    for (std::size_t i = 0; i < inflated.size(); ++i) {
        if (contains_point(inflated[i], start))
            throw WorkspaceError("start", "start inside inflated obstacle " + std::to_string(i));
        if (contains_point(inflated[i], goal))
            throw WorkspaceError("goal", "goal inside inflated obstacle " + std::to_string(i));
    }
}

GridModel build_grid(Point2 start, Point2 goal, int n, Interval free_range) {
    if (start == goal) throw std::invalid_argument("start and goal coincide");
    if (n < 1) throw std::invalid_argument("waypoint count must be >= 1");

    GridModel grid;
    grid.n = n;
    grid.spacing = distance(start, goal) / (n + 1);
    const double dx = goal.x - start.x;
    const double dy = goal.y - start.y;
    grid.sweep_axis = std::abs(dx) >= std::abs(dy) ? Axis::X : Axis::Y;

    const double from = grid.sweep_axis == Axis::X ? start.x : start.y;
    const double to = grid.sweep_axis == Axis::X ? goal.x : goal.y;
    grid.line_coordinates.resize(n);
    for (int i = 1; i <= n; ++i) {
        grid.line_coordinates[i - 1] = from + i * (to - from) / (n + 1);
    }
    grid.free_ranges.assign(n, free_range);
    return grid;
}

GridModel build_grid(const Workspace& workspace, int n) {
    const double dx = workspace.goal.x - workspace.start.x;
    const double dy = workspace.goal.y - workspace.start.y;
    const Interval free_range =
        std::abs(dx) >= std::abs(dy)
            ? Interval{workspace.bounds.ymin, workspace.bounds.ymax}
            : Interval{workspace.bounds.xmin, workspace.bounds.xmax};
    return build_grid(workspace.start, workspace.goal, n, free_range);
}

double path_length(const Path& path) {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < path.waypoints.size(); ++i) {
        total += distance(path.waypoints[i], path.waypoints[i + 1]);
    }
    return total;
}

double whole_path_objective(const Path& path, Point2 goal) {
    double goal_term = 0.0;
    for (std::size_t i = 1; i + 1 < path.waypoints.size(); ++i) {
        const Point2 wp = path.waypoints[i];
        goal_term += (wp.x - goal.x) * (wp.x - goal.x) + (wp.y - goal.y) * (wp.y - goal.y);
    }
    return path_length(path) + std::sqrt(goal_term);
}

double waypoint_fitness(Point2 candidate, Point2 previous, Point2 goal,
                        std::span<const Obstacle> inflated_obstacles, double penalty,
                        PenaltyMode mode) {
    const double base = distance(previous, candidate) + distance(candidate, goal);
    for (const Obstacle& o : inflated_obstacles) {
        if (contains_point(o, candidate)) {
            return mode == PenaltyMode::Hard ? std::numeric_limits<double>::infinity()
                                             : base + penalty;
        }
    }
    return base;
}

double waypoint_fitness(Point2 candidate, Point2 previous, Point2 goal,
                        const Workspace& workspace, PenaltyMode mode) {
    const std::vector<Obstacle> inflated = workspace.inflated_obstacles();
    return waypoint_fitness(candidate, previous, goal, inflated,
                            10.0 * workspace.bounds.diagonal(), mode);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + index * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

namespace {

// Strict-mode waypoint objective: the violation test covers the whole
// segment previous -> candidate (endpoint containment included), so the
// swarm optimizes the same feasibility the final check grades. The last
// waypoint additionally answers for the closing segment to the goal, which
// no later PSO run gets a chance to fix.
double waypoint_fitness_strict(Point2 candidate, Point2 previous, Point2 goal,
                               std::span<const Obstacle> inflated, double penalty,
                               PenaltyMode mode, bool check_closing) {
    const double base = distance(previous, candidate) + distance(candidate, goal);
    bool hit = false;
    for (const Obstacle& o : inflated) {
        if (segment_intersects(o, previous, candidate)) {
            hit = true;
            break;
        }
    }
    if (!hit && check_closing) {
        for (const Obstacle& o : inflated) {
            if (segment_intersects(o, candidate, goal)) {
                hit = true;
                break;
            }
        }
    }
    if (hit) {
        return mode == PenaltyMode::Hard ? std::numeric_limits<double>::infinity()
                                         : base + penalty;
    }
    return base;
}

}  // namespace

PlanResult plan(const Workspace& workspace, const PsoConfig& pso_config, int n,
                bool strict_segments, PenaltyMode mode) {
    workspace.validate();
    pso_config.validate();
    if (n < 1) throw std::invalid_argument("waypoint count must be >= 1");

    const std::vector<Obstacle> inflated = workspace.inflated_obstacles();
    const GridModel grid = build_grid(workspace, n);
    const double penalty = 10.0 * workspace.bounds.diagonal();
    const Point2 goal = workspace.goal;

    PlanResult result;
    result.seed = pso_config.rng_seed;
    result.per_waypoint_fitness.reserve(n);
    result.iterations_per_waypoint.reserve(n);
    result.path.waypoints.reserve(static_cast<std::size_t>(n) + 2);
    result.path.waypoints.push_back(workspace.start);

    Point2 previous = workspace.start;
    for (int i = 0; i < n; ++i) {
        PsoConfig cfg = pso_config;
        cfg.rng_seed = derive_seed(pso_config.rng_seed, static_cast<std::uint64_t>(i) + 1);
        const SearchDomain domain =
            SearchDomain::interval(grid.free_ranges[i].lo, grid.free_ranges[i].hi);

        const bool last_line = i == n - 1;
        const FitnessFn fitness = [&, i, last_line](std::span<const double> x) {
            const Point2 candidate = grid.point_on_line(i, x[0]);
            return strict_segments
                       ? waypoint_fitness_strict(candidate, previous, goal, inflated,
                                                 penalty, mode, last_line)
                       : waypoint_fitness(candidate, previous, goal, inflated, penalty,
                                          mode);
        };

        const OptimizeResult best = optimize(cfg, domain, fitness);
        const Point2 wp = grid.point_on_line(i, best.best_position[0]);
        result.per_waypoint_fitness.push_back(best.best_fitness);
        result.iterations_per_waypoint.push_back(best.iterations_used);
        result.path.waypoints.push_back(wp);
        previous = wp;
    }
    result.path.waypoints.push_back(goal);
    result.total_length = path_length(result.path);

    bool feasible = true;
    for (std::size_t i = 1; i + 1 < result.path.waypoints.size() && feasible; ++i) {
        for (const Obstacle& o : inflated) {
            if (contains_point(o, result.path.waypoints[i])) {
                feasible = false;
                break;
            }
        }
    }
    if (strict_segments) {
        for (std::size_t i = 0; i + 1 < result.path.waypoints.size() && feasible; ++i) {
            for (const Obstacle& o : inflated) {
                if (segment_intersects(o, result.path.waypoints[i],
                                       result.path.waypoints[i + 1])) {
                    feasible = false;
                    break;
                }
            }
        }
    }
    result.feasible = feasible;
    return result;
}

}  // namespace swarmpath
