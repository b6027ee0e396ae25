// The OpenMP kernels must be drop-in replacements for the serial reference:
// identical bits out, regardless of scheduling.

#include <doctest.h>

#include <vector>

#include "swarmpath/env_io.hpp"
#include "swarmpath/planner.hpp"
#include "swarmpath/pso.hpp"

using namespace swarmpath;

namespace {

FitnessFn bundled_fitness(const Workspace& ws, const std::vector<Obstacle>& inflated,
                          const GridModel& grid, int line) {
    const double penalty = 10.0 * ws.bounds.diagonal();
    return [&ws, &inflated, &grid, line, penalty](std::span<const double> x) {
        return waypoint_fitness(grid.point_on_line(line, x[0]), ws.start, ws.goal,
                                inflated, penalty);
    };
}

}  // namespace

TEST_CASE("parallel swarm evaluation matches the serial reference bit-for-bit") {
    const Workspace ws = bundled_environment(1);
    const std::vector<Obstacle> inflated = ws.inflated_obstacles();
    const GridModel grid = build_grid(ws, 50);

    PsoConfig cfg;
    cfg.swarm_size = 333;  // deliberately not a multiple of any chunk size
    cfg.rng_seed = 99;
    const SearchDomain domain =
        SearchDomain::interval(grid.free_ranges[25].lo, grid.free_ranges[25].hi);
    const SwarmState state = init_swarm(cfg, domain);
    const FitnessFn fitness = bundled_fitness(ws, inflated, grid, 25);

    std::vector<double> serial(cfg.swarm_size, -1.0);
    std::vector<double> parallel(cfg.swarm_size, -2.0);
    evaluate_swarm_serial(state, fitness, serial);
    evaluate_swarm_parallel(state, fitness, parallel);
    CHECK(serial == parallel);
}

TEST_CASE("optimize is invariant to the evaluation kernel") {
    const Workspace ws = bundled_environment(2);
    const std::vector<Obstacle> inflated = ws.inflated_obstacles();
    const GridModel grid = build_grid(ws, 50);
    const FitnessFn fitness = bundled_fitness(ws, inflated, grid, 10);
    const SearchDomain domain =
        SearchDomain::interval(grid.free_ranges[10].lo, grid.free_ranges[10].hi);

    PsoConfig serial_cfg;
    serial_cfg.swarm_size = 100;
    serial_cfg.max_iterations = 50;
    serial_cfg.rng_seed = 7;
    serial_cfg.parallel_eval = false;
    PsoConfig parallel_cfg = serial_cfg;
    parallel_cfg.parallel_eval = true;

    const OptimizeResult a = optimize(serial_cfg, domain, fitness);
    const OptimizeResult b = optimize(parallel_cfg, domain, fitness);
    CHECK(a.best_position == b.best_position);
    CHECK(a.best_fitness == b.best_fitness);
    CHECK(a.iterations_used == b.iterations_used);
}

TEST_CASE("plan is invariant to the evaluation kernel") {
    const Workspace ws = bundled_environment(3);

    PsoConfig serial_cfg;
    serial_cfg.swarm_size = 80;
    serial_cfg.max_iterations = 40;
    serial_cfg.rng_seed = 12345;
    serial_cfg.parallel_eval = false;
    PsoConfig parallel_cfg = serial_cfg;
    parallel_cfg.parallel_eval = true;

    const PlanResult a = plan(ws, serial_cfg, 20);
    const PlanResult b = plan(ws, parallel_cfg, 20);
    REQUIRE(a.path.waypoints.size() == b.path.waypoints.size());
    for (std::size_t i = 0; i < a.path.waypoints.size(); ++i) {
        CHECK(a.path.waypoints[i] == b.path.waypoints[i]);
    }
    CHECK(a.total_length == b.total_length);
    CHECK(a.feasible == b.feasible);
}
