// Compares the serial reference and OpenMP swarm-evaluation kernels on a
// bundled environment's waypoint objective, then times a full planning run.
//
// usage: swarmpath_bench [bundled-id] [particles] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "swarmpath/env_io.hpp"
#include "swarmpath/planner.hpp"
#include "swarmpath/pso.hpp"

using namespace swarmpath;
using clock_type = std::chrono::steady_clock;

namespace {

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    const int bundled_id = argc > 1 ? std::atoi(argv[1]) : 1;
    const int particles = argc > 2 ? std::atoi(argv[2]) : 500;
    const int repeats = argc > 3 ? std::atoi(argv[3]) : 200;

    const Workspace ws = bundled_environment(bundled_id);
    const std::vector<Obstacle> inflated = ws.inflated_obstacles();
    const GridModel grid = build_grid(ws, 100);
    const double penalty = 10.0 * ws.bounds.diagonal();

    const int line = grid.n / 2;
    const Point2 previous = ws.start;
    const FitnessFn fitness = [&](std::span<const double> x) {
        return waypoint_fitness(grid.point_on_line(line, x[0]), previous, ws.goal,
                                inflated, penalty);
    };

    PsoConfig cfg;
    cfg.swarm_size = particles;
    const SearchDomain domain =
        SearchDomain::interval(grid.free_ranges[line].lo, grid.free_ranges[line].hi);
    const SwarmState state = init_swarm(cfg, domain);
    std::vector<double> out_serial(particles);
    std::vector<double> out_parallel(particles);

#ifdef _OPENMP
    std::printf("threads:         %d\n", omp_get_max_threads());
#else
    std::printf("threads:         1 (built without OpenMP)\n");
#endif
    std::printf("environment:     bundled:%d (%zu obstacles)\n", bundled_id,
                ws.obstacles.size());
    std::printf("swarm:           %d particles, %d evaluation sweeps\n", particles, repeats);

    auto t0 = clock_type::now();
    for (int r = 0; r < repeats; ++r) {
        evaluate_swarm_serial(state, fitness, out_serial);
    }
    const double serial_ms = ms_since(t0);

    t0 = clock_type::now();
    for (int r = 0; r < repeats; ++r) {
        evaluate_swarm_parallel(state, fitness, out_parallel);
    }
    const double parallel_ms = ms_since(t0);

    long long mismatches = 0;
    for (int i = 0; i < particles; ++i) {
        if (out_serial[i] != out_parallel[i]) ++mismatches;
    }

    const double evals = static_cast<double>(particles) * repeats;
    std::printf("serial kernel:   %8.2f ms  (%7.1f ns/eval)\n", serial_ms,
                serial_ms * 1e6 / evals);
    std::printf("parallel kernel: %8.2f ms  (%7.1f ns/eval)\n", parallel_ms,
                parallel_ms * 1e6 / evals);
    std::printf("speedup:         %.2fx, mismatches: %lld\n", serial_ms / parallel_ms,
                mismatches);

    PsoConfig plan_cfg;
    t0 = clock_type::now();
    const PlanResult result = plan(ws, plan_cfg, 100);
    const double plan_ms = ms_since(t0);
    std::printf("full plan:       %8.2f ms  (feasible=%s, length=%.4f)\n", plan_ms,
                result.feasible ? "yes" : "no", result.total_length);

    return mismatches == 0 ? 0 : 1;
}
