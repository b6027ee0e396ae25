#include <doctest.h>

#include <cmath>

#include "swarmpath/planner.hpp"

using namespace swarmpath;

namespace {

Workspace empty_corridor(Point2 start, Point2 goal) {
    Workspace ws;
    ws.bounds = {-1.0, -6.0, 11.0, 6.0};
    ws.start = start;
    ws.goal = goal;
    return ws;
}

PsoConfig fast_config(std::uint64_t seed) {
    PsoConfig cfg;
    cfg.swarm_size = 120;
    cfg.max_iterations = 60;
    cfg.v_max = 20.0;
    cfg.rng_seed = seed;
    return cfg;
}

}  // namespace

TEST_CASE("build_grid splits the dominant axis") {
    const GridModel g1 = build_grid({0, 0}, {10, 0}, 4, {-5, 5});
    CHECK(g1.spacing == 2.0);
    CHECK(g1.sweep_axis == Axis::X);
    REQUIRE(g1.line_coordinates.size() == 4);
    CHECK(g1.line_coordinates[0] == doctest::Approx(2.0));
    CHECK(g1.line_coordinates[1] == doctest::Approx(4.0));
    CHECK(g1.line_coordinates[2] == doctest::Approx(6.0));
    CHECK(g1.line_coordinates[3] == doctest::Approx(8.0));
    CHECK(g1.point_on_line(0, 1.5) == Point2{2.0, 1.5});

    const GridModel g2 = build_grid({0, 0}, {0, 9}, 2, {-5, 5});
    CHECK(g2.spacing == 3.0);
    CHECK(g2.sweep_axis == Axis::Y);
    CHECK(g2.line_coordinates[0] == doctest::Approx(3.0));
    CHECK(g2.line_coordinates[1] == doctest::Approx(6.0));
    CHECK(g2.point_on_line(1, -2.0) == Point2{-2.0, 6.0});

    const GridModel g3 = build_grid({0, 0}, {3.5, 9}, 100, {-2, 6.5});
    CHECK(g3.spacing == doctest::Approx(0.09560994017736617).epsilon(1e-15));
    CHECK(g3.sweep_axis == Axis::Y);
    CHECK(g3.line_coordinates.size() == 100);
}

TEST_CASE("build_grid rejects degenerate input") {
    CHECK_THROWS_AS(build_grid({1, 1}, {1, 1}, 4, {-5, 5}), std::invalid_argument);
    CHECK_THROWS_AS(build_grid({0, 0}, {1, 0}, 0, {-5, 5}), std::invalid_argument);
}

TEST_CASE("waypoint fitness sums the two distance terms") {
    const Workspace ws = empty_corridor({0, 0}, {2, 0});
    CHECK(waypoint_fitness({2, 0}, {2, 0}, {2, 0}, ws) == 0.0);
    CHECK(waypoint_fitness({1, 0}, {0, 0}, {2, 0}, ws) == doctest::Approx(2.0));
}

TEST_CASE("waypoint fitness penalizes candidates inside inflated obstacles") {
    Workspace ws = empty_corridor({0, 0}, {10, 0});
    ws.obstacles.push_back(ConvexPolygon({{4, -1}, {6, -1}, {6, 1}, {4, 1}}));
    ws.robot_radius = 0.1;
    ws.safety_margin = 0.2;

    const double feasible = waypoint_fitness({5, 2}, {0, 0}, {10, 0}, ws);
    CHECK(feasible == doctest::Approx(2.0 * std::sqrt(29.0)));

    const double penalty = 10.0 * ws.bounds.diagonal();
    const double blocked = waypoint_fitness({5, 0}, {0, 0}, {10, 0}, ws);
    CHECK(blocked == doctest::Approx(10.0 + penalty));
    // just outside the inflated boundary (obstacle reaches y = 1.3)
    CHECK(waypoint_fitness({5, 1.31}, {0, 0}, {10, 0}, ws) < penalty);
    // inside the inflation band around the raw obstacle
    CHECK(waypoint_fitness({5, 1.29}, {0, 0}, {10, 0}, ws) > penalty);

    const double hard = waypoint_fitness({5, 0}, {0, 0}, {10, 0}, ws, PenaltyMode::Hard);
    CHECK(std::isinf(hard));
}

TEST_CASE("path length examples") {
    CHECK(path_length({{{0, 0}, {10, 0}}}) == 10.0);
    CHECK(path_length({{{0, 0}, {3, 4}, {3, 4}}}) == 5.0);
}

TEST_CASE("whole path objective") {
    // single waypoint at the goal: only the start-to-waypoint leg remains
    CHECK(whole_path_objective({{{0, 0}, {3, 4}, {3, 4}}}, {3, 4}) == doctest::Approx(5.0));
    // interior waypoints all at the goal
    const Path at_goal{{{0, 0}, {3, 4}, {3, 4}, {3, 4}}};
    CHECK(whole_path_objective(at_goal, {3, 4}) == doctest::Approx(5.0));
    // cross-check against independent recomputation
    const Path path{{{0, 0}, {1, 1}, {2, 0}, {4, 0}}};
    const Point2 goal{4, 0};
    double beta = 0.0;
    for (std::size_t i = 0; i + 1 < path.waypoints.size(); ++i)
        beta += distance(path.waypoints[i], path.waypoints[i + 1]);
    double goal_sq = 0.0;
    for (std::size_t i = 1; i + 1 < path.waypoints.size(); ++i) {
        const Point2 d = path.waypoints[i] - goal;
        goal_sq += dot(d, d);
    }
    CHECK(whole_path_objective(path, goal) ==
          doctest::Approx(beta + std::sqrt(goal_sq)).epsilon(1e-14));
}

TEST_CASE("workspace validation names the offending field") {
    Workspace ws = empty_corridor({0, 0}, {10, 0});
    ws.obstacles.push_back(Circle({0.2, 0}, 1.0));
    try {
        ws.validate();
        FAIL("expected WorkspaceError");
    } catch (const WorkspaceError& e) {
        CHECK(e.field() == "start");
    }

    Workspace same = empty_corridor({1, 1}, {1, 1});
    CHECK_THROWS_AS(same.validate(), WorkspaceError);

    Workspace outside = empty_corridor({-5, 0}, {10, 0});
    try {
        outside.validate();
        FAIL("expected WorkspaceError");
    } catch (const WorkspaceError& e) {
        CHECK(e.field() == "start");
    }

    Workspace bad_bounds = empty_corridor({0, 0}, {10, 0});
    bad_bounds.bounds = {5, 0, -5, 1};
    CHECK_THROWS_AS(bad_bounds.validate(), WorkspaceError);
}

TEST_CASE("plan recovers the single midline waypoint") {
    const Workspace ws = empty_corridor({0, 0}, {2, 0});
    const PlanResult result = plan(ws, fast_config(1), 1);
    REQUIRE(result.path.waypoints.size() == 3);
    CHECK(result.path.waypoints.front() == ws.start);
    CHECK(result.path.waypoints.back() == ws.goal);
    CHECK(result.path.waypoints[1].x == doctest::Approx(1.0));
    CHECK(std::abs(result.path.waypoints[1].y) < 0.02);
    CHECK(result.feasible);
}

TEST_CASE("plan recovers a straight line in an empty workspace") {
    const Workspace ws = empty_corridor({0, 0}, {10, 0});
    const PlanResult result = plan(ws, fast_config(7), 10);
    CHECK(result.feasible);
    CHECK(result.total_length >= 10.0);
    CHECK(result.total_length <= 10.05);
    REQUIRE(result.path.waypoints.size() == 12);

    // perpendicular offsets stay far below 5% of d(SP, GP)
    for (std::size_t i = 1; i + 1 < result.path.waypoints.size(); ++i) {
        CHECK(std::abs(result.path.waypoints[i].y) < 0.5);
    }
    // goal distance shrinks monotonically along the sweep
    for (std::size_t i = 1; i + 1 < result.path.waypoints.size(); ++i) {
        CHECK(distance(result.path.waypoints[i + 1], ws.goal) <=
              distance(result.path.waypoints[i], ws.goal) + 1e-9);
    }
    // diagnostics come back per waypoint
    CHECK(result.per_waypoint_fitness.size() == 10);
    CHECK(result.iterations_per_waypoint.size() == 10);
    for (int iters : result.iterations_per_waypoint) {
        CHECK(iters >= 1);
        CHECK(iters <= fast_config(7).max_iterations);
    }
}

TEST_CASE("plan routes around an obstacle and verifies segments") {
    Workspace ws = empty_corridor({0, 0}, {10, 0});
    ws.obstacles.push_back(ConvexPolygon({{4.5, -1.5}, {5.5, -1.5}, {5.5, 1.5}, {4.5, 1.5}}));
    ws.robot_radius = 0.1;
    ws.safety_margin = 0.2;

    const PlanResult result = plan(ws, fast_config(3), 25, true);
    CHECK(result.feasible);
    CHECK(result.total_length > 10.0);

    const auto inflated = ws.inflated_obstacles();
    for (std::size_t i = 0; i + 1 < result.path.waypoints.size(); ++i) {
        for (const Obstacle& o : inflated) {
            CHECK_FALSE(segment_intersects(o, result.path.waypoints[i],
                                           result.path.waypoints[i + 1]));
        }
    }
}

TEST_CASE("plan reports infeasible when a grid line is fully blocked") {
    Workspace ws = empty_corridor({0, 0}, {4, 0});
    // wall spanning the entire searchable range at x ~ 2
    ws.obstacles.push_back(ConvexPolygon({{1.5, -6.5}, {2.5, -6.5}, {2.5, 6.5}, {1.5, 6.5}}));
    const PlanResult soft = plan(ws, fast_config(5), 3);
    CHECK_FALSE(soft.feasible);

    const PlanResult hard = plan(ws, fast_config(5), 3, true, PenaltyMode::Hard);
    CHECK_FALSE(hard.feasible);
    CHECK(std::isinf(hard.per_waypoint_fitness[1]));
}

TEST_CASE("plan is deterministic per seed") {
    Workspace ws = empty_corridor({0, 0}, {10, 0});
    ws.obstacles.push_back(Circle({5, 0.2}, 1.0));
    ws.robot_radius = 0.1;

    const PlanResult a = plan(ws, fast_config(11), 8);
    const PlanResult b = plan(ws, fast_config(11), 8);
    REQUIRE(a.path.waypoints.size() == b.path.waypoints.size());
    for (std::size_t i = 0; i < a.path.waypoints.size(); ++i) {
        CHECK(a.path.waypoints[i] == b.path.waypoints[i]);
    }
    CHECK(a.total_length == b.total_length);
    CHECK(a.seed == b.seed);
    CHECK(a.seed == 11);

    const PlanResult c = plan(ws, fast_config(12), 8);
    bool any_different = false;
    for (std::size_t i = 0; i < a.path.waypoints.size(); ++i) {
        any_different = any_different || !(a.path.waypoints[i] == c.path.waypoints[i]);
    }
    CHECK(any_different);
}

TEST_CASE("derived seeds spread the base seed") {
    CHECK(derive_seed(0, 1) != derive_seed(0, 2));
    CHECK(derive_seed(0, 1) != derive_seed(1, 1));
    CHECK(derive_seed(42, 3) == derive_seed(42, 3));
}
