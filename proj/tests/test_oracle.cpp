#include <doctest.h>

#include <cmath>

#include "swarmpath/env_io.hpp"
#include "swarmpath/oracle.hpp"

using namespace swarmpath;

TEST_CASE("straight line when nothing blocks") {
    Workspace ws;
    ws.bounds = {-1, -5, 11, 5};
    ws.start = {0, 0};
    ws.goal = {10, 0};
    const auto path = shortest_path(ws);
    REQUIRE(path.has_value());
    CHECK(path->length == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(path->points.size() == 2);
}

TEST_CASE("detours around a blocking square") {
    Workspace ws;
    ws.bounds = {-3, -2, 4, 3};
    ws.start = {-2, 0.5};
    ws.goal = {3, 0.5};
    ws.obstacles.push_back(ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
    const auto path = shortest_path(ws);
    REQUIRE(path.has_value());
    CHECK(path->length > 5.0);
    // both symmetric detours cost 2*sqrt(4.25) + 1, up to the node padding
    CHECK(path->length == doctest::Approx(1.0 + 2.0 * std::sqrt(4.25)).epsilon(1e-6));
    CHECK(path->points.size() == 4);
}

TEST_CASE("unreachable goal is detected") {
    Workspace ws;
    ws.bounds = {-1, -1, 10, 10};
    ws.start = {0, 0};
    ws.goal = {5, 5};
    ws.robot_radius = 0.1;
    // four overlapping walls sealing a pocket around the goal
    ws.obstacles.push_back(ConvexPolygon({{3.8, 3.8}, {6.2, 3.8}, {6.2, 4.2}, {3.8, 4.2}}));
    ws.obstacles.push_back(ConvexPolygon({{3.8, 5.8}, {6.2, 5.8}, {6.2, 6.2}, {3.8, 6.2}}));
    ws.obstacles.push_back(ConvexPolygon({{3.8, 3.8}, {4.2, 3.8}, {4.2, 6.2}, {3.8, 6.2}}));
    ws.obstacles.push_back(ConvexPolygon({{5.8, 3.8}, {6.2, 3.8}, {6.2, 6.2}, {5.8, 6.2}}));
    ws.validate();  // pocket interior keeps the goal clear of inflated walls
    CHECK_FALSE(shortest_path(ws).has_value());
}

TEST_CASE("invalid workspace raises instead of returning unreachable") {
    Workspace ws;
    ws.bounds = {0, 0, 1, 1};
    ws.start = {0.5, 0.5};
    ws.goal = {0.5, 0.5};
    CHECK_THROWS_AS(shortest_path(ws), WorkspaceError);
}

TEST_CASE("start and goal are the first graph nodes") {
    const Workspace ws = bundled_environment(1);
    const VisibilityGraph graph = build_visibility_graph(ws);
    CHECK(graph.nodes[0] == ws.start);
    CHECK(graph.nodes[1] == ws.goal);
    CHECK(graph.adjacency.size() == graph.nodes.size());
}

TEST_CASE("bundled environments have reachable goals with sane lengths") {
    for (int id = 1; id <= 4; ++id) {
        CAPTURE(id);
        const Workspace ws = bundled_environment(id);
        const auto path = shortest_path(ws);
        REQUIRE(path.has_value());
        CHECK(path->length >= distance(ws.start, ws.goal));
        CHECK(path->points.front() == ws.start);
        CHECK(path->points.back() == ws.goal);

        // length is consistent with its own polyline
        double total = 0.0;
        for (std::size_t i = 0; i + 1 < path->points.size(); ++i) {
            total += distance(path->points[i], path->points[i + 1]);
        }
        CHECK(total == doctest::Approx(path->length).epsilon(1e-12));

        // the oracle's own polyline passes the strict segment checks
        const auto inflated = ws.inflated_obstacles();
        for (std::size_t i = 0; i + 1 < path->points.size(); ++i) {
            for (const Obstacle& o : inflated) {
                CHECK_FALSE(segment_intersects(o, path->points[i], path->points[i + 1]));
            }
        }
    }
}
