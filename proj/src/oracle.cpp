#include "swarmpath/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

namespace swarmpath {

namespace {

constexpr int kCircleSides = 32;
// Graph nodes sit this far outside the blocking shapes, so the shortest
// polyline clears every obstacle boundary by more than the sidedness
// tolerance instead of touching corners and tangent points exactly.
constexpr double kNodePadding = 1e-7;

ConvexPolygon circumscribed_polygon(const Circle& c) {
    const double r = c.radius() / std::cos(std::numbers::pi / kCircleSides);
    std::vector<Point2> vertices(kCircleSides);
    for (int k = 0; k < kCircleSides; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / kCircleSides;
        vertices[k] = {c.center().x + r * std::cos(theta),
                       c.center().y + r * std::sin(theta)};
    }
    return ConvexPolygon(std::move(vertices));
}

bool blocked(const std::vector<ConvexPolygon>& polygons, Point2 a, Point2 b) {
    for (const ConvexPolygon& poly : polygons) {
        if (segment_intersects_interior(poly, a, b)) return true;
    }
    return false;
}

}  // namespace

std::vector<ConvexPolygon> visibility_polygons(const Workspace& workspace) {
    std::vector<ConvexPolygon> polygons;
    polygons.reserve(workspace.obstacles.size());
    for (const Obstacle& o : workspace.inflated_obstacles()) {
        if (const auto* poly = std::get_if<ConvexPolygon>(&o)) {
            polygons.push_back(*poly);
        } else {
            polygons.push_back(circumscribed_polygon(std::get<Circle>(o)));
        }
    }
    return polygons;
}

VisibilityGraph build_visibility_graph(const Workspace& workspace) {
    workspace.validate();
    const std::vector<ConvexPolygon> polygons = visibility_polygons(workspace);

    VisibilityGraph graph;
    graph.nodes.push_back(workspace.start);
    graph.nodes.push_back(workspace.goal);
    for (const ConvexPolygon& poly : polygons) {
        const ConvexPolygon shell = inflate(poly, kNodePadding);
        graph.nodes.insert(graph.nodes.end(), shell.vertices().begin(),
                           shell.vertices().end());
    }

    const int n = static_cast<int>(graph.nodes.size());
    graph.adjacency.assign(n, {});

    // Edge candidates are all node pairs; a pair survives when no polygon
    // interior cuts the connecting segment. Pairs are independent, so the
    // loop parallelizes with a per-row write pattern.
    std::vector<std::vector<std::pair<int, double>>> forward(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!blocked(polygons, graph.nodes[i], graph.nodes[j])) {
                forward[i].emplace_back(j, distance(graph.nodes[i], graph.nodes[j]));
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (const auto& [j, w] : forward[i]) {
            graph.adjacency[i].emplace_back(j, w);
            graph.adjacency[j].emplace_back(i, w);
        }
    }
    return graph;
}

std::optional<OraclePath> shortest_path(const Workspace& workspace) {
    const VisibilityGraph graph = build_visibility_graph(workspace);
    const int n = static_cast<int>(graph.nodes.size());
    constexpr int kStart = 0;
    constexpr int kGoal = 1;

    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    std::vector<int> parent(n, -1);
    using Entry = std::pair<double, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    dist[kStart] = 0.0;
    queue.emplace(0.0, kStart);

    while (!queue.empty()) {
        const auto [d, u] = queue.top();
        queue.pop();
        if (d > dist[u]) continue;
        if (u == kGoal) break;
        for (const auto& [v, w] : graph.adjacency[u]) {
            const double candidate = d + w;
            if (candidate < dist[v]) {
                dist[v] = candidate;
                parent[v] = u;
                queue.emplace(candidate, v);
            }
        }
    }

    if (!std::isfinite(dist[kGoal])) return std::nullopt;

    OraclePath path;
    path.length = dist[kGoal];
    for (int v = kGoal; v != -1; v = parent[v]) path.points.push_back(graph.nodes[v]);
    std::reverse(path.points.begin(), path.points.end());
    return path;
}

}  // namespace swarmpath
