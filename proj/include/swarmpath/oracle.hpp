#pragma once

#include <optional>
#include <vector>

#include "swarmpath/planner.hpp"

namespace swarmpath {

struct OraclePath {
    std::vector<Point2> points;  // start ... goal
    double length = 0.0;
};

/**
 * Visibility graph over the inflated obstacles. Circles are replaced by
 * circumscribed regular 32-gons (slightly padded so the polygon edges clear
 * the circle boundary), keeping the graph straight-edged and the resulting
 * length a conservative over-estimate of the smooth optimum by well under
 * half a percent.
 */
struct VisibilityGraph {
    std::vector<Point2> nodes;  // node 0 = start, node 1 = goal
    std::vector<std::vector<std::pair<int, double>>> adjacency;
};

/// Polygons blocking visibility: inflated polygons as-is, inflated circles
/// as padded circumscribed 32-gons.
std::vector<ConvexPolygon> visibility_polygons(const Workspace& workspace);

VisibilityGraph build_visibility_graph(const Workspace& workspace);

/// Exact shortest polyline from start to goal over the visibility graph,
/// or nullopt when no route exists. Throws WorkspaceError on an invalid
/// workspace, so unreachability is never conflated with bad input.
std::optional<OraclePath> shortest_path(const Workspace& workspace);

}  // namespace swarmpath
