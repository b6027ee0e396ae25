#pragma once

#include <cmath>
#include <span>
#include <variant>
#include <vector>

namespace swarmpath {

/// Tolerance applied to sidedness tests, in meters. Boundary points count
/// as inside an obstacle (conservative collision rule).
inline constexpr double kGeomEps = 1e-9;

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
inline bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 p) { return std::sqrt(dot(p, p)); }
inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

inline double distance(Point2 a, Point2 b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

class Circle {
public:
    Circle(Point2 center, double radius);

    [[nodiscard]] Point2 center() const { return center_; }
    [[nodiscard]] double radius() const { return radius_; }

private:
    Point2 center_;
    double radius_;
};

/**
 * Strictly convex polygon with counter-clockwise vertex order.
 *
 * The constructor normalizes clockwise input to CCW and rejects anything
 * degenerate: fewer than three vertices, repeated vertices, collinear
 * triples, or non-convex chains. Edges are stored in half-plane form
 * (outward unit normal, offset) so containment is a run of dot products
 * and inflation is a pure offset shift.
 */
class ConvexPolygon {
public:
    explicit ConvexPolygon(std::vector<Point2> vertices);

    [[nodiscard]] const std::vector<Point2>& vertices() const { return vertices_; }
    [[nodiscard]] std::span<const Point2> normals() const { return normals_; }
    [[nodiscard]] std::span<const double> offsets() const { return offsets_; }
    [[nodiscard]] std::size_t size() const { return vertices_.size(); }

private:
    std::vector<Point2> vertices_;
    std::vector<Point2> normals_;   // outward unit normal per edge i: v[i] -> v[i+1]
    std::vector<double> offsets_;   // dot(normal[i], v[i])
};

using Obstacle = std::variant<Circle, ConvexPolygon>;

bool contains_point(const Circle& c, Point2 p, double eps = kGeomEps);
bool contains_point(const ConvexPolygon& poly, Point2 p, double eps = kGeomEps);
bool contains_point(const Obstacle& obstacle, Point2 p, double eps = kGeomEps);

/// True iff the closed segment ab meets the closed obstacle region.
/// a == b degenerates to contains_point.
bool segment_intersects(const Circle& c, Point2 a, Point2 b, double eps = kGeomEps);
bool segment_intersects(const ConvexPolygon& poly, Point2 a, Point2 b, double eps = kGeomEps);
bool segment_intersects(const Obstacle& obstacle, Point2 a, Point2 b, double eps = kGeomEps);

/// True iff segment ab passes through the interior (depth > eps). Segments
/// that only graze the boundary do not count; used for visibility tests.
bool segment_intersects_interior(const ConvexPolygon& poly, Point2 a, Point2 b,
                                 double eps = kGeomEps);

Circle inflate(const Circle& c, double margin);
/// Offsets every supporting half-plane outward by margin and re-intersects
/// them, giving a convex superset with mitered corners.
ConvexPolygon inflate(const ConvexPolygon& poly, double margin);
Obstacle inflate(const Obstacle& obstacle, double margin);

}  // namespace swarmpath
