#include "swarmpath/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace swarmpath {

Circle::Circle(Point2 center, double radius) : center_(center), radius_(radius) {
    if (!is_finite(center)) throw std::invalid_argument("circle center must be finite");
    if (!std::isfinite(radius) || radius <= 0.0)
        throw std::invalid_argument("circle radius must be positive");
}

ConvexPolygon::ConvexPolygon(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
    for (const Point2& v : vertices_) {
        if (!is_finite(v)) throw std::invalid_argument("polygon vertex must be finite");
    }

    // Shoelace sign decides orientation; clockwise input gets reversed.
    double twice_area = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = vertices_[i];
        const Point2 b = vertices_[(i + 1) % n];
        twice_area += cross(a, b);
    }
    if (twice_area < 0.0) std::reverse(vertices_.begin(), vertices_.end());

    normals_.resize(n);
    offsets_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = vertices_[i];
        const Point2 b = vertices_[(i + 1) % n];
        const Point2 e = b - a;
        const double len = norm(e);
        if (len <= kGeomEps) throw std::invalid_argument("polygon has repeated vertices");
        normals_[i] = {e.y / len, -e.x / len};  // right of travel = outside for CCW
        offsets_[i] = dot(normals_[i], a);
    }

    // Strict convexity: every consecutive edge pair turns left.
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 e1 = vertices_[(i + 1) % n] - vertices_[i];
        const Point2 e2 = vertices_[(i + 2) % n] - vertices_[(i + 1) % n];
        if (cross(e1, e2) <= kGeomEps * norm(e1) * norm(e2))
            throw std::invalid_argument("polygon is not strictly convex");
    }

    // Convex position: each vertex on the inner side of every edge. Rules
    // out self-intersecting chains whose turns are all left (e.g. a star).
    for (std::size_t i = 0; i < n; ++i) {
        for (const Point2& v : vertices_) {
            if (dot(normals_[i], v) > offsets_[i] + kGeomEps)
                throw std::invalid_argument("polygon is not strictly convex");
        }
    }
}

bool contains_point(const Circle& c, Point2 p, double eps) {
    const double dx = p.x - c.center().x;
    const double dy = p.y - c.center().y;
    const double r = c.radius() + eps;
    return dx * dx + dy * dy <= r * r;
}

bool contains_point(const ConvexPolygon& poly, Point2 p, double eps) {
    const auto normals = poly.normals();
    const auto offsets = poly.offsets();
    for (std::size_t i = 0; i < normals.size(); ++i) {
        if (dot(normals[i], p) > offsets[i] + eps) return false;
    }
    return true;
}

bool contains_point(const Obstacle& obstacle, Point2 p, double eps) {
    return std::visit([&](const auto& shape) { return contains_point(shape, p, eps); },
                      obstacle);
}

bool segment_intersects(const Circle& c, Point2 a, Point2 b, double eps) {
    // Distance from center to the closed segment.
    const Point2 d = b - a;
    const double len2 = dot(d, d);
    double t = 0.0;
    if (len2 > 0.0) t = std::clamp(dot(c.center() - a, d) / len2, 0.0, 1.0);
    const Point2 closest = a + t * d;
    const double r = c.radius() + eps;
    const Point2 off = c.center() - closest;
    return dot(off, off) <= r * r;
}

namespace {

// Cyrus-Beck clip of segment ab against the polygon's half-planes, each
// shifted outward by `grow` (negative shrinks). Returns true when a
// non-empty parameter interval survives.
bool clip_segment(const ConvexPolygon& poly, Point2 a, Point2 b, double grow) {
    const auto normals = poly.normals();
    const auto offsets = poly.offsets();
    const Point2 dir = b - a;
    double t_enter = 0.0;
    double t_exit = 1.0;
    for (std::size_t i = 0; i < normals.size(); ++i) {
        const double denom = dot(normals[i], dir);
        const double num = (offsets[i] + grow) - dot(normals[i], a);
        if (std::abs(denom) < 1e-30) {
            if (num < 0.0) return false;  // parallel and outside this half-plane
            continue;
        }
        const double t = num / denom;
        if (denom > 0.0) {
            t_exit = std::min(t_exit, t);
        } else {
            t_enter = std::max(t_enter, t);
        }
        if (t_enter > t_exit) return false;
    }
    return true;
}

}  // namespace

bool segment_intersects(const ConvexPolygon& poly, Point2 a, Point2 b, double eps) {
    return clip_segment(poly, a, b, +eps);
}

bool segment_intersects(const Obstacle& obstacle, Point2 a, Point2 b, double eps) {
    return std::visit([&](const auto& shape) { return segment_intersects(shape, a, b, eps); },
                      obstacle);
}

bool segment_intersects_interior(const ConvexPolygon& poly, Point2 a, Point2 b, double eps) {
    return clip_segment(poly, a, b, -eps);
}

Circle inflate(const Circle& c, double margin) {
    if (!std::isfinite(margin) || margin <= 0.0)
        throw std::invalid_argument("inflation margin must be positive");
    return Circle(c.center(), c.radius() + margin);
}

ConvexPolygon inflate(const ConvexPolygon& poly, double margin) {
    if (!std::isfinite(margin) || margin <= 0.0)
        throw std::invalid_argument("inflation margin must be positive");
    const auto normals = poly.normals();
    const auto offsets = poly.offsets();
    const std::size_t n = poly.size();
    std::vector<Point2> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        // Vertex i sits on edges i-1 and i; intersect both offset lines.
        const std::size_t j = (i + n - 1) % n;
        const Point2 n1 = normals[j];
        const Point2 n2 = normals[i];
        const double d1 = offsets[j] + margin;
        const double d2 = offsets[i] + margin;
        const double det = cross(n1, n2);  // nonzero: edges of a strictly convex polygon
        out[i] = {(d1 * n2.y - d2 * n1.y) / det, (n1.x * d2 - n2.x * d1) / det};
    }
    return ConvexPolygon(std::move(out));
}

Obstacle inflate(const Obstacle& obstacle, double margin) {
    return std::visit([&](const auto& shape) -> Obstacle { return inflate(shape, margin); },
                      obstacle);
}

}  // namespace swarmpath
