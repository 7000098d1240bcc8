#ifndef MAPMATCH_GEOMETRY_HPP
#define MAPMATCH_GEOMETRY_HPP

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace mapmatch {

/// A point in the plane. Coordinates must be finite; construction rejects
/// NaN and infinities so every downstream predicate can assume clean input.
struct Point {
    double x = 0.0;
    double y = 0.0;

    Point() = default;
    Point(double px, double py) : x(px), y(py) {
        if (!std::isfinite(px) || !std::isfinite(py)) {
            throw std::invalid_argument("Point: coordinates must be finite");
        }
    }

    friend bool operator==(const Point& a, const Point& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

inline double dist_sq(const Point& p, const Point& q) {
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    return dx * dx + dy * dy;
}

inline double dist(const Point& p, const Point& q) {
    return std::sqrt(dist_sq(p, q));
}

/// Largest t with sqrt(t) <= eps, so that (dist_sq <= t) == (dist <= eps)
/// exactly. Inner loops compare squared values against this once-computed
/// threshold instead of taking square roots.
inline double squared_threshold(double eps) {
    double t = eps * eps;
    if (std::isinf(t) || std::isnan(t)) return t;
    while (t > 0.0 && std::sqrt(t) > eps) t = std::nextafter(t, 0.0);
    for (;;) {
        const double up = std::nextafter(t, std::numeric_limits<double>::infinity());
        if (std::sqrt(up) <= eps) {
            t = up;
        } else {
            break;
        }
    }
    return t;
}

/// Closed segment with distinct endpoints.
struct Segment {
    Point a;
    Point b;

    Segment(Point pa, Point pb) : a(pa), b(pb) {
        if (a == b) {
            throw std::invalid_argument("Segment: endpoints must differ");
        }
    }
};

/// Sign of the cross product (b-a) x (c-a). Exact for the dyadic-rational
/// coordinates used by generated instances; modest doubles elsewhere.
inline int orientation(const Point& a, const Point& b, const Point& c) {
    const double v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    if (v > 0.0) return 1;
    if (v < 0.0) return -1;
    return 0;
}

/// p collinear with [a,b] assumed; is p inside the closed bounding box?
inline bool on_segment_collinear(const Point& a, const Point& b, const Point& p) {
    return std::fmin(a.x, b.x) <= p.x && p.x <= std::fmax(a.x, b.x) &&
           std::fmin(a.y, b.y) <= p.y && p.y <= std::fmax(a.y, b.y);
}

/// True iff the two segments share a point that is not a common endpoint.
/// Collinear overlap of positive length counts; segments meeting only at a
/// shared endpoint do not.
inline bool segments_properly_intersect(const Segment& s1, const Segment& s2) {
    const Point& a = s1.a;
    const Point& b = s1.b;
    const Point& c = s2.a;
    const Point& d = s2.b;

    const int d1 = orientation(c, d, a);
    const int d2 = orientation(c, d, b);
    const int d3 = orientation(a, b, c);
    const int d4 = orientation(a, b, d);

    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
        return true;
    }

    const bool shared_ac = (a == c), shared_ad = (a == d);
    const bool shared_bc = (b == c), shared_bd = (b == d);

    // Endpoint of one segment in the interior of the other.
    if (d1 == 0 && on_segment_collinear(c, d, a) && !shared_ac && !shared_ad) return true;
    if (d2 == 0 && on_segment_collinear(c, d, b) && !shared_bc && !shared_bd) return true;
    if (d3 == 0 && on_segment_collinear(a, b, c) && !shared_ac && !shared_bc) return true;
    if (d4 == 0 && on_segment_collinear(a, b, d) && !shared_ad && !shared_bd) return true;

    // Fully collinear: overlap of positive length shares interior points even
    // when all four endpoint checks hit common endpoints (identical segments).
    if (d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0) {
        const bool vertical = (a.x == b.x);
        const double a1 = vertical ? a.y : a.x;
        const double a2 = vertical ? b.y : b.x;
        const double b1 = vertical ? c.y : c.x;
        const double b2 = vertical ? d.y : d.x;
        const double lo = std::fmax(std::fmin(a1, a2), std::fmin(b1, b2));
        const double hi = std::fmin(std::fmax(a1, a2), std::fmax(b1, b2));
        if (lo < hi) return true;
    }
    return false;
}

} // namespace mapmatch

#endif
