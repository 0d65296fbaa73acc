#include "minhom/geom.hpp"

#include <algorithm>

namespace minhom {

double point_segment_distance(Point2 p, Point2 a, Point2 b) {
    Point2 ab = b - a;
    double len2 = dot(ab, ab);
    if (len2 == 0.0) return dist(p, a);
    double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return dist(p, a + t * ab);
}

double signed_area(const std::vector<Point2>& poly) {
    double acc = 0.0;
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const Point2& a = poly[i];
        const Point2& b = poly[(i + 1) % n];
        acc += a.x * b.y - b.x * a.y;
    }
    return 0.5 * acc;
}

int polyline_winding(const std::vector<Point2>& poly, Point2 p) {
    int wn = 0;
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const Point2& a = poly[i];
        const Point2& b = poly[(i + 1) % n];
        if (a.y <= p.y) {
            if (b.y > p.y && orient2d(a, b, p) > 0.0) ++wn;
        } else {
            if (b.y <= p.y && orient2d(a, b, p) < 0.0) --wn;
        }
    }
    return wn;
}

double ccw_angle(Point2 a, Point2 b) {
    double ang = std::atan2(cross(a, b), dot(a, b));
    if (ang < 0.0) ang += 2.0 * M_PI;
    return ang;
}

namespace {
Point2 normalized(Point2 v) {
    double n = norm(v);
    return n > 0.0 ? Point2{v.x / n, v.y / n} : v;
}
}  // namespace

bool in_ccw_sector(Point2 from, Point2 to, Point2 d,
                   bool allow_from, bool allow_to) {
    constexpr double kParallelTol = 1e-12;
    Point2 f = normalized(from);
    Point2 t = normalized(to);
    Point2 u = normalized(d);

    double cfd = cross(f, u);
    if (std::abs(cfd) <= kParallelTol && dot(f, u) > 0.0) return allow_from;
    double cdt = cross(u, t);
    if (std::abs(cdt) <= kParallelTol && dot(u, t) > 0.0) return allow_to;

    double cft = cross(f, t);
    double dft = dot(f, t);
    if (std::abs(cft) <= kParallelTol) {
        if (dft > 0.0) return false;   // empty sector
        return cfd > 0.0;              // half-plane sector (angle pi)
    }
    if (cft > 0.0) return cfd > 0.0 && cdt > 0.0;        // narrow (< pi)
    return cfd > 0.0 || cdt > 0.0;                       // wide (> pi)
}

SegmentHit intersect_segments(Point2 p1, Point2 p2, Point2 q1, Point2 q2,
                              double tol) {
    SegmentHit hit;
    Point2 d1 = p2 - p1;
    Point2 d2 = q2 - q1;
    double len1 = norm(d1);
    double len2 = norm(d2);
    double denom = cross(d1, d2);

    // Near-parallel: either harmless or a collinear overlap.
    if (std::abs(denom) <= 1e-12 * len1 * len2) {
        if (std::abs(cross(d1, q1 - p1)) > tol * std::max(len1, 1.0))
            return hit;  // parallel, distinct lines
        // Collinear: project q endpoints onto p's axis.
        double a0 = 0.0, a1 = len1;
        double b0 = dot(q1 - p1, d1) / len1;
        double b1 = dot(q2 - p1, d1) / len1;
        if (b0 > b1) std::swap(b0, b1);
        double lo = std::max(a0, b0), hi = std::min(a1, b1);
        if (hi - lo > tol) {
            hit.degenerate = true;
            hit.note = "collinear overlap";
        } else if (hi - lo > -tol) {
            hit.degenerate = true;
            hit.note = "collinear touch";
        }
        return hit;
    }

    double t = cross(q1 - p1, d2) / denom;
    double u = cross(q1 - p1, d1) / denom;
    double wt = tol / std::max(len1, tol);
    double wu = tol / std::max(len2, tol);
    bool t_in = t > wt && t < 1.0 - wt;
    bool u_in = u > wu && u < 1.0 - wu;
    bool t_touch = t > -wt && t < 1.0 + wt;
    bool u_touch = u > -wu && u < 1.0 + wu;
    if (!t_touch || !u_touch) return hit;

    if (!t_in || !u_in) {
        // Endpoint of one segment meets the other; the caller decides whether
        // the contact is a shared vertex of adjacent edges or a violation.
        hit.degenerate = true;
        hit.note = "endpoint touch";
        hit.t = t;
        hit.u = u;
        hit.point = p1 + t * d1;
        return hit;
    }
    hit.hits = true;
    hit.t = t;
    hit.u = u;
    hit.point = p1 + t * d1;
    return hit;
}

}  // namespace minhom
