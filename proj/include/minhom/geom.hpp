#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace minhom {

// Absolute tolerance for geometric predicates. Fixtures are desk-scale
// (coordinates of order 1..100), so an absolute default is adequate.
struct Config {
    double tol = 1e-9;
    int cap_crossings = 14;   // recursion cap for the sigma solver
    int cap_enum = 12;        // crossing cap for decomposition enumeration
    int cap_paths = 64;       // shortest-path enumeration cap per vertex pair
    std::uint64_t seed = 1;
};

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    Point2() = default;
    Point2(double px, double py) : x(px), y(py) {
        if (!std::isfinite(px) || !std::isfinite(py))
            throw std::invalid_argument("Point2: non-finite coordinate");
    }

    friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
    friend bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }
};

inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Point2 a) { return std::sqrt(dot(a, a)); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }

// Signed area of the oriented triangle (a, b, c); positive when CCW.
inline double orient2d(Point2 a, Point2 b, Point2 c) {
    return cross(b - a, c - a);
}

// Distance from p to segment [a, b].
double point_segment_distance(Point2 p, Point2 a, Point2 b);

// Signed polygon area by the shoelace formula (positive for CCW).
double signed_area(const std::vector<Point2>& poly);

// Winding number of a closed polyline around p. p must not lie on the
// polyline; callers guarantee clearance.
int polyline_winding(const std::vector<Point2>& poly, Point2 p);

// CCW angle from direction a to direction b, in [0, 2*pi).
double ccw_angle(Point2 a, Point2 b);

// True when direction d lies strictly inside the CCW sector swept from
// direction `from` to direction `to`. The flags widen the test to include
// the corresponding boundary ray.
bool in_ccw_sector(Point2 from, Point2 to, Point2 d,
                   bool allow_from = false, bool allow_to = false);

struct SegmentHit {
    bool hits = false;        // proper interior-interior transverse crossing
    bool degenerate = false;  // touch, collinear overlap, or near-tangency
    double t = 0.0;           // parameter on segment 1
    double u = 0.0;           // parameter on segment 2
    Point2 point{};
    std::string note;
};

// Classifies the intersection of segments [p1,p2] and [q1,q2].
SegmentHit intersect_segments(Point2 p1, Point2 p2, Point2 q1, Point2 q2,
                              double tol);

// Deterministic 64-bit mixer used for seeded jitter.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Uniform double in [-1, 1) from the mixer.
inline double unit_jitter(std::uint64_t& state) {
    return 2.0 * (double(splitmix64(state) >> 11) * 0x1.0p-53) - 1.0;
}

}  // namespace minhom
