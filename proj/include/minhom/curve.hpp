#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minhom/errors.hpp"
#include "minhom/geom.hpp"

namespace minhom {

// Position along a closed polygonal curve: edge index plus fraction in [0,1).
// The total order is lexicographic; the paper's [0,1] parameterization is
// never materialized.
struct CurveParam {
    int edge = 0;
    double frac = 0.0;

    friend bool operator<(const CurveParam& a, const CurveParam& b) {
        if (a.edge != b.edge) return a.edge < b.edge;
        return a.frac < b.frac;
    }
    friend bool operator==(const CurveParam& a, const CurveParam& b) {
        return a.edge == b.edge && a.frac == b.frac;
    }
};

// Simple transverse self-crossing. id 0 is reserved for the base point.
struct Crossing {
    int id = 0;
    Point2 location{};
    CurveParam t1{};  // first visit (t1 < t2)
    CurveParam t2{};
    int sign = 0;     // sign of cross(tangent at t1, tangent at t2)
};

// Maximal piece of the curve between consecutive breakpoints (crossing
// visits and the base point). Arcs partition the curve.
struct Arc {
    int id = 0;
    int from_crossing = 0;  // 0 = base point
    int to_crossing = 0;
    std::vector<Point2> polyline;  // includes both endpoints
    CurveParam t_begin{};
    CurveParam t_end{};
};

// Closed walk through a subset of a parent curve's arcs, rooted at a
// crossing (or 0 for the base point). Canonical form rotates the cycle so
// the smallest arc id comes first; it is the memoization key.
struct SubcurveRef {
    std::vector<int> arcs;  // cyclic, in traversal order
    int root = 0;           // crossing id the walk is based at

    std::vector<int> canonical_key() const;
};

class ClosedPolyCurve {
public:
    ClosedPolyCurve(std::vector<Point2> points, int base_index = 0);

    const std::vector<Point2>& points() const { return points_; }
    int size() const { return static_cast<int>(points_.size()); }

    // Vertices are stored rotated so the base point is index 0.
    Point2 base() const { return points_.front(); }
    int original_base_index() const { return original_base_index_; }

    Point2 vertex(int i) const { return points_[wrap(i)]; }
    // Directed edge i runs from vertex i to vertex i+1.
    Point2 edge_vector(int i) const { return vertex(i + 1) - vertex(i); }
    Point2 point_at(CurveParam t) const {
        return vertex(t.edge) + t.frac * edge_vector(t.edge);
    }

    int wrap(int i) const {
        int n = size();
        int m = i % n;
        return m < 0 ? m + n : m;
    }

private:
    std::vector<Point2> points_;
    int original_base_index_ = 0;
};

struct CurveDocument {
    std::vector<Point2> points;
    int base_index = 0;
    bool closed = true;
};

// --- curve_model operations ------------------------------------------------

ClosedPolyCurve load_curve(const CurveDocument& doc);

// All pairwise edge-interior intersections, numbered 1..n in first-visit
// order from the base point. Throws NormalityViolation on any non-simple
// contact. Simple curves yield an empty list.
std::vector<Crossing> detect_crossings(const ClosedPolyCurve& curve,
                                       const Config& cfg = {});

// Jitters offending vertices by at most epsilon (deterministic in the seed)
// until detect_crossings succeeds; at most 32 rounds.
ClosedPolyCurve perturb_to_normal(const ClosedPolyCurve& curve, double epsilon,
                                  const Config& cfg = {});

// Splits the arc cycle at a crossing that appears twice as a junction.
// Both halves are rooted at that crossing.
std::pair<SubcurveRef, SubcurveRef> split_at_crossing(
    const SubcurveRef& sub, const std::vector<Arc>& arcs, int crossing_id);

// Same image, reversed orientation, base point preserved.
ClosedPolyCurve reverse_curve(const ClosedPolyCurve& curve);

enum class JoinPolicy { SharedEndpoints, StraightLineJoin };

// Closed curve traversing alpha forward then beta backward. The caller
// perturbs to normal if needed.
ClosedPolyCurve concatenate_open(const std::vector<Point2>& alpha,
                                 const std::vector<Point2>& beta,
                                 JoinPolicy join);

// Breaks the curve into arcs at the base point and every crossing visit.
std::vector<Arc> build_arcs(const ClosedPolyCurve& curve,
                            const std::vector<Crossing>& crossings);

// Crossing ids that appear as junctions in the walk, with multiplicity.
std::vector<int> junction_sequence(const SubcurveRef& sub,
                                   const std::vector<Arc>& arcs);

// Crossings interior to the walk: both passes present (junction seen twice).
std::vector<int> interior_crossings(const SubcurveRef& sub,
                                    const std::vector<Arc>& arcs);

// Geometric realization of a subcurve walk: corners of the constituent
// arcs, junction points dropped (they return to edge interiors), except the
// root location which becomes the base vertex.
ClosedPolyCurve materialize(const SubcurveRef& sub, const std::vector<Arc>& arcs,
                            const std::vector<Crossing>& crossings);

}  // namespace minhom
