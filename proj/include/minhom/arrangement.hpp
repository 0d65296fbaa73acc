#pragma once

#include <string>
#include <vector>

#include "minhom/curve.hpp"

namespace minhom {

struct HalfEdge {
    int origin = -1;
    int target = -1;
    int twin = -1;
    int next = -1;
    int face = -1;
};

struct Face {
    int id = -1;
    bool is_outer = false;
    double area = 0.0;          // 0 for the outer face
    int winding = 0;
    Point2 sample{};            // interior point (bounded faces only)
    std::vector<int> boundary;  // half-edge cycle, face interior on the left
    std::vector<Point2> cycle;  // origins of the boundary half-edges
};

struct HalfEdgeStructure {
    std::vector<Point2> nodes;
    std::vector<HalfEdge> half_edges;
    std::vector<Face> faces;  // faces[0] is the outer face
};

struct CurveAnalysis {
    ClosedPolyCurve curve;
    std::vector<Crossing> crossings;
    std::vector<Arc> arcs;
    HalfEdgeStructure arrangement;
    int whitney = 0;
    double winding_area = 0.0;
    std::vector<std::string> warnings;

    const std::vector<Face>& faces() const { return arrangement.faces; }
};

// Planar subdivision induced by a normal curve. Face count must come out as
// crossings + 2 (Euler) or a TopologyError is raised.
HalfEdgeStructure build_arrangement(const ClosedPolyCurve& curve,
                                    const std::vector<Crossing>& crossings,
                                    const Config& cfg = {});

// Signed ray-crossing count; OnCurve when the point is within tol of [C].
int winding_number_at(Point2 p, const ClosedPolyCurve& curve,
                      const Config& cfg = {});

// Turning number of the polygon: sum of exterior angles over 2*pi.
// NumericalInstability when the sum is not close to an integer.
int whitney_index(const ClosedPolyCurve& curve);

// Sum over bounded faces of |winding| * area.
double winding_area_of(const HalfEdgeStructure& arrangement);

// Full pipeline: crossings, arcs, arrangement, face windings, Whitney
// index, winding area. Relocates the base point (with a warning) when it
// sits on another strand of the curve.
CurveAnalysis analyze(const ClosedPolyCurve& curve, const Config& cfg = {});

// The subcurve walk consisting of every arc of the analysis, rooted at the
// base point.
SubcurveRef whole_curve_ref(const CurveAnalysis& analysis);

}  // namespace minhom
