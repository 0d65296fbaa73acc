#include "minhom/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace minhom {

namespace {

struct Station {
    CurveParam t;
    int node = -1;  // filled once nodes are assigned
    int crossing_id = 0;
};

// Subdivide the curve at corners and crossing visits; consecutive stations
// bound straight segments of the arrangement.
std::vector<Station> build_stations(const ClosedPolyCurve& curve,
                                    const std::vector<Crossing>& crossings) {
    std::vector<Station> stations;
    for (int v = 0; v < curve.size(); ++v)
        stations.push_back({CurveParam{v, 0.0}, -1, 0});
    for (const Crossing& c : crossings) {
        stations.push_back({c.t1, -1, c.id});
        stations.push_back({c.t2, -1, c.id});
    }
    std::sort(stations.begin(), stations.end(),
              [](const Station& a, const Station& b) { return a.t < b.t; });
    return stations;
}

}  // namespace

HalfEdgeStructure build_arrangement(const ClosedPolyCurve& curve,
                                    const std::vector<Crossing>& crossings,
                                    const Config& cfg) {
    HalfEdgeStructure hs;
    std::vector<Station> stations = build_stations(curve, crossings);

    // Assign nodes: one per corner, one per crossing (shared by both visits).
    std::map<int, int> crossing_node;
    for (Station& s : stations) {
        if (s.crossing_id > 0) {
            auto it = crossing_node.find(s.crossing_id);
            if (it != crossing_node.end()) {
                s.node = it->second;
                continue;
            }
        }
        s.node = static_cast<int>(hs.nodes.size());
        hs.nodes.push_back(curve.point_at(s.t));
        if (s.crossing_id > 0) crossing_node[s.crossing_id] = s.node;
    }

    // Two half-edges per consecutive station pair.
    const int ns = static_cast<int>(stations.size());
    for (int k = 0; k < ns; ++k) {
        int a = stations[k].node;
        int b = stations[(k + 1) % ns].node;
        int h = static_cast<int>(hs.half_edges.size());
        hs.half_edges.push_back({a, b, h + 1, -1, -1});
        hs.half_edges.push_back({b, a, h, -1, -1});
    }

    // Rotation system: outgoing half-edges per node sorted by angle.
    std::vector<std::vector<int>> outgoing(hs.nodes.size());
    for (size_t h = 0; h < hs.half_edges.size(); ++h)
        outgoing[hs.half_edges[h].origin].push_back(static_cast<int>(h));
    for (auto& out : outgoing) {
        std::sort(out.begin(), out.end(), [&](int ha, int hb) {
            const HalfEdge& A = hs.half_edges[ha];
            const HalfEdge& B = hs.half_edges[hb];
            Point2 da = hs.nodes[A.target] - hs.nodes[A.origin];
            Point2 db = hs.nodes[B.target] - hs.nodes[B.origin];
            return std::atan2(da.y, da.x) < std::atan2(db.y, db.x);
        });
    }

    // next(h): clockwise neighbor of twin(h) around the target node, which
    // walks each face with its interior on the left.
    for (size_t h = 0; h < hs.half_edges.size(); ++h) {
        int tw = hs.half_edges[h].twin;
        const auto& out = outgoing[hs.half_edges[h].target];
        auto it = std::find(out.begin(), out.end(), tw);
        size_t idx = static_cast<size_t>(it - out.begin());
        hs.half_edges[h].next = out[(idx + out.size() - 1) % out.size()];
    }

    // Face walks.
    std::vector<int> cycle_of(hs.half_edges.size(), -1);
    std::vector<std::vector<int>> cycles;
    for (size_t h0 = 0; h0 < hs.half_edges.size(); ++h0) {
        if (cycle_of[h0] != -1) continue;
        std::vector<int> cyc;
        int h = static_cast<int>(h0);
        while (cycle_of[h] == -1) {
            cycle_of[h] = static_cast<int>(cycles.size());
            cyc.push_back(h);
            h = hs.half_edges[h].next;
        }
        if (h != static_cast<int>(h0))
            throw TopologyError("face walk did not close");
        cycles.push_back(std::move(cyc));
    }

    int expected_faces = static_cast<int>(crossings.size()) + 2;
    if (static_cast<int>(cycles.size()) != expected_faces)
        throw TopologyError("face count " + std::to_string(cycles.size()) +
                            " does not match crossings + 2 = " +
                            std::to_string(expected_faces));

    // Signed areas identify the single outer cycle.
    std::vector<double> areas(cycles.size());
    int outer = -1;
    for (size_t f = 0; f < cycles.size(); ++f) {
        std::vector<Point2> poly;
        poly.reserve(cycles[f].size());
        for (int h : cycles[f]) poly.push_back(hs.nodes[hs.half_edges[h].origin]);
        areas[f] = signed_area(poly);
        if (areas[f] < 0.0) {
            if (outer != -1) throw TopologyError("multiple outer cycles");
            outer = static_cast<int>(f);
        }
    }
    if (outer == -1) throw TopologyError("no outer cycle found");

    // Outer face first, bounded faces in discovery order.
    std::vector<int> order;
    order.push_back(outer);
    for (size_t f = 0; f < cycles.size(); ++f)
        if (static_cast<int>(f) != outer) order.push_back(static_cast<int>(f));

    hs.faces.resize(cycles.size());
    for (size_t fi = 0; fi < order.size(); ++fi) {
        int src = order[fi];
        Face& face = hs.faces[fi];
        face.id = static_cast<int>(fi);
        face.is_outer = (src == outer);
        face.boundary = cycles[src];
        for (int h : face.boundary) {
            hs.half_edges[h].face = face.id;
            face.cycle.push_back(hs.nodes[hs.half_edges[h].origin]);
        }
        face.area = face.is_outer ? 0.0 : areas[src];
        if (!face.is_outer && face.area <= 0.0)
            throw TopologyError("bounded face with non-positive area");
    }

    // Interior sample points for bounded faces.
    for (Face& face : hs.faces) {
        if (face.is_outer) continue;
        bool found = false;
        for (size_t bi = 0; bi < face.boundary.size() && !found; ++bi) {
            const HalfEdge& he = hs.half_edges[face.boundary[bi]];
            Point2 a = hs.nodes[he.origin];
            Point2 b = hs.nodes[he.target];
            Point2 mid = 0.5 * (a + b);
            Point2 d = b - a;
            double len = norm(d);
            Point2 inward{-d.y / len, d.x / len};  // left of the half-edge
            for (int j = 2; j < 48 && !found; ++j) {
                double delta = len * std::pow(0.5, j);
                if (delta < 16.0 * cfg.tol) break;
                Point2 p = mid + delta * inward;
                double clear = std::numeric_limits<double>::max();
                for (const HalfEdge& o : hs.half_edges) {
                    clear = std::min(clear, point_segment_distance(
                                                p, hs.nodes[o.origin], hs.nodes[o.target]));
                    if (clear < 0.45 * delta) break;
                }
                if (clear < 0.45 * delta) continue;
                if (polyline_winding(face.cycle, p) != 1) continue;
                face.sample = p;
                found = true;
            }
        }
        if (!found)
            throw TopologyError("could not place an interior sample in face " +
                                std::to_string(face.id));
    }
    return hs;
}

int winding_number_at(Point2 p, const ClosedPolyCurve& curve, const Config& cfg) {
    for (int e = 0; e < curve.size(); ++e)
        if (point_segment_distance(p, curve.vertex(e), curve.vertex(e + 1)) < cfg.tol)
            throw OnCurve("query point lies on the curve");
    return polyline_winding(curve.points(), p);
}

int whitney_index(const ClosedPolyCurve& curve) {
    double total = 0.0;
    for (int i = 0; i < curve.size(); ++i) {
        Point2 u = curve.edge_vector(i);
        Point2 w = curve.edge_vector(i + 1);
        total += std::atan2(cross(u, w), dot(u, w));
    }
    double turns = total / (2.0 * M_PI);
    double nearest = std::round(turns);
    if (std::abs(turns - nearest) >= 0.25)
        throw NumericalInstability("turning-angle sum is not near an integer");
    return static_cast<int>(nearest);
}

double winding_area_of(const HalfEdgeStructure& arrangement) {
    double acc = 0.0;
    for (const Face& f : arrangement.faces)
        if (!f.is_outer) acc += std::abs(f.winding) * f.area;
    return acc;
}

CurveAnalysis analyze(const ClosedPolyCurve& curve, const Config& cfg) {
    ClosedPolyCurve working = curve;
    std::vector<std::string> warnings;
    std::vector<Crossing> crossings;
    try {
        crossings = detect_crossings(working, cfg);
    } catch (const NormalityViolation& nv) {
        // A base point that collides with another strand can be fixed by
        // re-rooting at a clean vertex; anything else propagates.
        bool base_involved = !nv.offending_vertices.empty() &&
                             nv.offending_vertices.front() == 0;
        if (!base_involved) throw;
        bool relocated = false;
        for (int k = 1; k < working.size() && !relocated; ++k) {
            ClosedPolyCurve cand(working.points(), k);
            try {
                crossings = detect_crossings(cand, cfg);
                working = cand;
                relocated = true;
                warnings.push_back("base point relocated to vertex " +
                                   std::to_string(k));
            } catch (const NormalityViolation&) {
            }
        }
        if (!relocated) throw;
    }

    CurveAnalysis out{working,
                      crossings,
                      build_arcs(working, crossings),
                      build_arrangement(working, crossings, cfg),
                      0,
                      0.0,
                      warnings};
    for (Face& f : out.arrangement.faces) {
        if (f.is_outer) {
            f.winding = 0;
            continue;
        }
        f.winding = winding_number_at(f.sample, working, cfg);
    }
    out.whitney = whitney_index(working);
    out.winding_area = winding_area_of(out.arrangement);
    return out;
}

SubcurveRef whole_curve_ref(const CurveAnalysis& analysis) {
    SubcurveRef ref;
    ref.root = 0;
    ref.arcs.resize(analysis.arcs.size());
    std::iota(ref.arcs.begin(), ref.arcs.end(), 0);
    return ref;
}

}  // namespace minhom
