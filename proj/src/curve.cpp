#include "minhom/curve.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace minhom {

std::vector<int> SubcurveRef::canonical_key() const {
    if (arcs.empty()) return {};
    size_t best = 0;
    for (size_t i = 1; i < arcs.size(); ++i)
        if (arcs[i] < arcs[best]) best = i;
    std::vector<int> key;
    key.reserve(arcs.size());
    for (size_t i = 0; i < arcs.size(); ++i)
        key.push_back(arcs[(best + i) % arcs.size()]);
    return key;
}

ClosedPolyCurve::ClosedPolyCurve(std::vector<Point2> points, int base_index) {
    if (points.size() >= 2 && points.back() == points.front())
        points.pop_back();
    if (points.size() < 3)
        throw DegenerateInput("closed curve needs at least 3 distinct points");
    int n = static_cast<int>(points.size());
    if (base_index < 0 || base_index >= n)
        throw DegenerateInput("base_index out of range");
    for (int i = 0; i < n; ++i)
        if (points[i] == points[(i + 1) % n])
            throw DegenerateInput("repeated consecutive points");
    points_.reserve(points.size());
    for (int i = 0; i < n; ++i)
        points_.push_back(points[(base_index + i) % n]);
    original_base_index_ = base_index;
}

ClosedPolyCurve load_curve(const CurveDocument& doc) {
    if (!doc.closed)
        throw ParseError("expected a closed curve document");
    return ClosedPolyCurve(doc.points, doc.base_index);
}

namespace {

struct RawHit {
    int e1, e2;
    double t, u;
    Point2 point;
};

void check_adjacent_spike(const ClosedPolyCurve& c, int i, double tol) {
    Point2 u = c.edge_vector(i);
    Point2 w = c.edge_vector(i + 1);
    if (std::abs(cross(u, w)) <= tol * norm(u) * norm(w) && dot(u, w) < 0.0)
        throw NormalityViolation("collinear spike at vertex",
                                 {c.wrap(i), c.wrap(i + 1), c.wrap(i + 2)});
}

}  // namespace

std::vector<Crossing> detect_crossings(const ClosedPolyCurve& curve,
                                       const Config& cfg) {
    const int m = curve.size();
    const double tol = cfg.tol;

    for (int i = 0; i < m; ++i) {
        if (dist(curve.vertex(i), curve.vertex(i + 1)) < tol)
            throw NormalityViolation("near-zero edge", {i, curve.wrap(i + 1)});
        check_adjacent_spike(curve, i, tol);
    }

    // Vertex-on-edge (covers vertex-vertex coincidence as well).
    for (int k = 0; k < m; ++k) {
        Point2 v = curve.vertex(k);
        for (int e = 0; e < m; ++e) {
            if (e == k || curve.wrap(e + 1) == k) continue;
            if (point_segment_distance(v, curve.vertex(e), curve.vertex(e + 1)) < tol)
                throw NormalityViolation("vertex on edge",
                                         {k, e, curve.wrap(e + 1)});
        }
    }

    std::vector<RawHit> hits;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == m - 1);
            if (adjacent) continue;  // spikes and touches handled above
            SegmentHit h = intersect_segments(curve.vertex(i), curve.vertex(i + 1),
                                              curve.vertex(j), curve.vertex(j + 1),
                                              tol);
            if (h.degenerate)
                throw NormalityViolation("non-transverse contact (" + h.note + ")",
                                         {i, curve.wrap(i + 1), j, curve.wrap(j + 1)});
            if (h.hits)
                hits.push_back({i, j, h.t, h.u, h.point});
        }
    }

    for (size_t a = 0; a < hits.size(); ++a)
        for (size_t b = a + 1; b < hits.size(); ++b)
            if (dist(hits[a].point, hits[b].point) < tol)
                throw NormalityViolation("triple point",
                                         {hits[a].e1, hits[a].e2, hits[b].e1, hits[b].e2});

    std::vector<Crossing> crossings;
    crossings.reserve(hits.size());
    for (const RawHit& h : hits) {
        CurveParam a{h.e1, h.t};
        CurveParam b{h.e2, h.u};
        Crossing c;
        c.location = h.point;
        if (b < a) std::swap(a, b);
        c.t1 = a;
        c.t2 = b;
        Point2 tan1 = curve.edge_vector(a.edge);
        Point2 tan2 = curve.edge_vector(b.edge);
        c.sign = cross(tan1, tan2) > 0.0 ? +1 : -1;
        crossings.push_back(c);
    }
    std::sort(crossings.begin(), crossings.end(),
              [](const Crossing& a, const Crossing& b) { return a.t1 < b.t1; });
    for (size_t i = 0; i < crossings.size(); ++i)
        crossings[i].id = static_cast<int>(i) + 1;
    return crossings;
}

ClosedPolyCurve perturb_to_normal(const ClosedPolyCurve& curve, double epsilon,
                                  const Config& cfg) {
    const std::vector<Point2> original = curve.points();
    std::vector<Point2> pts = original;
    const int rounds = 32;
    for (int r = 0; r <= rounds; ++r) {
        try {
            ClosedPolyCurve candidate(pts, 0);
            detect_crossings(candidate, cfg);
            return candidate;
        } catch (const NormalityViolation& nv) {
            if (epsilon <= 0.0 || r == rounds)
                throw PerturbationFailed("could not reach a normal curve: " +
                                         std::string(nv.what()));
            double radius = epsilon * double(r + 1) / (1.5 * rounds);
            std::uint64_t state = cfg.seed ^ (0x51ed2701ull * (r + 1));
            std::set<int> offenders(nv.offending_vertices.begin(),
                                    nv.offending_vertices.end());
            for (int k : offenders) {
                // Keep the base point pinned while anything else can move.
                if (k == 0 && offenders.size() > 1) continue;
                pts[k] = original[k] + Point2{radius * unit_jitter(state),
                                              radius * unit_jitter(state)};
            }
        } catch (const DegenerateInput& d) {
            if (epsilon <= 0.0 || r == rounds)
                throw PerturbationFailed(std::string("degenerate input: ") + d.what());
            double radius = epsilon * double(r + 1) / (1.5 * rounds);
            std::uint64_t state = cfg.seed ^ (0xabcf1357ull * (r + 1));
            for (size_t k = 1; k < pts.size(); ++k)
                pts[k] = original[k] + Point2{radius * unit_jitter(state),
                                              radius * unit_jitter(state)};
        }
    }
    throw PerturbationFailed("unreachable");
}

std::vector<Arc> build_arcs(const ClosedPolyCurve& curve,
                            const std::vector<Crossing>& crossings) {
    struct Breakpoint {
        CurveParam t;
        int crossing_id;
    };
    std::vector<Breakpoint> bps;
    bps.push_back({CurveParam{0, 0.0}, 0});
    for (const Crossing& c : crossings) {
        bps.push_back({c.t1, c.id});
        bps.push_back({c.t2, c.id});
    }
    std::sort(bps.begin(), bps.end(),
              [](const Breakpoint& a, const Breakpoint& b) { return a.t < b.t; });

    std::vector<Arc> arcs;
    const int nb = static_cast<int>(bps.size());
    for (int k = 0; k < nb; ++k) {
        const Breakpoint& from = bps[k];
        const Breakpoint& to = bps[(k + 1) % nb];
        Arc arc;
        arc.id = k;
        arc.from_crossing = from.crossing_id;
        arc.to_crossing = to.crossing_id;
        arc.t_begin = from.t;
        arc.t_end = to.t;
        arc.polyline.push_back(curve.point_at(from.t));
        // Interior original vertices, located at integer positions of the
        // unwrapped parameter key edge + frac.
        double to_key = to.t.edge + to.t.frac + (k + 1 == nb ? curve.size() : 0);
        for (int v = from.t.edge + 1; double(v) < to_key; ++v)
            arc.polyline.push_back(curve.vertex(v));
        arc.polyline.push_back(curve.point_at(to.t));
        arcs.push_back(std::move(arc));
    }
    return arcs;
}

std::vector<int> junction_sequence(const SubcurveRef& sub,
                                   const std::vector<Arc>& arcs) {
    std::vector<int> seq;
    seq.reserve(sub.arcs.size());
    for (size_t i = 0; i < sub.arcs.size(); ++i) {
        const Arc& a = arcs[sub.arcs[i]];
        const Arc& b = arcs[sub.arcs[(i + 1) % sub.arcs.size()]];
        if (a.to_crossing != b.from_crossing)
            throw InvalidDecomposition("arc walk is not connected");
        seq.push_back(a.to_crossing);
    }
    return seq;
}

std::vector<int> interior_crossings(const SubcurveRef& sub,
                                    const std::vector<Arc>& arcs) {
    std::map<int, int> count;
    for (int j : junction_sequence(sub, arcs)) ++count[j];
    std::vector<int> out;
    for (auto [id, c] : count)
        if (id >= 1 && c == 2) out.push_back(id);
    return out;
}

std::pair<SubcurveRef, SubcurveRef> split_at_crossing(
    const SubcurveRef& sub, const std::vector<Arc>& arcs, int crossing_id) {
    std::vector<size_t> starts;
    for (size_t i = 0; i < sub.arcs.size(); ++i)
        if (arcs[sub.arcs[i]].from_crossing == crossing_id) starts.push_back(i);
    if (starts.size() != 2)
        throw NotASelfCrossing("crossing is not interior to the subcurve");
    SubcurveRef s1, s2;
    s1.root = crossing_id;
    s2.root = crossing_id;
    for (size_t i = starts[0]; i < starts[1]; ++i) s1.arcs.push_back(sub.arcs[i]);
    for (size_t i = starts[1]; i < starts[0] + sub.arcs.size(); ++i)
        s2.arcs.push_back(sub.arcs[i % sub.arcs.size()]);
    return {s1, s2};
}

ClosedPolyCurve reverse_curve(const ClosedPolyCurve& curve) {
    std::vector<Point2> pts;
    pts.reserve(curve.size());
    pts.push_back(curve.vertex(0));
    for (int i = curve.size() - 1; i >= 1; --i) pts.push_back(curve.vertex(i));
    return ClosedPolyCurve(pts, 0);
}

ClosedPolyCurve concatenate_open(const std::vector<Point2>& alpha,
                                 const std::vector<Point2>& beta,
                                 JoinPolicy join) {
    if (alpha.size() < 2 || beta.size() < 2)
        throw DegenerateInput("open polylines need at least 2 points");
    std::vector<Point2> ring(alpha.begin(), alpha.end());
    if (join == JoinPolicy::SharedEndpoints) {
        if (!(dist(alpha.front(), beta.front()) < 1e-9 &&
              dist(alpha.back(), beta.back()) < 1e-9))
            throw DegenerateInput("shared-endpoints join requires coinciding endpoints");
    }
    for (auto it = beta.rbegin(); it != beta.rend(); ++it) ring.push_back(*it);
    // Fuse exact consecutive duplicates (shared endpoints, degenerate joins).
    std::vector<Point2> fused;
    for (const Point2& p : ring)
        if (fused.empty() || !(fused.back() == p)) fused.push_back(p);
    while (fused.size() >= 2 && fused.back() == fused.front()) fused.pop_back();
    return ClosedPolyCurve(fused, 0);
}

ClosedPolyCurve materialize(const SubcurveRef& sub, const std::vector<Arc>& arcs,
                            const std::vector<Crossing>& crossings) {
    (void)crossings;
    if (sub.arcs.empty()) throw InvalidDecomposition("empty subcurve");
    if (arcs[sub.arcs.front()].from_crossing != sub.root)
        throw InvalidDecomposition("walk does not start at its root");
    std::vector<Point2> pts;
    pts.push_back(arcs[sub.arcs.front()].polyline.front());
    for (int aid : sub.arcs) {
        const Arc& a = arcs[aid];
        for (size_t i = 1; i + 1 < a.polyline.size(); ++i)
            pts.push_back(a.polyline[i]);
    }
    return ClosedPolyCurve(pts, 0);
}

}  // namespace minhom
