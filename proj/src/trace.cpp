#include "g2cyl/trace.hpp"

#include <cstdlib>

namespace g2 {

long defaultBudget() {
    if (const char* e = std::getenv("FLATSURF_BUDGET")) {
        long v = std::atol(e);
        if (v > 0) return v;
    }
    return 10000;
}

namespace {

struct Exit {
    bool found = false;
    FE t;          // ray parameter (pt + t*dir)
    int edge = -1;
    int vertex = -1;  // >= 0 when the exit is exactly a polygon vertex
    Vec2 point;
};

// First boundary event of the ray pt + t*dir, t > 0, out of convex polygon p:
// an edge crossing, or a polygon vertex lying exactly on the ray (this covers
// straight corners in the middle of edge-collinear travel).
Exit exitPolygon(const Surface& s, int p, const Vec2& pt, const Vec2& dir) {
    Exit best;
    int n = s.nv(p);
    for (int e = 0; e < n; ++e) {
        const Vec2& A = s.vtx(p, e);
        Vec2 E = s.edgeVec(p, e);
        FE den = wedge(dir, E);
        if (den.isZero()) continue;  // parallel to this edge
        FE t = wedge(A - pt, E) / den;
        if (t.sign() <= 0) continue;
        FE u = wedge(A - pt, dir) / den;  // position on edge in [0,1]
        int su = u.sign();
        int su1 = (u - FE(1)).sign();
        if (su < 0 || su1 > 0) continue;
        if (!best.found || t < best.t) {
            best.found = true;
            best.t = t;
            best.edge = e;
            best.vertex = -1;
            if (su == 0)
                best.vertex = e;
            else if (su1 == 0)
                best.vertex = (e + 1) % n;
            best.point = pt + dir * t;
        }
    }
    for (int v = 0; v < n; ++v) {
        Vec2 w = s.vtx(p, v) - pt;
        if (w.isZero()) continue;
        if (!wedge(dir, w).isZero() || dot(dir, w).sign() <= 0) continue;
        FE t = (dir.x.isZero() ? w.y / dir.y : w.x / dir.x);
        if (!best.found || t < best.t) {
            best.found = true;
            best.t = t;
            best.edge = -1;
            best.vertex = v;
            best.point = s.vtx(p, v);
        }
    }
    if (!best.found) throw SurfaceError("Internal", "ray failed to exit polygon");
    return best;
}

// Earliest crossing of the open ray step (pt -> pt + tmax*dir) with an indexed
// segment inside polygon p. Segments are treated half-open [a, b). Returns the
// smallest positive parameter (<= tmax) or no value.
struct DetHit {
    bool found = false;
    FE t;
    int id = -1;
};

DetHit detectCrossing(const SegIndex& idx, int p, const Vec2& pt, const Vec2& dir, const FE& tmax,
                      bool skipStart) {
    DetHit best;
    for (const auto& item : idx.byPoly[p]) {
        Vec2 E = item.b - item.a;
        FE den = wedge(dir, E);
        if (den.isZero()) continue;  // parallel: overlap handled elsewhere
        FE t = wedge(item.a - pt, E) / den;
        int st = t.sign();
        if (st < 0) continue;
        if (st == 0 && skipStart) continue;
        if (t > tmax) continue;
        FE u = wedge(item.a - pt, dir) / den;
        if (u.sign() < 0 || (u - FE(1)).sign() >= 0) continue;  // half-open [a,b)
        if (!best.found || t < best.t) {
            best.found = true;
            best.t = t;
            best.id = item.id;
        }
    }
    return best;
}

}  // namespace

// Move a location into a chart where `dir` points inward (or along the
// boundary). Handles starts on glued edges and at regular vertices.
static void normalizeLoc(const Surface& s, int& p, Vec2& pt, const Vec2& dir) {
    for (int guard = 0; guard < 8; ++guard) {
        int n = s.nv(p);
        bool moved = false;
        for (int v = 0; v < n; ++v) {
            if (s.vtx(p, v) == pt) {
                int k = s.classOf[p][v];
                Corner c = s.cornerAtClassContaining(k, dir, Corner{p, v});
                if (c.poly != p || c.vtx != v) {
                    p = c.poly;
                    pt = s.vtx(c.poly, c.vtx);
                    moved = true;
                }
                break;
            }
        }
        if (moved) continue;
        for (int e = 0; e < n; ++e) {
            const Vec2& A = s.vtx(p, e);
            Vec2 E = s.edgeVec(p, e);
            Vec2 w = pt - A;
            if (!wedge(E, w).isZero()) continue;
            FE t = dot(w, E) / E.normSq();
            if (t.sign() <= 0 || (t - FE(1)).sign() >= 0) continue;
            if (wedge(E, dir).sign() < 0) {
                EdgeRef pr = s.partner(p, e);
                Vec2 shift = s.vtx(pr.poly, (pr.edge + 1) % s.nv(pr.poly)) - A;
                pt = pt + shift;
                p = pr.poly;
                moved = true;
            }
            break;
        }
        if (!moved) return;
    }
    throw SurfaceError("Internal", "failed to normalize ray start");
}

Germ Tracer::reversedGermAt(int p, int v, const Vec2& dir) const {
    int k = s_.classOf[p][v];
    Corner c = s_.cornerAtClassContaining(k, -dir, Corner{p, v});
    Germ g;
    g.cls = k;
    g.fanIdx = s_.fanIndexOf(c);
    g.dir = -dir;
    return g;
}

RayStop Tracer::ray(const Loc& start, const Vec2& dir, long budget, const SegIndex* detect) const {
    RayStop out;
    out.kind = RayStop::Kind::Budget;
    out.holonomy = Vec2(FE(0), FE(0));
    int p = start.poly;
    Vec2 pt = start.pt;
    normalizeLoc(s_, p, pt, dir);
    bool first = true;
    for (long step = 0; step <= budget; ++step) {
        Exit ex = exitPolygon(s_, p, pt, dir);
        if (detect) {
            DetHit dh = detectCrossing(*detect, p, pt, dir, ex.t, first);
            bool exitAtSingular =
                ex.vertex >= 0 && s_.isSingularClass[s_.classOf[p][ex.vertex]];
            if (dh.found && (dh.t < ex.t || !exitAtSingular)) {
                Vec2 hitPt = pt + dir * dh.t;
                out.kind = RayStop::Kind::SegCrossing;
                out.path.push_back({p, pt, hitPt});
                out.holonomy += hitPt - pt;
                out.hit.id = dh.id;
                out.hit.where = Loc{p, hitPt};
                return out;
            }
        }
        out.path.push_back({p, pt, ex.point});
        out.holonomy += ex.point - pt;
        if (ex.vertex >= 0) {
            int k = s_.classOf[p][ex.vertex];
            if (s_.isSingularClass[k]) {
                out.kind = RayStop::Kind::Singular;
                out.endGerm = reversedGermAt(p, ex.vertex, dir);
                return out;
            }
            // regular vertex: merge sectors and continue straight
            Corner c = s_.cornerAtClassContaining(k, dir, Corner{p, ex.vertex});
            p = c.poly;
            pt = s_.vtx(c.poly, c.vtx);
        } else {
            EdgeRef pr = s_.partner(p, ex.edge);
            Vec2 shift = s_.vtx(pr.poly, (pr.edge + 1) % s_.nv(pr.poly)) - s_.vtx(p, ex.edge);
            pt = ex.point + shift;
            p = pr.poly;
        }
        ++out.crossings;
        first = false;
    }
    out.kind = RayStop::Kind::Budget;
    return out;
}

RayStop Tracer::separatrix(const Germ& g, long budget, const SegIndex* detect) const {
    const Corner& c = s_.fans[g.cls][g.fanIdx];
    Loc start{c.poly, s_.vtx(c.poly, c.vtx)};
    return ray(start, g.dir, budget, detect);
}

RayStop Tracer::closedLeaf(const Loc& start, const Vec2& dir, long budget) const {
    RayStop out;
    out.kind = RayStop::Kind::Budget;
    out.holonomy = Vec2(FE(0), FE(0));
    int p = start.poly;
    Vec2 pt = start.pt;
    normalizeLoc(s_, p, pt, dir);
    Loc nstart{p, pt};
    for (long step = 0; step <= budget; ++step) {
        if (step > 0 && p == nstart.poly && pt == nstart.pt) {
            out.kind = RayStop::Kind::Closed;
            return out;
        }
        Exit ex = exitPolygon(s_, p, pt, dir);
        // does this step pass through the starting point?
        if (step > 0 && p == nstart.poly) {
            Vec2 d0 = nstart.pt - pt;
            if (!d0.isZero() && wedge(d0, dir).isZero() && dot(d0, dir).sign() > 0 &&
                (ex.t * ex.t * dir.normSq() - d0.normSq()).sign() >= 0) {
                out.path.push_back({p, pt, nstart.pt});
                out.holonomy += d0;
                out.kind = RayStop::Kind::Closed;
                return out;
            }
        }
        out.path.push_back({p, pt, ex.point});
        out.holonomy += ex.point - pt;
        if (ex.vertex >= 0) {
            int k = s_.classOf[p][ex.vertex];
            if (s_.isSingularClass[k]) {
                out.kind = RayStop::Kind::Singular;
                out.endGerm = reversedGermAt(p, ex.vertex, dir);
                return out;
            }
            Corner c = s_.cornerAtClassContaining(k, dir, Corner{p, ex.vertex});
            p = c.poly;
            pt = s_.vtx(c.poly, c.vtx);
        } else {
            EdgeRef pr = s_.partner(p, ex.edge);
            Vec2 shift = s_.vtx(pr.poly, (pr.edge + 1) % s_.nv(pr.poly)) - s_.vtx(p, ex.edge);
            pt = ex.point + shift;
            p = pr.poly;
        }
        ++out.crossings;
    }
    return out;
}

Loc Tracer::pointAlong(const std::vector<PathSeg>& path, const Rat& frac) const {
    // total displacement is measured along the (constant) direction; use the
    // dominant coordinate of the overall holonomy as the exact parameter
    Vec2 total(FE(0), FE(0));
    for (const auto& seg : path) total += seg.b - seg.a;
    bool useX = total.x.abs() >= total.y.abs();
    FE tot = useX ? total.x : total.y;
    FE target = tot * FE(Rat(frac));
    FE acc(0);
    for (const auto& seg : path) {
        Vec2 d = seg.b - seg.a;
        FE len = useX ? d.x : d.y;
        FE next = acc + len;
        // target in [acc, next) measured with the sign of tot
        FE lo = acc, hi = next;
        bool fwd = tot.sign() >= 0;
        bool inside = fwd ? (target >= lo && target < hi) : (target <= lo && target > hi);
        if (inside) {
            FE lam = (target - acc) / len;
            return Loc{seg.poly, seg.a + d * lam};
        }
        acc = next;
    }
    throw SurfaceError("Internal", "pointAlong fraction outside path");
}

}  // namespace g2
