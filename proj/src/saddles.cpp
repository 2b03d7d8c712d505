#include "g2cyl/saddles.hpp"

#include <algorithm>
#include <deque>

namespace g2 {

namespace {

// Cone of directions at the unfolding apex: CCW from l to r, opening in
// (0, pi]; the l ray is included unless lOpen.
struct Cone {
    Vec2 l, r;
    bool lOpen = false;
};

bool coneContains(const Cone& c, const Vec2& d) {
    if (parallelSameDir(d, c.l)) return !c.lOpen;
    if (parallelSameDir(d, c.r)) return false;  // right boundary always open here
    FE w = wedge(c.l, c.r);
    int sw = w.sign();
    if (sw > 0) return wedge(c.l, d).sign() > 0 && wedge(d, c.r).sign() > 0;
    if (sw == 0) return wedge(c.l, d).sign() > 0;  // opening exactly pi
    throw SurfaceError("Internal", "cone wider than pi");
}

// Intersect cone with the closed CCW sector [a, b] (opening <= pi).
// Empty result signalled by found=false.
struct ConeOpt {
    bool found = false;
    Cone cone;
};

ConeOpt intersectSector(const Cone& c, const Vec2& a, const Vec2& b) {
    ConeOpt out;
    Cone r;
    // new left bound
    if (coneContains(c, a)) {
        r.l = a;
        r.lOpen = false;
        if (parallelSameDir(a, c.l)) r.lOpen = c.lOpen;
    } else if (sectorContainsHalfOpen(a, b, c.l) || parallelSameDir(c.l, b)) {
        if (parallelSameDir(c.l, b)) return out;  // touch at a single ray, open side
        r.l = c.l;
        r.lOpen = c.lOpen;
    } else {
        return out;
    }
    // new right bound: the earlier of c.r and b along CCW from r.l
    auto ccwLeq = [&](const Vec2& u, const Vec2& v) {
        // does u come no later than v, sweeping CCW from r.l (within <= pi)?
        if (parallelSameDir(u, v)) return true;
        FE w = wedge(u, v);
        int sw = w.sign();
        if (sw != 0) return sw > 0;
        // exactly opposite: the one aligned with the sweep start comes first
        return parallelSameDir(u, r.l);
    };
    r.r = ccwLeq(b, c.r) ? b : c.r;
    // nonempty opening?
    if (parallelSameDir(r.l, r.r)) return out;
    FE w = wedge(r.l, r.r);
    if (w.sign() < 0) {
        if (dot(r.l, r.r).sign() >= 0) return out;  // reflex, cannot happen for valid input
        return out;
    }
    if (w.sign() == 0 && dot(r.l, r.r).sign() > 0) return out;
    out.found = true;
    out.cone = r;
    return out;
}

struct State {
    int poly;
    Vec2 shift;  // polygon coords + shift = apex coords
    Cone cone;
    int depth;
};

}  // namespace

std::vector<FoundSaddle> enumerateSaddleRays(const Surface& s, const FE& maxNormSq) {
    if (maxNormSq.sign() <= 0) throw SurfaceError("BadBudget", "maxNormSq must be positive");
    std::vector<FoundSaddle> out;
    const long maxStates = 2000000;
    for (int cls : s.singularClasses) {
        const auto& fan = s.fans[cls];
        for (int fi = 0; fi < (int)fan.size(); ++fi) {
            const Corner& c0 = fan[fi];
            std::deque<State> work;
            State st0;
            st0.poly = c0.poly;
            st0.shift = -s.vtx(c0.poly, c0.vtx);
            st0.cone = Cone{s.cornerDirOut(c0), s.cornerDirIn(c0), false};
            // the corner sector may open wider than pi only at straight corners
            st0.depth = 0;
            // corner opening is <= pi by convexity
            work.push_back(st0);
            long states = 0;
            while (!work.empty()) {
                if (++states > maxStates)
                    throw SurfaceError("BadBudget", "saddle enumeration state cap hit");
                State st = work.front();
                work.pop_front();
                int n = s.nv(st.poly);
                // vertices inside the cone (skipping ones occluded by a
                // closer singular vertex on the same ray)
                for (int v = 0; v < n; ++v) {
                    Vec2 W = s.vtx(st.poly, v) + st.shift;
                    if (W.isZero()) continue;
                    if (!coneContains(st.cone, W)) continue;
                    if ((maxNormSq - W.normSq()).sign() < 0) continue;
                    int k = s.classOf[st.poly][v];
                    if (!s.isSingularClass[k]) continue;
                    bool occluded = false;
                    for (int w2 = 0; w2 < n; ++w2) {
                        if (w2 == v) continue;
                        Vec2 W2 = s.vtx(st.poly, w2) + st.shift;
                        if (W2.isZero()) continue;
                        if (!s.isSingularClass[s.classOf[st.poly][w2]]) continue;
                        if (parallelSameDir(W2, W) &&
                            (W.normSq() - W2.normSq()).sign() > 0)
                            occluded = true;
                    }
                    if (occluded) continue;
                    Germ g;
                    g.cls = cls;
                    g.fanIdx = fi;
                    g.dir = W;
                    out.push_back({g, W});
                }
                // split the cone at singular vertices inside it, then recurse
                // across edges; we simply recurse per edge with sub-sectors and
                // let singular vertices terminate rays via sector bounds:
                for (int e = 0; e < n; ++e) {
                    Vec2 A = s.vtx(st.poly, e) + st.shift;
                    Vec2 B = s.vtx(st.poly, (e + 1) % n) + st.shift;
                    if (A.isZero() || B.isZero()) continue;  // apex corner edges
                    FE wab = wedge(A, B);
                    if (wab.sign() <= 0) continue;  // not facing the apex (or collinear)
                    ConeOpt sub = intersectSector(st.cone, A, B);
                    if (!sub.found) continue;
                    // prune by distance to the chord
                    FE d2 = wab * wab / (B - A).normSq();
                    if ((maxNormSq - d2).sign() < 0) continue;
                    // block rays at singular vertices: subdivide at any
                    // singular vertex direction inside the sub-cone
                    std::vector<Cone> parts{sub.cone};
                    for (int v = 0; v < n; ++v) {
                        Vec2 W = s.vtx(st.poly, v) + st.shift;
                        if (W.isZero()) continue;
                        int k = s.classOf[st.poly][v];
                        if (!s.isSingularClass[k]) continue;
                        std::vector<Cone> next;
                        for (const Cone& pc : parts) {
                            if (coneContains(pc, W) && !parallelSameDir(W, pc.l)) {
                                Cone lo{pc.l, W, pc.lOpen};
                                Cone hi{W, pc.r, true};
                                next.push_back(lo);
                                next.push_back(hi);
                            } else if (parallelSameDir(W, pc.l) && !pc.lOpen) {
                                Cone hi{pc.l, pc.r, true};
                                next.push_back(hi);
                            } else {
                                next.push_back(pc);
                            }
                        }
                        parts = std::move(next);
                    }
                    EdgeRef pr = s.partner(st.poly, e);
                    Vec2 nshift =
                        st.shift + (s.vtx(st.poly, e) -
                                    s.vtx(pr.poly, (pr.edge + 1) % s.nv(pr.poly)));
                    for (const Cone& pc : parts) {
                        State ns;
                        ns.poly = pr.poly;
                        ns.shift = nshift;
                        ns.cone = pc;
                        ns.depth = st.depth + 1;
                        work.push_back(ns);
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [&s](const FoundSaddle& x, const FoundSaddle& y) {
        int c = FE::keyCompare(x.holonomy.normSq(), y.holonomy.normSq());
        if (c != 0) return c < 0;
        c = vecKeyCompare(x.holonomy, y.holonomy);
        if (c != 0) return c < 0;
        return x.start.key(s) < y.start.key(s);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [&s](const FoundSaddle& x, const FoundSaddle& y) {
                              return x.holonomy == y.holonomy &&
                                     x.start.key(s) == y.start.key(s);
                          }),
              out.end());
    return out;
}

std::vector<Direction> saddleDirections(const Surface& s, const FE& maxNormSq) {
    auto rays = enumerateSaddleRays(s, maxNormSq);
    std::vector<Direction> dirs;
    for (const auto& r : rays) dirs.push_back(Direction(r.holonomy));
    std::sort(dirs.begin(), dirs.end(),
              [](const Direction& a, const Direction& b) { return Direction::keyCompare(a, b) < 0; });
    dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
    return dirs;
}

}  // namespace g2
