#include "g2cyl/intersect.hpp"

#include <algorithm>

namespace g2 {

namespace {

// Canonical identifier of a surface point given in one polygon chart:
// vertices collapse to their class, edge points to the lexicographically
// smaller of their two charts.
struct PointId {
    int kind;  // 0 vertex class, 1 edge/interior chart point
    int a;     // class id or polygon
    Vec2 pt;
    bool operator<(const PointId& o) const {
        if (kind != o.kind) return kind < o.kind;
        if (a != o.a) return a < o.a;
        return vecKeyCompare(pt, o.pt) < 0;
    }
    bool operator==(const PointId& o) const {
        return kind == o.kind && a == o.a && pt == o.pt;
    }
};

PointId canonicalPoint(const Surface& s, int poly, const Vec2& pt, bool* singular) {
    *singular = false;
    for (int v = 0; v < s.nv(poly); ++v)
        if (s.vtx(poly, v) == pt) {
            int k = s.classOf[poly][v];
            *singular = s.isSingularClass[k];
            return PointId{0, k, Vec2(FE(0), FE(0))};
        }
    PointId best{1, poly, pt};
    for (int e = 0; e < s.nv(poly); ++e) {
        const Vec2& A = s.vtx(poly, e);
        Vec2 E = s.edgeVec(poly, e);
        Vec2 w = pt - A;
        if (!wedge(E, w).isZero()) continue;
        FE t = dot(w, E) / E.normSq();
        if (t.sign() <= 0 || (t - FE(1)).sign() >= 0) continue;
        EdgeRef pr = s.partner(poly, e);
        Vec2 shift = s.vtx(pr.poly, (pr.edge + 1) % s.nv(pr.poly)) - A;
        PointId cand{1, pr.poly, pt + shift};
        if (cand < best) best = cand;
        break;
    }
    return best;
}

}  // namespace

bool germsInterleave(const Surface& s, const Germ& aIn, const Germ& aOut, const Germ& bIn,
                     const Germ& bOut) {
    // coincident rays mean an overlap, never a transversal crossing
    for (const Germ* ga : {&aIn, &aOut})
        for (const Germ* gb : {&bIn, &bOut})
            if (ga->sameRay(*gb)) return false;
    // b-rays strictly inside the cyclic interval (aIn, aOut): count must be 1
    auto inside = [&](const Germ& x) {
        int ci = germPosCompare(s, aIn, x);
        int co = germPosCompare(s, x, aOut);
        int cio = germPosCompare(s, aIn, aOut);
        if (cio == 0) return false;
        if (cio < 0) return ci < 0 && co < 0;
        return ci < 0 || co < 0;
    };
    int cnt = (inside(bIn) ? 1 : 0) + (inside(bOut) ? 1 : 0);
    return cnt == 1;
}

namespace {

// A pinch passage of a resolved degenerate core near one zero, as a chord of
// the link circle. Endpoints carry symbolic offsets used to separate rays
// that run along a saddle shared by the two curves.
struct VRay {
    Germ g;
    int off = 0;  // symbolic perturbation in units of "epsilon", CCW-positive
};

struct Chord {
    int cls;
    VRay a, b;
};

int vrayCompare(const Surface& s, const VRay& x, const VRay& y) {
    int c = germPosCompare(s, x.g, y.g);
    if (c != 0) return c;
    return x.off < y.off ? -1 : (x.off > y.off ? 1 : 0);
}

bool chordsInterleave(const Surface& s, const Chord& p, const Chord& q) {
    if (p.cls != q.cls) return false;
    auto inside = [&](const VRay& x) {
        int ci = vrayCompare(s, p.a, x);
        int co = vrayCompare(s, x, p.b);
        int cio = vrayCompare(s, p.a, p.b);
        if (cio == 0) return false;
        if (cio < 0) return ci < 0 && co < 0;
        return ci < 0 || co < 0;
    };
    return (inside(q.a) ? 1 : 0) + (inside(q.b) ? 1 : 0) == 1;
}

// Crossing number of two parallel degenerate cores sharing exactly one
// saddle: resolve both curves off the shared band and off the zeros, then
// count chord interleavings on the link circles.
long sharedSaddleCount(const Surface& s, const Cylinder& A, const Cylinder& B,
                       const std::string& sharedKey) {
    // forward/backward germs of the band in each curve's own traversal
    auto bandGerms = [&](const Cylinder& X, Germ& fwd, Germ& bwd, int& entryIdx) {
        if (X.sadKeys[1] == sharedKey) {
            fwd = X.junctions[0].out;  // start of leg 2
            bwd = X.junctions[1].in;
            entryIdx = 0;
        } else {
            fwd = X.junctions[1].out;  // start of leg 1
            bwd = X.junctions[0].in;
            entryIdx = 1;
        }
    };
    Germ fA, rA, fB, rB;
    int enA, enB;
    bandGerms(A, fA, rA, enA);
    bandGerms(B, fB, rB, enB);
    bool sameDir = fB.sameRay(fA);
    if (!sameDir && !fB.sameRay(rA))
        throw SurfaceError("Internal", "shared saddle germs do not match");
    // hug side in the curve's own frame: entry arc starts at fwd => LEFT
    auto hugLeft = [&](const Cylinder& X, int entryIdx, const Germ& fwd) {
        const Junction& j = X.junctions[entryIdx];
        if (j.arcLo.sameRay(fwd)) return true;
        if (j.arcHi.sameRay(fwd)) return false;
        throw SurfaceError("Internal", "entry arc does not touch the band");
    };
    bool leftA = hugLeft(A, enA, fA);
    bool leftB = hugLeft(B, enB, fB);
    if (!sameDir) leftB = !leftB;  // convert to A's band frame
    // nearness rank when both hug the same side (1 = nearer to the band);
    // measured at the entry end by arc narrowness
    int nearA = 1, nearB = 2;
    if (leftA == leftB) {
        const Junction& ja = A.junctions[enA];
        const Junction& jb = B.junctions[sameDir ? enB : 1 - enB];
        // compare the non-band endpoints of the entry arcs in A's frame; for
        // opposite orientation B's "entry" at A's f-end is its exit junction
        Germ aFree = ja.arcLo.sameRay(fA) ? ja.arcHi : ja.arcLo;
        const Junction& jbF = jb;
        Germ bFree = jbF.arcLo.sameRay(fA) ? jbF.arcHi
                     : jbF.arcHi.sameRay(fA) ? jbF.arcLo
                     : jbF.arcLo.sameRay(rA) ? jbF.arcHi
                                             : jbF.arcLo;
        // narrower arc hugs closer; on the LEFT the narrower has the earlier
        // free end after f, on the RIGHT the later free end before f
        int cmp = germPosCompare(s, aFree, bFree);
        bool aNarrow;
        auto cyclicInside = [&](const Germ& lo, const Germ& x, const Germ& hi) {
            int ci = germPosCompare(s, lo, x);
            int co = germPosCompare(s, x, hi);
            int cio = germPosCompare(s, lo, hi);
            if (cio == 0) return false;
            if (cio < 0) return ci < 0 && co < 0;
            return ci < 0 || co < 0;
        };
        (void)cmp;
        if (leftA)
            aNarrow = cyclicInside(fA, aFree, bFree);
        else
            aNarrow = cyclicInside(bFree, aFree, fA);
        nearA = aNarrow ? 1 : 2;
        nearB = aNarrow ? 2 : 1;
    }
    // virtual offset at a band germ: CCW-positive = (hug LEFT) xor (backward)
    auto offAt = [&](bool left, bool backward, int near) {
        int sign = (left != backward) ? 1 : -1;
        return sign * near;
    };
    auto chordsOf = [&](const Cylinder& X, bool left, int near, const Germ& fwd,
                        const Germ& bwd) {
        std::vector<Chord> out;
        for (const auto& j : X.junctions) {
            Chord ch;
            ch.cls = j.cls;
            ch.a = {j.arcLo, 0};
            ch.b = {j.arcHi, 0};
            for (VRay* v : {&ch.a, &ch.b}) {
                if (v->g.sameRay(fwd))
                    v->off = offAt(left, false, near);
                else if (v->g.sameRay(bwd))
                    v->off = offAt(left, true, near);
            }
            out.push_back(ch);
        }
        return out;
    };
    auto ca = chordsOf(A, leftA, nearA, fA, rA);
    auto cb = chordsOf(B, leftB, nearB, fA, rA);  // band germs in A's frame
    long n = 0;
    for (const auto& p : ca)
        for (const auto& q : cb)
            if (chordsInterleave(s, p, q)) ++n;
    return n;
}

}  // namespace

long intersectionNumber(const Surface& s, const Cylinder& c, const Cylinder& d) {
    long n = 0;
    if (c.dir == d.dir) {
        if (!c.degenerate || !d.degenerate) return 0;
        if (c.key == d.key) return 0;
        int shared = 0;
        std::string sharedKey;
        for (const auto& ka : c.sadKeys)
            for (const auto& kb : d.sadKeys)
                if (ka == kb) {
                    ++shared;
                    sharedKey = ka;
                }
        if (shared >= 2)
            throw SurfaceError("Internal", "degenerate pair sharing both saddles");
        if (shared == 1) return sharedSaddleCount(s, c, d, sharedKey);
        for (const auto& ja : c.junctions)
            for (const auto& jb : d.junctions)
                if (ja.cls == jb.cls && germsInterleave(s, ja.in, ja.out, jb.in, jb.out)) ++n;
        return n;
    }
    // transversal crossings away from the zeros: distinct geometric points
    // where the two cores meet (two non-parallel geodesics through a regular
    // point always cross there)
    std::vector<PointId> pts;
    for (const auto& sa : c.core) {
        for (const auto& sb : d.core) {
            if (sa.poly != sb.poly) continue;
            Vec2 e1 = sa.b - sa.a, e2 = sb.b - sb.a;
            FE den = wedge(e1, e2);
            if (den.isZero()) continue;
            FE t = wedge(sb.a - sa.a, e2) / den;
            FE u = wedge(sb.a - sa.a, e1) / den;
            if (t.sign() < 0 || (t - FE(1)).sign() > 0) continue;
            if (u.sign() < 0 || (u - FE(1)).sign() > 0) continue;
            bool singular = false;
            PointId id = canonicalPoint(s, sa.poly, sa.a + e1 * t, &singular);
            if (singular) continue;  // zero passages scored by the germ rule
            pts.push_back(id);
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    n = (long)pts.size();
    if (c.degenerate && d.degenerate) {
        for (const auto& ja : c.junctions)
            for (const auto& jb : d.junctions)
                if (ja.cls == jb.cls && germsInterleave(s, ja.in, ja.out, jb.in, jb.out)) ++n;
    }
    return n;
}

}  // namespace g2
