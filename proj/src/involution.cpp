#include "g2cyl/involution.hpp"

#include "g2cyl/decompose.hpp"

#include <algorithm>
#include <map>

namespace g2 {

int germPosCompare(const Surface& s, const Germ& g, const Germ& h) {
    if (g.cls != h.cls) throw SurfaceError("Internal", "germs at different classes");
    if (g.fanIdx != h.fanIdx) return g.fanIdx < h.fanIdx ? -1 : 1;
    // same corner: order by CCW angle from the corner's start edge
    if (parallelSameDir(g.dir, h.dir)) return 0;
    FE w = wedge(g.dir, h.dir);
    int sw = w.sign();
    if (sw != 0) return sw > 0 ? -1 : 1;
    // opposite directions within one (straight) corner: earlier = closer to start
    const Corner& c = s.fans[g.cls][g.fanIdx];
    return parallelSameDir(g.dir, s.cornerDirOut(c)) ? -1 : 1;
}

int pencilCrossings(const Surface& s, const Pencil& refPencil, const Germ& from, const Germ& to) {
    // count pencil germs h with position in cyclic (from, to]
    int count = 0;
    for (int i = 0; i < refPencil.size(); ++i) {
        Germ h = refPencil.germ(s, i);
        int cFrom = germPosCompare(s, from, h);  // h vs from
        int cTo = germPosCompare(s, h, to);
        // cyclic interval (from, to]: with linear positions p(from), p(h), p(to):
        bool inside;
        int cFromTo = germPosCompare(s, from, to);
        if (cFromTo == 0)
            inside = false;  // empty interval unless full circle (not used)
        else if (cFromTo < 0)
            inside = (cFrom < 0) && (cTo <= 0);
        else
            inside = (cFrom < 0) || (cTo <= 0);
        if (inside) ++count;
    }
    return count;
}

Germ InvolutionData::germImage(const Surface& s, const Germ& g) const {
    int z = g.cls;
    if (z < 0 || z >= (int)anchors.size() || anchors[z].ref.cls < 0)
        throw SurfaceError("NotFound", "no involution anchor at class");
    const Anchor& an = anchors[z];
    int z2 = classImage[z];
    Vec2 ref(FE(1), FE(0));
    Pencil p1 = buildPencil(s, z, ref);
    Pencil p2 = buildPencil(s, z2, ref);
    int m = pencilCrossings(s, p1, an.ref, g);
    // candidates: germs of direction -g.dir at z2 with matching crossing count
    Vec2 target = -g.dir;
    const auto& fan2 = s.fans[z2];
    for (int fi = 0; fi < (int)fan2.size(); ++fi) {
        if (!s.cornerContains(fan2[fi], target)) continue;
        Germ cand;
        cand.cls = z2;
        cand.fanIdx = fi;
        cand.dir = target;
        if (pencilCrossings(s, p2, an.img, cand) == m) return cand;
    }
    throw SurfaceError("NotFound", "involution germ image not found");
}

bool InvolutionData::saddleInvariant(const Surface& s, const Tracer& tr, const Germ& g1,
                                     const Germ& g2) const {
    Germ img = germImage(s, g1);
    return img.sameRay(g1) || img.sameRay(g2);
}

namespace {

// Solve for anchors[z2].img: the germ Y (direction (-1,0) at z1) such that the
// z2->z1 map anchored at (ref2, Y) sends `h` to `gTarget`.
Germ solveInverseAnchor(const Surface& s, int z1, const Pencil& p1, const Germ& ref2,
                        const Pencil& p2, const Germ& h, const Germ& gTarget) {
    int m = pencilCrossings(s, p2, ref2, h);
    const auto& fan1 = s.fans[z1];
    Vec2 minusRef(FE(-1), FE(0));
    for (int fi = 0; fi < (int)fan1.size(); ++fi) {
        if (!s.cornerContains(fan1[fi], minusRef)) continue;
        Germ cand;
        cand.cls = z1;
        cand.fanIdx = fi;
        cand.dir = minusRef;
        if (pencilCrossings(s, p1, cand, gTarget) == m) return cand;
    }
    throw SurfaceError("NotFound", "inverse anchor not found");
}

bool verifyCandidate(const Surface& s, const Tracer& tr, const InvolutionData& inv,
                     const std::vector<FoundSaddle>& rays, long budget) {
    std::map<std::string, std::pair<Vec2, Germ>> traced;
    for (const auto& r : rays) {
        RayStop st = tr.separatrix(r.start, budget);
        if (st.kind != RayStop::Kind::Singular) return false;
        Germ img;
        try {
            img = inv.germImage(s, r.start);
        } catch (const SurfaceError&) {
            return false;
        }
        RayStop ist = tr.separatrix(img, budget);
        if (ist.kind != RayStop::Kind::Singular) return false;
        if (!(ist.holonomy + st.holonomy).isZero()) return false;
        Germ endImg;
        try {
            endImg = inv.germImage(s, st.endGerm);
        } catch (const SurfaceError&) {
            return false;
        }
        if (!ist.endGerm.sameRay(endImg)) return false;
    }
    return true;
}

}  // namespace

namespace {

// The hyperelliptic involution maps every cylinder to itself (setwise); a
// candidate that moves some cylinder is a different symmetry and is dropped.
bool cylindersInvariant(const Surface& s, const InvolutionData& inv) {
    std::vector<Vec2> dirs = {Vec2(FE(1), FE(0)), Vec2(FE(0), FE(1)), Vec2(FE(1), FE(1)),
                              Vec2(FE(1), FE(-1))};
    for (const Vec2& d : dirs) {
        Decomposition dec;
        try {
            dec = decompose(s, d, defaultBudget(), nullptr);
        } catch (const SurfaceError&) {
            return false;
        }
        if (dec.status != Decomposition::Status::Periodic) continue;
        for (const auto& cyl : dec.cylinders) {
            for (int sid : cyl.bottom) {
                Germ img;
                try {
                    img = inv.germImage(s, dec.saddles[sid].gPlus);
                } catch (const SurfaceError&) {
                    return false;
                }
                bool onCyl = false;
                for (const auto& side : {cyl.bottom, cyl.top})
                    for (int tid : side)
                        if (dec.saddles[tid].gPlus.sameRay(img) ||
                            dec.saddles[tid].gMinus.sameRay(img))
                            onCyl = true;
                if (!onCyl) return false;
            }
        }
    }
    return true;
}

}  // namespace

InvolutionData computeInvolution(const Surface& s) {
    Tracer tr(s);
    InvolutionData inv;
    inv.classImage.assign(s.nClasses, -1);
    inv.anchors.assign(s.nClasses, {});
    Vec2 ref(FE(1), FE(0));

    const auto& sing = s.singularClasses;
    if (sing.size() == 1) {
        // H(2): the involution fixes the zero and rotates its fan by half
        int z = sing[0];
        inv.classImage[z] = z;
        Pencil p = buildPencil(s, z, ref);
        int i0 = 0;
        while (!p.entries[i0].positive) ++i0;
        inv.anchors[z].ref = p.germ(s, i0);
        inv.anchors[z].img = p.germ(s, (i0 + s.turns[z]) % p.size());
        // smoke verification on short saddles
        FE r2 = s.area * FE(4);
        auto rays = enumerateSaddleRays(s, r2);
        if (rays.size() > 40) rays.resize(40);
        if (!verifyCandidate(s, tr, inv, rays, defaultBudget()))
            throw SurfaceError("NotFound", "involution verification failed in H(2)");
        return inv;
    }
    if (sing.size() != 2)
        throw SurfaceError("NotFound", "expected one or two singular classes");

    int z1 = sing[0], z2 = sing[1];
    Pencil p1 = buildPencil(s, z1, ref);
    Pencil p2 = buildPencil(s, z2, ref);
    int i1 = 0;
    while (!p1.entries[i1].positive) ++i1;
    Germ ref1 = p1.germ(s, i1);
    int i2 = 0;
    while (!p2.entries[i2].positive) ++i2;
    Germ ref2 = p2.germ(s, i2);

    FE r2 = s.area * FE(4);
    for (int attempt = 0; attempt < 4; ++attempt) {
        auto rays = enumerateSaddleRays(s, r2);
        if (rays.size() > 60) rays.resize(60);
        std::vector<InvolutionData> passing;
        for (int j = 0; j < p2.size(); ++j) {
            if (p2.entries[j].positive) continue;  // need a (-1,0) germ
            InvolutionData cand;
            cand.classImage.assign(s.nClasses, -1);
            cand.anchors.assign(s.nClasses, {});
            cand.classImage[z1] = z2;
            cand.classImage[z2] = z1;
            cand.anchors[z1] = {ref1, p2.germ(s, j)};
            try {
                cand.anchors[z2] = {ref2, solveInverseAnchor(s, z1, p1, ref2, p2,
                                                             p2.germ(s, j), ref1)};
            } catch (const SurfaceError&) {
                continue;
            }
            if (verifyCandidate(s, tr, cand, rays, defaultBudget())) passing.push_back(cand);
        }
        if (passing.size() > 1) {
            std::vector<InvolutionData> strict;
            for (auto& cand : passing)
                if (cylindersInvariant(s, cand)) strict.push_back(cand);
            if (!strict.empty()) passing = std::move(strict);
        }
        if (passing.size() == 1) return passing[0];
        if (passing.empty()) throw SurfaceError("NotFound", "no involution candidate verified");
        r2 = r2 * FE(4);  // more saddles to separate candidates
    }
    throw SurfaceError("NotFound", "involution candidates not separated");
}

}  // namespace g2
