#pragma once

#include <map>
#include <set>

#include "g2cyl/builders.hpp"
#include "g2cyl/intersect.hpp"
#include "g2cyl/saddles.hpp"

namespace g2test {
using namespace g2;

// all cylinders (and degenerates) found in saddle directions up to maxNormSq
inline std::vector<Cylinder> gatherCylinders(const Surface& s, const InvolutionData* inv,
                                             const FE& maxNormSq, bool includeDegenerate = true) {
    std::vector<Cylinder> out;
    std::set<std::string> seen;
    for (const auto& d : saddleDirections(s, maxNormSq)) {
        auto dec = decompose(s, d.v, defaultBudget(), inv);
        if (dec.status != Decomposition::Status::Periodic) continue;
        for (const auto& c : dec.cylinders)
            if (seen.insert(c.key).second) out.push_back(c);
        if (includeDegenerate)
            for (const auto& c : dec.degenerates)
                if (seen.insert(c.key).second) out.push_back(c);
    }
    return out;
}

// independent oracle for non-degenerate pairs: re-trace each core at another
// height inside its cylinder and count strict-interior segment crossings.
// Any boundary-parameter incidence triggers a retry at a different height.
inline std::vector<PathSeg> offsetCore(const Surface& s, const Cylinder& c, long k) {
    Tracer tr(s);
    Vec2 m = rot90ccw(c.dplus);
    const PathSeg& s0 = c.core[0];
    Vec2 pm = (s0.a + s0.b) * FE(Rat(1, 2));
    // smallest admissible denominator: denom^2 > 4|m|^2/heightSq
    FE q = FE(4) * m.normSq() / c.heightSq;
    long base = mpz_get_si(isqrt(feFloor(q)).get_mpz_t()) + 2;
    for (long denom = base + k; denom < base + k + 60; ++denom) {
        FE eps = FE(1) / FE(denom);
        // stay strictly inside: eps^2*|m|^2 < heightSq/4
        if (!((eps * eps * m.normSq()) < c.heightSq / FE(4))) continue;
        // walk distance eps*|m| transversally, moving across charts
        RayStop up = tr.ray(Loc{s0.poly, pm}, m, defaultBudget());
        Vec2 target = m * eps;
        bool useX = !m.x.isZero();
        FE want = useX ? target.x : target.y;
        Loc q{-1, Vec2(FE(0), FE(0))};
        FE acc(0);
        for (const auto& seg : up.path) {
            Vec2 d = seg.b - seg.a;
            FE len = useX ? d.x : d.y;
            FE next = acc + len;
            bool fwd = want.sign() >= 0;
            bool inside = fwd ? (want >= acc && want < next) : (want <= acc && want > next);
            if (inside) {
                FE lam = (want - acc) / len;
                q = Loc{seg.poly, seg.a + d * lam};
                break;
            }
            acc = next;
        }
        if (q.poly < 0) continue;
        RayStop leaf = tr.closedLeaf(q, c.dplus, defaultBudget());
        if (leaf.kind == RayStop::Kind::Closed) return leaf.path;
    }
    throw SurfaceError("Internal", "offsetCore failed");
}

struct OracleCache {
    std::map<std::string, std::vector<std::vector<PathSeg>>> cores;
    const std::vector<PathSeg>& get(const Surface& s, const Cylinder& c, int variant) {
        auto& v = cores[c.key];
        while ((int)v.size() <= variant)
            v.push_back(offsetCore(s, c, 3 + 7 * (long)v.size()));
        return v[variant];
    }
};

inline long bruteCrossings(const Surface& s, const Cylinder& c, const Cylinder& d,
                           OracleCache& cache) {
    if (c.dir == d.dir) return 0;  // only used for non-degenerate pairs
    static const int combos[][2] = {{0, 1}, {1, 0}, {0, 2}, {2, 1}, {1, 2},
                                    {2, 0}, {0, 3}, {3, 1}, {2, 3}, {3, 2}};
    for (auto [va, vb] : combos) {
        const auto& ca = cache.get(s, c, va);
        const auto& cb = cache.get(s, d, vb);
        long n = 0;
        bool clean = true;
        for (const auto& sa : ca) {
            for (const auto& sb : cb) {
                if (sa.poly != sb.poly) continue;
                Vec2 e1 = sa.b - sa.a, e2 = sb.b - sb.a;
                FE den = wedge(e1, e2);
                if (den.isZero()) continue;
                FE t = wedge(sb.a - sa.a, e2) / den;
                FE u = wedge(sb.a - sa.a, e1) / den;
                if (t.sign() < 0 || (t - FE(1)).sign() > 0) continue;
                if (u.sign() < 0 || (u - FE(1)).sign() > 0) continue;
                if (t.sign() == 0 || (t - FE(1)).sign() == 0 || u.sign() == 0 ||
                    (u - FE(1)).sign() == 0) {
                    clean = false;  // boundary incidence: retry at other heights
                } else {
                    ++n;
                }
            }
        }
        if (clean) return n;
    }
    throw SurfaceError("Internal", "bruteCrossings found no clean height");
}

inline long bruteCrossings(const Surface& s, const Cylinder& c, const Cylinder& d) {
    OracleCache cache;
    return bruteCrossings(s, c, d, cache);
}

}  // namespace g2test
