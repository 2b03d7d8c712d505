#include "g2cyl/decompose.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace g2 {

namespace {

std::string saddleKey(const Surface& s, const Germ& a, const Germ& b) {
    std::string ka = a.key(s), kb = b.key(s);
    if (kb < ka) std::swap(ka, kb);
    return ka + "|" + kb;
}

std::string cylKey(const Surface& s, const Cylinder& c,
                   const std::vector<SaddleConn>& sads) {
    std::ostringstream os;
    os << (c.degenerate ? "deg[" : "cyl[") << c.dir.str() << "]";
    std::vector<std::string> keys;
    if (c.degenerate) {
        keys = {sads[c.sad1].key, sads[c.sad2].key};
    } else {
        for (int i : c.bottom) keys.push_back(sads[i].key);
        for (int i : c.top) keys.push_back(sads[i].key);
    }
    std::sort(keys.begin(), keys.end());
    for (auto& k : keys) os << "{" << k << "}";
    return os.str();
}

// position of germ g in the pencil (entry index), or -1
int pencilEntryOf(const Surface& s, const Pencil& p, const Germ& g) {
    for (int i = 0; i < p.size(); ++i) {
        Germ h = p.germ(s, i);
        if (h.fanIdx == g.fanIdx && parallelSameDir(h.dir, g.dir)) return i;
    }
    return -1;
}

}  // namespace

Decomposition decompose(const Surface& s, const Vec2& dirRaw, long budget,
                        const InvolutionData* inv) {
    Tracer tr(s);
    Decomposition dec;
    dec.dir = Direction(dirRaw);
    // oriented representative of the direction
    Vec2 dp = dec.dir.v;  // canonical (x,1) or (1,0)
    dec.dplus = dp;

    // pencils at all singular classes
    std::map<int, Pencil> pencils;
    for (int cls : s.singularClasses) pencils.emplace(cls, buildPencil(s, cls, dp));

    // trace all germs
    struct Traced {
        Germ g;
        RayStop stop;
    };
    std::map<std::string, int> germToTrace;
    std::vector<Traced> traces;
    for (auto& [cls, p] : pencils) {
        for (int i = 0; i < p.size(); ++i) {
            Germ g = p.germ(s, i);
            RayStop st = tr.separatrix(g, budget);
            if (st.kind != RayStop::Kind::Singular) {
                dec.status = Decomposition::Status::Budget;
                return dec;
            }
            germToTrace[g.key(s)] = (int)traces.size();
            traces.push_back({g, st});
        }
    }

    // saddle connections: pair each germ with its end germ
    std::map<std::string, int> saddleIdx;
    for (const auto& t : traces) {
        std::string key = saddleKey(s, t.g, t.stop.endGerm);
        if (saddleIdx.count(key)) continue;
        // consistency: retrace from the end germ
        auto it = germToTrace.find(t.stop.endGerm.key(s));
        if (it == germToTrace.end())
            throw SurfaceError("Internal", "end germ not in pencil set");
        const Traced& back = traces[it->second];
        if (!back.stop.endGerm.sameRay(t.g))
            throw SurfaceError("Internal", "saddle retrace mismatch");
        SaddleConn sc;
        sc.id = (int)dec.saddles.size();
        bool plus = parallelSameDir(t.g.dir, dp);
        sc.gPlus = plus ? t.g : t.stop.endGerm;
        sc.gMinus = plus ? t.stop.endGerm : t.g;
        const Traced& fromPlus = plus ? t : back;
        sc.holPlus = fromPlus.stop.holonomy;
        sc.path = fromPlus.stop.path;
        sc.key = key;
        if (inv) sc.invariant = inv->saddleInvariant(s, tr, sc.gPlus, sc.gMinus);
        saddleIdx[key] = sc.id;
        dec.saddles.push_back(std::move(sc));
    }

    auto saddleOfGerm = [&](const Germ& g) -> int {
        auto it = germToTrace.find(g.key(s));
        if (it == germToTrace.end()) throw SurfaceError("Internal", "germ not traced");
        const Traced& t = traces[it->second];
        return saddleIdx.at(saddleKey(s, t.g, t.stop.endGerm));
    };

    // chain steps on +d saddles
    auto chainNext = [&](int sid, bool bottomSide) -> int {
        const SaddleConn& sc = dec.saddles[sid];
        const Germ& r = sc.gMinus;  // end germ, direction -d
        const Pencil& p = pencils.at(r.cls);
        int ei = pencilEntryOf(s, p, r);
        if (ei < 0) throw SurfaceError("Internal", "end germ missing from pencil");
        int ni = bottomSide ? p.nextCW(ei) : p.nextCCW(ei);
        Germ u = p.germ(s, ni);
        if (!parallelSameDir(u.dir, dp)) throw SurfaceError("Internal", "pencil not alternating");
        return saddleOfGerm(u);
    };

    // cycles
    int ns = (int)dec.saddles.size();
    std::vector<int> bottomCycleOf(ns, -1), topCycleOf(ns, -1);
    std::vector<std::vector<int>> bottomCycles, topCycles;
    for (int start = 0; start < ns; ++start) {
        if (bottomCycleOf[start] < 0) {
            std::vector<int> cyc;
            int cur = start;
            while (bottomCycleOf[cur] < 0) {
                bottomCycleOf[cur] = (int)bottomCycles.size();
                cyc.push_back(cur);
                cur = chainNext(cur, true);
            }
            if (cur != start) throw SurfaceError("Internal", "bottom chain not a cycle");
            bottomCycles.push_back(std::move(cyc));
        }
        if (topCycleOf[start] < 0) {
            std::vector<int> cyc;
            int cur = start;
            while (topCycleOf[cur] < 0) {
                topCycleOf[cur] = (int)topCycles.size();
                cyc.push_back(cur);
                cur = chainNext(cur, false);
            }
            if (cur != start) throw SurfaceError("Internal", "top chain not a cycle");
            topCycles.push_back(std::move(cyc));
        }
    }
    if (bottomCycles.size() != topCycles.size())
        throw SurfaceError("Internal", "chain count mismatch");

    // segment index of all saddle paths for crossing detection
    SegIndex segs(s.np());
    for (const auto& sc : dec.saddles)
        for (const auto& seg : sc.path) segs.add(sc.id, seg.poly, seg.a, seg.b);

    Vec2 m = rot90ccw(dp);

    // pair every bottom cycle with its top cycle via a transversal ray
    std::vector<char> topUsed(topCycles.size(), 0);
    for (size_t bi = 0; bi < bottomCycles.size(); ++bi) {
        const auto& cyc = bottomCycles[bi];
        const SaddleConn& s0 = dec.saddles[cyc[0]];
        const Germ& r = s0.gMinus;
        const Pencil& p = pencils.at(r.cls);
        int ei = pencilEntryOf(s, p, r);
        Germ u = p.germ(s, p.nextCW(ei));
        // germ of direction m cyclically between u and r
        Germ mg;
        mg.cls = r.cls;
        mg.dir = m;
        bool found = false;
        for (const Corner& c : s.fans[r.cls]) {
            if (!s.cornerContains(c, m)) continue;
            Germ cand{r.cls, s.fanIndexOf(c), m};
            // strictly inside cyclic interval (u, r)
            int cu = germPosCompare(s, u, cand);
            int cr = germPosCompare(s, cand, r);
            int cur = germPosCompare(s, u, r);
            bool inside = (cur < 0) ? (cu < 0 && cr < 0) : (cu < 0 || cr < 0);
            if (inside) {
                mg = cand;
                found = true;
                break;
            }
        }
        if (!found) throw SurfaceError("Internal", "no transversal germ into cylinder");
        RayStop ray = tr.separatrix(mg, budget, &segs);
        int hitSaddle = -1;
        if (ray.kind == RayStop::Kind::SegCrossing) {
            hitSaddle = ray.hit.id;
        } else if (ray.kind == RayStop::Kind::Singular) {
            // hit a zero lying on the top chain: take the flanking saddle (next
            // pencil germ clockwise from the arrival)
            const Pencil& pz = pencils.at(ray.endGerm.cls);
            // find the pencil germ with largest position <= arrival germ position
            int best = -1;
            for (int i = 0; i < pz.size(); ++i) {
                Germ h = pz.germ(s, i);
                if (germPosCompare(s, h, ray.endGerm) <= 0) best = i;
            }
            if (best < 0) best = pz.size() - 1;
            hitSaddle = saddleOfGerm(pz.germ(s, best));
        } else {
            dec.status = Decomposition::Status::Budget;
            return dec;
        }
        int ti = topCycleOf[hitSaddle];
        if (topUsed[ti]) throw SurfaceError("Internal", "top chain claimed twice");
        topUsed[ti] = 1;

        Cylinder cyl;
        cyl.dir = dec.dir;
        cyl.dplus = dp;
        Vec2 hol(FE(0), FE(0));
        for (int sid : cyc) hol += dec.saddles[sid].holPlus;
        Vec2 holTop(FE(0), FE(0));
        for (int sid : topCycles[ti]) holTop += dec.saddles[sid].holPlus;
        if (!(hol == holTop)) throw SurfaceError("Internal", "chain holonomies differ");
        cyl.holPlus = hol;
        cyl.circSq = hol.normSq();
        cyl.area = wedge(hol, ray.holonomy).abs();
        cyl.heightSq = cyl.area * cyl.area / cyl.circSq;
        cyl.bottom = cyc;
        cyl.top = topCycles[ti];
        cyl.simple = (cyc.size() == 1 && topCycles[ti].size() == 1);
        // mid-height core leaf
        Loc mid = tr.pointAlong(ray.path, Rat(1, 2));
        RayStop leaf = tr.closedLeaf(mid, dp, budget);
        if (leaf.kind != RayStop::Kind::Closed)
            throw SurfaceError("Internal", "core leaf failed to close");
        if (!(leaf.holonomy == hol || leaf.holonomy == -hol))
            throw SurfaceError("Internal", "core holonomy mismatch");
        cyl.core = leaf.path;
        cyl.key = cylKey(s, cyl, dec.saddles);
        dec.cylinders.push_back(std::move(cyl));
    }

    // degenerate cylinders: invariant saddle pairs with both angle conditions
    if (inv) {
        for (int i = 0; i < ns; ++i) {
            if (!dec.saddles[i].invariant) continue;
            for (int j = i + 1; j < ns; ++j) {
                if (!dec.saddles[j].invariant) continue;
                // orientations: s1 in {+,-}, s2 in {+,-}; condition:
                //   entry(start s2) == nextCCW(entry(end s1)) and
                //   entry(end s2) == nextCCW(entry(start s1))
                for (int roles = 0; roles < 2; ++roles)
                for (int o1 = 0; o1 < 2; ++o1) {
                    for (int o2 = 0; o2 < 2; ++o2) {
                        const SaddleConn& a = dec.saddles[roles ? j : i];
                        const SaddleConn& b = dec.saddles[roles ? i : j];
                        Germ aS = o1 ? a.gMinus : a.gPlus;
                        Germ aE = o1 ? a.gPlus : a.gMinus;
                        Germ bS = o2 ? b.gMinus : b.gPlus;
                        Germ bE = o2 ? b.gPlus : b.gMinus;
                        if (aE.cls != bS.cls || bE.cls != aS.cls) continue;
                        const Pencil& pE = pencils.at(aE.cls);
                        const Pencil& pS = pencils.at(aS.cls);
                        int eA = pencilEntryOf(s, pE, aE);
                        int sB = pencilEntryOf(s, pE, bS);
                        int eB = pencilEntryOf(s, pS, bE);
                        int sA = pencilEntryOf(s, pS, aS);
                        if (eA < 0 || sB < 0 || eB < 0 || sA < 0)
                            throw SurfaceError("Internal", "degenerate germ lookup");
                        if (pE.nextCCW(eA) != sB) continue;
                        if (pS.nextCCW(sA) != eB) continue;
                        Cylinder dg;
                        dg.degenerate = true;
                        dg.dir = dec.dir;
                        dg.dplus = dp;
                        dg.sad1 = roles ? j : i;
                        dg.sad2 = roles ? i : j;
                        // oriented holonomies of the two legs
                        Vec2 h1 = o1 ? -a.holPlus : a.holPlus;
                        Vec2 h2 = o2 ? -b.holPlus : b.holPlus;
                        if (!parallelSameDir(h1, h2))
                            throw SurfaceError("Internal", "degenerate legs not aligned");
                        dg.holPlus = h1 + h2;
                        dg.circSq = dg.holPlus.normSq();
                        dg.area = FE(0);
                        dg.heightSq = FE(0);
                        // core: path of s1 (as oriented) then s2
                        auto orientedPath = [&](const SaddleConn& sc, bool rev) {
                            std::vector<PathSeg> p = sc.path;
                            if (rev) {
                                std::reverse(p.begin(), p.end());
                                for (auto& sg : p) std::swap(sg.a, sg.b);
                            }
                            return p;
                        };
                        auto p1v = orientedPath(a, o1);
                        auto p2v = orientedPath(b, o2);
                        // junction after s1 (class aE.cls) and after s2 (aS.cls);
                        // the pinch arcs are the two pi-sectors of the
                        // defining angle conditions
                        Junction j1, j2;
                        j1.cls = aE.cls;
                        j1.in = aE;
                        j1.out = bS;
                        j1.arcLo = aE;
                        j1.arcHi = bS;
                        j1.poly = p2v.front().poly;
                        j1.point = p2v.front().a;
                        j2.cls = aS.cls;
                        j2.in = bE;
                        j2.out = aS;
                        j2.arcLo = aS;
                        j2.arcHi = bE;
                        j2.poly = p1v.front().poly;
                        j2.point = p1v.front().a;
                        dg.core = p1v;
                        dg.core.insert(dg.core.end(), p2v.begin(), p2v.end());
                        dg.junctions = {j1, j2};
                        dg.sadKeys = {dec.saddles[dg.sad1].key, dec.saddles[dg.sad2].key};
                        dg.key = cylKey(s, dg, dec.saddles);
                        bool dup = false;
                        for (const auto& ex : dec.degenerates)
                            if (ex.key == dg.key) dup = true;
                        if (!dup) dec.degenerates.push_back(std::move(dg));
                    }
                }
            }
        }
    }

    // area consistency
    FE total(0);
    for (const auto& c : dec.cylinders) total += c.area;
    if (!(total == s.area)) throw SurfaceError("Internal", "cylinder areas do not sum to area");
    dec.status = Decomposition::Status::Periodic;
    return dec;
}

int locateCylinder(const Surface& s, const Decomposition& dec, const Loc& pt) {
    Tracer tr(s);
    SegIndex segs(s.np());
    for (const auto& sc : dec.saddles)
        for (const auto& seg : sc.path) segs.add(sc.id, seg.poly, seg.a, seg.b);
    Vec2 m = rot90ccw(dec.dplus);
    RayStop ray = tr.ray(pt, m, defaultBudget(), &segs);
    int hitSaddle = -1;
    if (ray.kind == RayStop::Kind::SegCrossing) {
        hitSaddle = ray.hit.id;
    } else if (ray.kind == RayStop::Kind::Singular) {
        // flanking saddle at the zero, as in decompose()
        Pencil pz = buildPencil(s, ray.endGerm.cls, dec.dplus);
        int best = -1;
        for (int i = 0; i < pz.size(); ++i) {
            Germ h = pz.germ(s, i);
            if (germPosCompare(s, h, ray.endGerm) <= 0) best = i;
        }
        if (best < 0) best = pz.size() - 1;
        Germ h = pz.germ(s, best);
        for (const auto& sc : dec.saddles)
            if (sc.gPlus.sameRay(h) || sc.gMinus.sameRay(h)) hitSaddle = sc.id;
    } else {
        throw SurfaceError("BadBudget", "locateCylinder ray exceeded budget");
    }
    if (hitSaddle < 0) throw SurfaceError("Internal", "locateCylinder found no chain");
    for (int ci = 0; ci < (int)dec.cylinders.size(); ++ci)
        for (int sid : dec.cylinders[ci].top)
            if (sid == hitSaddle) return ci;
    throw SurfaceError("Internal", "hit saddle not on any top chain");
}

Cylinder cylinderThroughPoint(const Surface& s, const Loc& pt, const Vec2& dir, long budget) {
    Tracer tr(s);
    RayStop leaf = tr.closedLeaf(pt, dir, budget);
    if (leaf.kind != RayStop::Kind::Closed)
        throw SurfaceError("BadBudget", "leaf through point does not close");
    // all saddle connections in this direction (both orientations traced)
    Direction d(dir);
    Vec2 dp = d.v;
    std::map<int, Pencil> pencils;
    std::vector<std::pair<Germ, RayStop>> traced;
    for (int cls : s.singularClasses) {
        Pencil p = buildPencil(s, cls, dp);
        for (int i = 0; i < p.size(); ++i) {
            Germ g = p.germ(s, i);
            RayStop st = tr.separatrix(g, budget);
            if (st.kind == RayStop::Kind::Singular) traced.push_back({g, st});
        }
        pencils.emplace(cls, std::move(p));
    }
    SegIndex segs(s.np());
    for (int i = 0; i < (int)traced.size(); ++i)
        for (const auto& seg : traced[i].second.path)
            segs.add(i, seg.poly, seg.a, seg.b);
    // shoot both transversal rays to find the two boundary chains
    Vec2 m = rot90ccw(dp);
    Cylinder cyl;
    cyl.dir = d;
    cyl.dplus = dp;
    cyl.holPlus = parallelSameDir(leaf.holonomy, dp) ? leaf.holonomy : -leaf.holonomy;
    cyl.circSq = leaf.holonomy.normSq();
    cyl.core = leaf.path;
    cyl.area = FE(0);
    std::vector<Germ> chainStarts;
    for (int sgn = 0; sgn < 2; ++sgn) {
        RayStop ray = tr.ray(pt, sgn ? -m : m, budget, &segs);
        Germ chainGerm;
        if (ray.kind == RayStop::Kind::SegCrossing) {
            const auto& hit = traced[ray.hit.id];
            chainGerm = parallelSameDir(hit.first.dir, dp) ? hit.first : hit.second.endGerm;
        } else if (ray.kind == RayStop::Kind::Singular) {
            const Pencil& pz = pencils.at(ray.endGerm.cls);
            int best = -1;
            for (int i = 0; i < pz.size(); ++i) {
                Germ h = pz.germ(s, i);
                if (germPosCompare(s, h, ray.endGerm) <= 0) best = i;
            }
            if (best < 0) best = pz.size() - 1;
            chainGerm = pz.germ(s, best);
        } else {
            throw SurfaceError("BadBudget", "transversal ray exceeded budget");
        }
        chainStarts.push_back(chainGerm);
        cyl.area += wedge(cyl.holPlus, ray.holonomy).abs();
    }
    cyl.heightSq = cyl.area * cyl.area / cyl.circSq;
    // boundary chains: walk pencil steps from the chain start germs
    auto traceOf = [&](const Germ& g) -> int {
        for (int i = 0; i < (int)traced.size(); ++i)
            if (traced[i].first.sameRay(g)) return i;
        throw SurfaceError("Internal", "chain germ not traced");
    };
    for (int sgn = 0; sgn < 2; ++sgn) {
        std::vector<int> chain;
        Germ cur = chainStarts[sgn];
        if (!parallelSameDir(cur.dir, dp)) {
            // use the +d orientation of that saddle
            int ti = traceOf(cur);
            cur = traced[ti].second.endGerm;
        }
        Germ start = cur;
        bool closed = false;
        for (int guard = 0; guard < 64; ++guard) {
            int ti = traceOf(cur);
            chain.push_back(ti);
            const Germ& r = traced[ti].second.endGerm;
            const Pencil& p = pencils.at(r.cls);
            int ei = pencilEntryOf(s, p, r);
            // sgn==0: ray went up, hit the top chain (cylinder below): CCW step
            int ni = sgn == 0 ? p.nextCCW(ei) : p.nextCW(ei);
            cur = p.germ(s, ni);
            if (cur.sameRay(start)) {
                closed = true;
                break;
            }
        }
        if (!closed) throw SurfaceError("Internal", "boundary chain failed to close");
        // record saddle keys by index into a local list; store ids as positions
        if (sgn == 0)
            cyl.top = chain;
        else
            cyl.bottom = chain;
    }
    cyl.simple = (cyl.top.size() == 1 && cyl.bottom.size() == 1);
    // canonical key matching decompose(): direction + sorted saddle keys
    std::vector<std::string> keys;
    for (const auto& side : {cyl.top, cyl.bottom})
        for (int idx : side)
            keys.push_back(saddleKey(s, traced[idx].first, traced[idx].second.endGerm));
    std::sort(keys.begin(), keys.end());
    std::ostringstream os;
    os << "cyl[" << cyl.dir.str() << "]";
    for (auto& k : keys) os << "{" << k << "}";
    cyl.key = os.str();
    return cyl;
}

}  // namespace g2
