#include "g2cyl/surgery.hpp"

#include <algorithm>
#include <set>

namespace g2 {

Complex Complex::fromSurface(const Surface& s) {
    Complex cx;
    cx.disc = s.disc;
    cx.nextId_ = 0;
    std::map<std::pair<int, int>, long> ids;
    for (int p = 0; p < s.np(); ++p) {
        Poly poly;
        poly.v = s.polys[p];
        poly.srcPoly = p;
        for (int e = 0; e < s.nv(p); ++e) {
            long id = cx.nextId_++;
            ids[{p, e}] = id;
            poly.eid.push_back(id);
        }
        cx.polys.push_back(std::move(poly));
    }
    for (int p = 0; p < s.np(); ++p)
        for (int e = 0; e < s.nv(p); ++e) {
            EdgeRef pr = s.partner(p, e);
            cx.mate[ids[{p, e}]] = ids[{pr.poly, pr.edge}];
        }
    for (int k = 0; k < s.nClasses; ++k)
        if (s.isSingularClass[k] && s.turns[k] == 1) {
            const Corner& c = s.fans[k][0];
            cx.marked.push_back({c.poly, c.vtx});
        }
    return cx;
}

std::pair<int, int> Complex::locate(long eid) const {
    for (int p = 0; p < (int)polys.size(); ++p)
        for (int i = 0; i < (int)polys[p].eid.size(); ++i)
            if (polys[p].eid[i] == eid) return {p, i};
    throw SurfaceError("Internal", "edge id not found");
}

Vec2 Complex::edgeVec(int p, int i) const {
    const auto& poly = polys[p];
    int n = (int)poly.v.size();
    return poly.v[(i + 1) % n] - poly.v[i];
}

std::pair<long, long> Complex::splitEdgeAt(int p, int i, const Vec2& pt) {
    long eid = polys[p].eid[i];
    auto it = mate.find(eid);
    long mateId = it == mate.end() ? -1 : it->second;

    auto splitOne = [&](int q, int j, const Vec2& at, long firstId, long secondId) {
        auto& poly = polys[q];
        int n = (int)poly.v.size();
        if (at == poly.v[j] || at == poly.v[(j + 1) % n])
            throw SurfaceError("Internal", "edge split at an endpoint");
        poly.v.insert(poly.v.begin() + j + 1, at);
        poly.eid[j] = firstId;
        poly.eid.insert(poly.eid.begin() + j + 1, secondId);
        for (auto& m : marked)
            if (m.first == q && m.second > j) ++m.second;
    };

    long a1 = freshId(), a2 = freshId();
    Vec2 startP = polys[p].v[i];
    splitOne(p, i, pt, a1, a2);
    if (mateId >= 0) {
        mate.erase(eid);
        mate.erase(mateId);
        auto [q, j] = locate(mateId);
        const Vec2& Bq = polys[q].v[(j + 1) % polys[q].v.size()];
        Vec2 shift = Bq - startP;
        long b1 = freshId(), b2 = freshId();
        splitOne(q, j, pt + shift, b1, b2);
        mate[a1] = b2;
        mate[b2] = a1;
        mate[a2] = b1;
        mate[b1] = a2;
    }
    return {a1, a2};
}

int Complex::ensureVertex(int p, const Vec2& pt) {
    auto& poly = polys[p];
    int n = (int)poly.v.size();
    for (int i = 0; i < n; ++i)
        if (poly.v[i] == pt) return i;
    for (int i = 0; i < n; ++i) {
        Vec2 A = poly.v[i];
        Vec2 E = edgeVec(p, i);
        Vec2 w = pt - A;
        if (!wedge(E, w).isZero()) continue;
        FE t = dot(w, E) / E.normSq();
        if (t.sign() <= 0 || (t - FE(1)).sign() >= 0) continue;
        splitEdgeAt(p, i, pt);
        return i + 1;
    }
    throw SurfaceError("Internal", "point not on piece boundary");
}

void Complex::splitChord(int p, int i, int j) {
    Poly poly = polys[p];
    int n = (int)poly.v.size();
    if (i == j || (i + 1) % n == j || (j + 1) % n == i)
        throw SurfaceError("Internal", "chord endpoints adjacent");
    long c1 = freshId(), c2 = freshId();
    Poly p1, p2;
    p1.srcPoly = p2.srcPoly = poly.srcPoly;
    for (int k = i; k != j; k = (k + 1) % n) {
        p1.v.push_back(poly.v[k]);
        p1.eid.push_back(poly.eid[k]);
    }
    p1.v.push_back(poly.v[j]);
    p1.eid.push_back(c1);  // chord j -> i
    for (int k = j; k != i; k = (k + 1) % n) {
        p2.v.push_back(poly.v[k]);
        p2.eid.push_back(poly.eid[k]);
    }
    p2.v.push_back(poly.v[i]);
    p2.eid.push_back(c2);  // chord i -> j
    mate[c1] = c2;
    mate[c2] = c1;
    std::vector<std::pair<int, int>> nm;
    int newIdx = (int)polys.size();
    for (auto& m : marked) {
        if (m.first != p) {
            nm.push_back(m);
            continue;
        }
        const Vec2& at = poly.v[m.second];
        bool placed = false;
        for (int k = 0; k < (int)p1.v.size() && !placed; ++k)
            if (p1.v[k] == at) {
                nm.push_back({p, k});
                placed = true;
            }
        for (int k = 0; k < (int)p2.v.size() && !placed; ++k)
            if (p2.v[k] == at) {
                nm.push_back({newIdx, k});
                placed = true;
            }
        if (!placed) throw SurfaceError("Internal", "marked corner lost in chord split");
    }
    marked = std::move(nm);
    polys[p] = std::move(p1);
    polys.push_back(std::move(p2));
}

bool Complex::pointInPiece(int p, const Vec2& pt) const {
    const auto& poly = polys[p];
    int n = (int)poly.v.size();
    for (int i = 0; i < n; ++i) {
        Vec2 E = poly.v[(i + 1) % n] - poly.v[i];
        if (wedge(E, pt - poly.v[i]).sign() < 0) return false;
    }
    return true;
}

int Complex::pieceContaining(int srcPoly, const Vec2& a, const Vec2& b) const {
    Vec2 mid = (a + b) * FE(Rat(1, 2));
    for (int p = 0; p < (int)polys.size(); ++p) {
        if (polys[p].srcPoly != srcPoly) continue;
        if (pointInPiece(p, a) && pointInPiece(p, b) && pointInPiece(p, mid)) return p;
    }
    throw SurfaceError("Internal", "no piece contains segment");
}

std::vector<std::vector<long>> Complex::sliceAlong(const std::vector<PathSeg>& segs) {
    std::vector<std::vector<long>> runs;
    for (const auto& seg : segs) {
        int p = pieceContaining(seg.poly, seg.a, seg.b);
        ensureVertex(p, seg.a);
        ensureVertex(p, seg.b);
        int ia = ensureVertex(p, seg.a);  // indices may have shifted
        int ib = ensureVertex(p, seg.b);
        int n = (int)polys[p].v.size();
        // segment already runs along the boundary?
        auto boundaryRun = [&]() -> std::vector<long> {
            std::vector<long> run;
            Vec2 dir = seg.b - seg.a;
            int k = ia;
            int guard = 0;
            while (k != ib) {
                if (++guard > n) return {};
                Vec2 E = edgeVec(p, k);
                if (!wedge(E, dir).isZero() || dot(E, dir).sign() <= 0) return {};
                run.push_back(polys[p].eid[k]);
                k = (k + 1) % n;
            }
            return run;
        };
        auto run = boundaryRun();
        if (!run.empty()) {
            runs.push_back(run);
            continue;
        }
        splitChord(p, ia, ib);  // appended piece carries the chord ia -> ib
        runs.push_back({polys.back().eid.back()});
    }
    return runs;
}

void Complex::unglue(long eid) {
    auto it = mate.find(eid);
    if (it == mate.end()) return;
    mate.erase(it->second);
    mate.erase(eid);
}

void Complex::glue(long e1, long e2) {
    auto [p1, i1] = locate(e1);
    auto [p2, i2] = locate(e2);
    if (!(edgeVec(p1, i1) + edgeVec(p2, i2)).isZero())
        throw SurfaceError("Internal", "glue: edges not opposite");
    mate[e1] = e2;
    mate[e2] = e1;
}

std::vector<long> Complex::boundaryCircle(long startEid) const {
    std::vector<long> out;
    long cur = startEid;
    for (int guard = 0; guard < 100000; ++guard) {
        out.push_back(cur);
        auto [p, i] = locate(cur);
        int q = p;
        int k = (i + 1) % polys[p].v.size();  // outgoing edge at the end vertex
        for (int g = 0; g < 100000; ++g) {
            long eid = polys[q].eid[k];
            auto it = mate.find(eid);
            if (it == mate.end()) {
                cur = eid;
                break;
            }
            auto [r, j] = locate(it->second);
            q = r;
            k = (j + 1) % polys[r].v.size();
        }
        if (cur == startEid) return out;
    }
    throw SurfaceError("Internal", "boundary walk did not close");
}

SurfacePtr Complex::compile(bool allowTorus) const {
    std::vector<std::vector<Vec2>> ps;
    std::vector<std::vector<EdgeRef>> glue;
    std::map<long, EdgeRef> where;
    for (int p = 0; p < (int)polys.size(); ++p) {
        ps.push_back(polys[p].v);
        glue.push_back(std::vector<EdgeRef>(polys[p].v.size()));
        for (int i = 0; i < (int)polys[p].eid.size(); ++i)
            where[polys[p].eid[i]] = EdgeRef{p, i};
    }
    for (int p = 0; p < (int)polys.size(); ++p)
        for (int i = 0; i < (int)polys[p].eid.size(); ++i) {
            auto it = mate.find(polys[p].eid[i]);
            if (it == mate.end()) throw SurfaceError("Internal", "compile with boundary");
            glue[p][i] = where.at(it->second);
        }
    BuildOptions opt;
    opt.allowTorus = allowTorus;
    for (auto& m : marked) opt.marked.push_back(Corner{m.first, m.second});
    return buildFromPolygons(disc, std::move(ps), std::move(glue), opt);
}

Loc SurgeryMap::map(const Loc& l) const {
    for (int p : piecesOf[l.poly]) {
        const auto& poly = after->polys[p];
        int n = (int)poly.size();
        bool inside = true;
        for (int i = 0; i < n && inside; ++i) {
            Vec2 E = poly[(i + 1) % n] - poly[i];
            if (wedge(E, l.pt - poly[i]).sign() < 0) inside = false;
        }
        if (inside) return Loc{p, l.pt};
    }
    throw SurfaceError("Internal", "point not mapped by surgery");
}

namespace {

FE runLen(const Vec2& v, const Vec2& dp) { return dot(v, dp).abs(); }

// rotate a boundary circle so it starts at the given chart point
bool rotateToAnchor(Complex& cx, std::vector<long>& circ, int srcPoly, const Vec2& at) {
    for (size_t r = 0; r < circ.size(); ++r) {
        auto [p, i] = cx.locate(circ[r]);
        if (cx.polys[p].srcPoly == srcPoly && cx.polys[p].v[i] == at) {
            std::rotate(circ.begin(), circ.begin() + r, circ.end());
            return true;
        }
    }
    return false;
}

}  // namespace

OpenedSurface openDegenerate(const Surface& s, const Cylinder& deg, const FE& t) {
    if (!deg.degenerate) throw SurfaceError("Internal", "openDegenerate needs a degenerate");
    if (t.sign() <= 0) throw SurfaceError("TooLargeT", "opening width must be positive");
    Complex cx = Complex::fromSurface(s);
    auto runs = cx.sliceAlong(deg.core);
    std::vector<long> curveEids;
    for (auto& r : runs)
        for (long e : r) curveEids.push_back(e);
    std::set<long> sides;
    for (long e : curveEids) {
        sides.insert(e);
        sides.insert(cx.mate.at(e));
    }
    for (long e : curveEids) cx.unglue(e);

    std::vector<std::vector<long>> circles;
    std::set<long> seen;
    for (long e : sides) {
        if (seen.count(e)) continue;
        auto circ = cx.boundaryCircle(e);
        for (long x : circ) {
            if (!sides.count(x))
                throw SurfaceError("Internal", "boundary circle leaves the cut curve");
            seen.insert(x);
        }
        circles.push_back(circ);
    }
    if (circles.size() != 2) throw SurfaceError("Internal", "cut curve has != 2 sides");

    Vec2 dp = deg.dplus;
    Vec2 side = rot90ccw(dp) * t;
    auto circleSign = [&](const std::vector<long>& c) {
        auto [p, i] = cx.locate(c.front());
        return dot(cx.edgeVec(p, i), dp).sign();
    };
    std::vector<long> circA = circles[0], circB = circles[1];
    if (circleSign(circA) < 0) std::swap(circA, circB);

    // anchor both circles at copies of the start zero of deg.core
    int anchorSrc = deg.core.front().poly;
    Vec2 anchorPt = deg.core.front().a;
    // after slicing, chart coordinates are preserved but the piece index moved;
    // rotateToAnchor searches all pieces of the source polygon
    auto reanchor = [&]() {
        if (!rotateToAnchor(cx, circA, anchorSrc, anchorPt))
            throw SurfaceError("Internal", "anchor not found on + circle");
        if (!rotateToAnchor(cx, circB, anchorSrc, anchorPt))
            throw SurfaceError("Internal", "anchor not found on - circle");
    };
    reanchor();

    // cumulative interior breakpoints in +dp order (circB boundary order runs
    // -dp, so its +dp order is the reverse)
    auto breakpoints = [&](const std::vector<long>& circ, bool reversed) {
        std::vector<FE> cuts;
        FE acc(0);
        std::vector<long> order = circ;
        if (reversed) std::reverse(order.begin(), order.end());
        for (size_t k = 0; k + 1 < order.size(); ++k) {
            auto [p, i] = cx.locate(order[k]);
            acc += runLen(cx.edgeVec(p, i), dp);
            cuts.push_back(acc);
        }
        return cuts;
    };
    auto refineAt = [&](std::vector<long>& circ, bool reversed, const std::vector<FE>& cuts) {
        for (const FE& c : cuts) {
            FE acc(0);
            std::vector<long> order = circ;
            if (reversed) std::reverse(order.begin(), order.end());
            for (size_t k = 0; k < order.size(); ++k) {
                auto [p, i] = cx.locate(order[k]);
                FE len = runLen(cx.edgeVec(p, i), dp);
                FE next = acc + len;
                if ((c - acc).sign() > 0 && (next - c).sign() > 0) {
                    FE lam = (c - acc) / len;
                    Vec2 A = cx.polys[p].v[i];
                    Vec2 pt = A + cx.edgeVec(p, i) * (reversed ? FE(1) - lam : lam);
                    auto halves = cx.splitEdgeAt(p, i, pt);
                    circ = cx.boundaryCircle(halves.first);
                    break;
                }
                acc = next;
            }
        }
    };
    auto cutsA = breakpoints(circA, false);
    auto cutsB = breakpoints(circB, true);
    refineAt(circA, false, cutsB);
    refineAt(circB, true, cutsA);
    reanchor();
    if (circA.size() != circB.size())
        throw SurfaceError("Internal", "circle refinements disagree");

    // build the strip: bottom follows circB in +dp order, top follows circA
    std::vector<long> orderB = circB;
    std::reverse(orderB.begin(), orderB.end());  // +dp order starting at the anchor
    Complex::Poly strip;
    strip.srcPoly = -1;
    std::vector<Vec2> bot{Vec2(FE(0), FE(0))};
    for (long e : orderB) {
        auto [p, i] = cx.locate(e);
        bot.push_back(bot.back() - cx.edgeVec(p, i));
    }
    size_t m = bot.size() - 1;
    for (size_t k = 0; k < m; ++k) strip.v.push_back(bot[k]);
    strip.v.push_back(bot[m]);  // right end
    {
        Vec2 cur = bot[m] + side;
        strip.v.push_back(cur);
        for (size_t k = circA.size(); k-- > 1;) {
            auto [p, i] = cx.locate(circA[k]);
            cur = cur - cx.edgeVec(p, i);
            strip.v.push_back(cur);
        }
        auto [p0, i0] = cx.locate(circA[0]);
        cur = cur - cx.edgeVec(p0, i0);
        strip.v.push_back(cur);
        if (!(cur == bot[0] + side))
            throw SurfaceError("Internal", "strip top does not close");
    }
    for (size_t k = 0; k < strip.v.size(); ++k) strip.eid.push_back(cx.freshId());
    int stripIdx = (int)cx.polys.size();
    cx.polys.push_back(strip);
    int nA = (int)circA.size();
    for (size_t k = 0; k < orderB.size(); ++k)
        cx.glue(cx.polys[stripIdx].eid[k], orderB[k]);
    long rightE = cx.polys[stripIdx].eid[m];
    long leftE = cx.polys[stripIdx].eid[m + 1 + nA];
    cx.glue(rightE, leftE);
    for (int k = 0; k < nA; ++k)
        cx.glue(cx.polys[stripIdx].eid[m + 1 + k], circA[nA - 1 - k]);

    auto out = cx.compile(false);
    if (out->stratum != s.stratum)
        throw SurfaceError("Internal", "opening changed the stratum");
    OpenedSurface res;
    res.surface = out;
    res.map.before = &s;
    res.map.after = out;
    res.map.piecesOf.assign(s.np(), {});
    for (int p = 0; p < (int)cx.polys.size(); ++p)
        if (cx.polys[p].srcPoly >= 0) res.map.piecesOf[cx.polys[p].srcPoly].push_back(p);
    res.stripPoly = stripIdx;
    res.sideVec = side;
    return res;
}

CutOffCylinder cutCylinder(const Surface& s, const Decomposition& dec, int cylIndex) {
    const Cylinder& cyl = dec.cylinders.at(cylIndex);
    if (cyl.degenerate || !cyl.simple)
        throw SurfaceError("Internal", "cutCylinder expects a simple cylinder");
    const SaddleConn& sB = dec.saddles[cyl.bottom[0]];
    const SaddleConn& sT = dec.saddles[cyl.top[0]];
    if (sB.key == sT.key)
        throw SurfaceError("Internal", "cylinder closure is the whole surface");
    Vec2 dp = dec.dplus;
    Complex cx = Complex::fromSurface(s);
    auto runsB = cx.sliceAlong(sB.path);
    auto runsT = cx.sliceAlong(sT.path);
    std::vector<long> botIds, topIds;
    for (auto& r : runsB)
        for (long e : r) botIds.push_back(e);
    for (auto& r : runsT)
        for (long e : r) topIds.push_back(e);

    // the cylinder-side copies: for the bottom chain the cylinder lies above
    // (left of +dp): that's the polygon owning the +dp-directed copy; for the
    // top chain the cylinder lies below: the -dp-directed copy.
    auto sideCopy = [&](long e, int wantSign) {
        auto [p, i] = cx.locate(e);
        int sg = dot(cx.edgeVec(p, i), dp).sign();
        if (sg == wantSign) return e;
        return cx.mate.at(e);
    };
    std::set<long> cylEdgeSides;
    for (long e : botIds) cylEdgeSides.insert(sideCopy(e, 1));
    for (long e : topIds) cylEdgeSides.insert(sideCopy(e, -1));
    // complement-side copies
    std::vector<long> topOut, botOut;
    for (long e : topIds) topOut.push_back(sideCopy(e, 1));
    for (long e : botIds) botOut.push_back(sideCopy(e, -1));

    // flood the cylinder interior pieces starting from owners of cylinder-side
    // copies, never crossing the cut edges
    std::set<long> cutAll;
    for (long e : botIds) {
        cutAll.insert(e);
        cutAll.insert(cx.mate.at(e));
    }
    for (long e : topIds) {
        cutAll.insert(e);
        cutAll.insert(cx.mate.at(e));
    }
    std::set<int> cylPieces;
    std::vector<int> stack;
    for (long e : cylEdgeSides) cylPieces.insert(cx.locate(e).first);
    for (int p : cylPieces) stack.push_back(p);
    while (!stack.empty()) {
        int p = stack.back();
        stack.pop_back();
        for (long e : cx.polys[p].eid) {
            if (cutAll.count(e)) continue;
            auto it = cx.mate.find(e);
            if (it == cx.mate.end()) continue;
            int q = cx.locate(it->second).first;
            if (cylPieces.insert(q).second) stack.push_back(q);
        }
    }
    // sanity: complement copies must not be inside the flooded region
    for (long e : topOut)
        if (cylPieces.count(cx.locate(e).first))
            throw SurfaceError("Internal", "cylinder flood reached its far side");

    // unglue boundary and drop the cylinder pieces
    for (long e : botIds) cx.unglue(e);
    for (long e : topIds) cx.unglue(e);
    Complex nc;
    nc.disc = cx.disc;
    std::map<int, int> reindex;
    for (int p = 0; p < (int)cx.polys.size(); ++p) {
        if (cylPieces.count(p)) continue;
        reindex[p] = (int)nc.polys.size();
        nc.polys.push_back(cx.polys[p]);
    }
    nc.mate = cx.mate;
    for (auto& m : cx.marked)
        if (reindex.count(m.first)) nc.marked.push_back({reindex.at(m.first), m.second});
    // drop mates pointing into removed pieces (those were all cut edges)
    for (long e : cylEdgeSides) {
        auto it = nc.mate.find(e);
        if (it != nc.mate.end()) {
            nc.mate.erase(it->second);
            nc.mate.erase(e);
        }
    }

    // re-glue: topOut runs +dp, botOut runs -dp. Refine to the common
    // subdivision measured from the saddles' start zeros, then pair.
    auto locateIn = [&](long e) { return nc.locate(e); };
    auto edgeVecIn = [&](long e) {
        auto [p, i] = locateIn(e);
        return nc.edgeVec(p, i);
    };
    // both complement runs are in +dp order (saddle path order); the seam
    // pairing below aligns the two saddles' start zeros
    std::vector<long> topRun = topOut;
    std::vector<long> botRun = botOut;
    // refine to common subdivision by cumulative length
    auto cutsOf = [&](const std::vector<long>& run) {
        std::vector<FE> cuts;
        FE acc(0);
        for (size_t k = 0; k + 1 < run.size(); ++k) {
            acc += runLen(edgeVecIn(run[k]), dp);
            cuts.push_back(acc);
        }
        return cuts;
    };
    auto refineRun = [&](std::vector<long>& run, bool plusDir, const std::vector<FE>& cuts) {
        for (const FE& c : cuts) {
            FE acc(0);
            for (size_t k = 0; k < run.size(); ++k) {
                auto [p, i] = locateIn(run[k]);
                FE len = runLen(nc.edgeVec(p, i), dp);
                FE next = acc + len;
                if ((c - acc).sign() > 0 && (next - c).sign() > 0) {
                    FE lam = (c - acc) / len;
                    Vec2 A = nc.polys[p].v[i];
                    Vec2 pt = A + nc.edgeVec(p, i) * (plusDir ? lam : FE(1) - lam);
                    long oldFirst = nc.polys[p].eid[i];
                    nc.splitEdgeAt(p, i, pt);
                    // replace run[k] by the two halves in +dp order
                    long firstId = nc.polys[p].eid[i];
                    long secondId = nc.polys[p].eid[i + 1];
                    (void)oldFirst;
                    run.erase(run.begin() + k);
                    if (plusDir) {
                        run.insert(run.begin() + k, secondId);
                        run.insert(run.begin() + k, firstId);
                    } else {
                        run.insert(run.begin() + k, firstId);
                        run.insert(run.begin() + k, secondId);
                    }
                    break;
                }
                acc = next;
            }
        }
    };
    auto cutsT = cutsOf(topRun);
    auto cutsB = cutsOf(botRun);
    refineRun(topRun, true, cutsB);
    refineRun(botRun, false, cutsT);
    if (topRun.size() != botRun.size())
        throw SurfaceError("Internal", "seam refinements disagree");
    for (size_t k = 0; k < topRun.size(); ++k) nc.glue(topRun[k], botRun[k]);

    auto rest = nc.compile(true);
    CutOffCylinder out;
    out.rest = rest;
    out.map.before = &s;
    out.map.after = rest;
    out.map.piecesOf.assign(s.np(), {});
    {
        std::map<int, int> backIndex;
        int idx = 0;
        for (int p = 0; p < (int)cx.polys.size(); ++p)
            if (!cylPieces.count(p)) backIndex[p] = idx++;
        // nc pieces may have grown via refinement splits; piecesOf by srcPoly
        for (int p = 0; p < (int)nc.polys.size(); ++p)
            if (nc.polys[p].srcPoly >= 0) out.map.piecesOf[nc.polys[p].srcPoly].push_back(p);
    }
    // slit germ: start of the seam, +dp side. The seam starts at the image of
    // sT's start zero; find it on the compiled surface via the first topRun
    // edge's start vertex.
    {
        auto [p, i] = nc.locate(topRun.front());
        Tracer tr(*rest);
        out.slitGermPlus = tr.reversedGermAt(p, i, -dp);
        out.slitHolonomy = sT.holPlus;
    }
    return out;
}

}  // namespace g2
