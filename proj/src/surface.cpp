#include "g2cyl/surface.hpp"

#include <algorithm>
#include <sstream>

namespace g2 {

bool parallelSameDir(const Vec2& a, const Vec2& b) {
    return wedge(a, b).isZero() && dot(a, b).sign() > 0;
}

bool sectorContainsHalfOpen(const Vec2& u1, const Vec2& u2, const Vec2& d) {
    if (parallelSameDir(d, u1)) return true;
    if (parallelSameDir(d, u2)) return false;
    FE w12 = wedge(u1, u2);
    int s12 = w12.sign();
    if (s12 > 0) return wedge(u1, d).sign() > 0 && wedge(d, u2).sign() > 0;
    if (s12 == 0) {
        if (dot(u1, u2).sign() >= 0) throw SurfaceError("BadCorner", "zero-angle corner");
        return wedge(u1, d).sign() > 0;  // straight corner (angle pi)
    }
    throw SurfaceError("NonConvexPolygon", "reflex corner encountered");
}

Vec2 orientedCanon(const Vec2& v) {
    if (v.isZero()) throw FieldError("zero vector");
    int sy = v.y.sign();
    if (sy == 0) return Vec2(FE(v.x.sign()), FE(0));
    if (sy > 0) return Vec2(v.x / v.y, FE(1));
    return Vec2(v.x / (-v.y), FE(-1));
}

int Surface::fanIndexOf(const Corner& c) const {
    const auto& fan = fans[cls(c)];
    for (int i = 0; i < (int)fan.size(); ++i)
        if (fan[i] == c) return i;
    throw SurfaceError("Internal", "corner not in fan");
}

Corner Surface::nextCornerCCW(const Corner& c) const {
    int n = nv(c.poly);
    int prevEdge = (c.vtx + n - 1) % n;
    EdgeRef pr = glue[c.poly][prevEdge];
    return Corner{pr.poly, pr.edge};
}

Corner Surface::cornerAtClassContaining(int klass, const Vec2& d, const Corner& near) const {
    const auto& fan = fans[klass];
    int start = 0;
    if (near.poly >= 0) start = fanIndexOf(near);
    for (int i = 0; i < (int)fan.size(); ++i) {
        const Corner& c = fan[(start + i) % fan.size()];
        if (cornerContains(c, d)) return c;
    }
    throw SurfaceError("Internal", "no corner contains direction");
}

namespace {

FE polygonTwiceArea(const std::vector<Vec2>& p) {
    FE s(0);
    for (size_t i = 0; i < p.size(); ++i) {
        const Vec2& a = p[i];
        const Vec2& b = p[(i + 1) % p.size()];
        s += wedge(a, b);
    }
    return s;
}

}  // namespace

SurfacePtr buildFromPolygons(long disc, std::vector<std::vector<Vec2>> polys,
                             std::vector<std::vector<EdgeRef>> glue, const BuildOptions& opt) {
    auto s = std::make_shared<Surface>();
    s->disc = disc;
    s->polys = std::move(polys);
    s->glue = std::move(glue);

    if (s->polys.empty()) throw SurfaceError("Empty", "no polygons");
    if (s->glue.size() != s->polys.size()) throw SurfaceError("MismatchedEdge", "glue size");

    FE twiceArea(0);
    for (int p = 0; p < s->np(); ++p) {
        const auto& poly = s->polys[p];
        if (poly.size() < 3) throw SurfaceError("NonConvexPolygon", "fewer than 3 vertices");
        if (s->glue[p].size() != poly.size()) throw SurfaceError("MismatchedEdge", "glue row");
        FE a2 = polygonTwiceArea(poly);
        if (a2.sign() <= 0) throw SurfaceError("NonConvexPolygon", "polygon not CCW");
        twiceArea += a2;
        int n = (int)poly.size();
        for (int v = 0; v < n; ++v) {
            Vec2 ePrev = poly[v] - poly[(v + n - 1) % n];
            Vec2 eNext = poly[(v + 1) % n] - poly[v];
            if (eNext.isZero()) throw SurfaceError("NonConvexPolygon", "zero-length edge");
            int w = wedge(ePrev, eNext).sign();
            if (w < 0) throw SurfaceError("NonConvexPolygon", "reflex corner");
            if (w == 0 && dot(ePrev, eNext).sign() <= 0)
                throw SurfaceError("NonConvexPolygon", "degenerate corner");
        }
        for (const Vec2& v : poly) {
            for (const FE* c : {&v.x, &v.y})
                if (c->disc() != 0 && c->disc() != disc)
                    throw SurfaceError("BadDisc", "coordinate outside Q(sqrt(disc))");
        }
    }
    s->area = twiceArea / FE(2);

    // gluing must be an involutive perfect matching by opposite edge vectors
    for (int p = 0; p < s->np(); ++p) {
        for (int e = 0; e < s->nv(p); ++e) {
            EdgeRef pr = s->glue[p][e];
            if (pr.poly < 0 || pr.poly >= s->np() || pr.edge < 0 || pr.edge >= s->nv(pr.poly))
                throw SurfaceError("MismatchedEdge", "partner out of range");
            if (pr.poly == p && pr.edge == e)
                throw SurfaceError("MismatchedEdge", "edge glued to itself");
            EdgeRef back = s->glue[pr.poly][pr.edge];
            if (!(back == EdgeRef{p, e}))
                throw SurfaceError("MismatchedEdge", "gluing not involutive");
            if (!(s->edgeVec(p, e) + s->edgeVec(pr.poly, pr.edge)).isZero())
                throw SurfaceError("MismatchedEdge", "glued edges not opposite translates");
        }
    }

    // vertex classes via CCW corner fans
    int np = s->np();
    s->classOf.assign(np, {});
    for (int p = 0; p < np; ++p) s->classOf[p].assign(s->nv(p), -1);
    for (int p = 0; p < np; ++p) {
        for (int v = 0; v < s->nv(p); ++v) {
            if (s->classOf[p][v] >= 0) continue;
            int id = s->nClasses++;
            std::vector<Corner> fan;
            Corner c{p, v};
            while (true) {
                if (s->classOf[c.poly][c.vtx] >= 0) break;
                s->classOf[c.poly][c.vtx] = id;
                fan.push_back(c);
                c = s->nextCornerCCW(c);
            }
            if (!(c == Corner{p, v}))
                throw SurfaceError("MismatchedEdge", "corner fan does not close");
            s->fans.push_back(std::move(fan));
        }
    }

    // cone angles: count crossings of the reference direction (1,0)
    Vec2 ref(FE(1), FE(0));
    s->turns.assign(s->nClasses, 0);
    for (int k = 0; k < s->nClasses; ++k) {
        int t = 0;
        for (const Corner& c : s->fans[k])
            if (s->cornerContains(c, ref)) ++t;
        if (t < 1) throw SurfaceError("BadConeAngle", "cone angle below 2*pi");
        s->turns[k] = t;
    }

    int E = 0;
    for (int p = 0; p < np; ++p) E += s->nv(p);
    E /= 2;
    int chi = s->nClasses - E + np;
    s->genus = (2 - chi) / 2;
    long gaussBonnet = 0;
    for (int t : s->turns) gaussBonnet += t - 1;
    if (gaussBonnet != 2 * s->genus - 2)
        throw SurfaceError("BadConeAngle", "Gauss-Bonnet mismatch");

    std::vector<int> zeros;
    for (int k = 0; k < s->nClasses; ++k)
        if (s->turns[k] > 1) zeros.push_back(k);

    if (s->genus == 2) {
        if (zeros.size() == 1 && s->turns[zeros[0]] == 3)
            s->stratum = Surface::Stratum::H2;
        else if (zeros.size() == 2 && s->turns[zeros[0]] == 2 && s->turns[zeros[1]] == 2)
            s->stratum = Surface::Stratum::H11;
        else
            throw SurfaceError("WrongGenus", "genus-2 zero pattern invalid");
    } else if (s->genus == 1 && opt.allowTorus) {
        s->stratum = Surface::Stratum::Torus;
    } else {
        throw SurfaceError("WrongGenus", "genus " + std::to_string(s->genus));
    }

    s->isSingularClass.assign(s->nClasses, 0);
    for (int z : zeros) s->isSingularClass[z] = 1;
    for (const Corner& c : opt.marked) {
        if (c.poly < 0 || c.poly >= np || c.vtx < 0 || c.vtx >= s->nv(c.poly))
            throw SurfaceError("MismatchedEdge", "marked corner out of range");
        s->isSingularClass[s->classOf[c.poly][c.vtx]] = 1;
    }
    for (int k = 0; k < s->nClasses; ++k)
        if (s->isSingularClass[k]) s->singularClasses.push_back(k);
    if (s->singularClasses.empty())
        throw SurfaceError("WrongGenus", "torus needs at least one marked point");
    return s;
}

SurfacePtr transform(const Surface& s, const Mat2& m) {
    if (m.det().sign() <= 0) throw SurfaceError("BadTransform", "determinant must be positive");
    std::vector<std::vector<Vec2>> polys = s.polys;
    for (auto& poly : polys)
        for (auto& v : poly) v = m.apply(v);
    BuildOptions opt;
    opt.allowTorus = (s.genus == 1);
    for (int k = 0; k < s.nClasses; ++k)
        if (s.isSingularClass[k] && s.turns[k] == 1) opt.marked.push_back(s.fans[k][0]);
    long disc = s.disc;
    for (auto& poly : polys)
        for (auto& v : poly)
            for (FE* c : {&v.x, &v.y})
                if (c->disc() != 0) disc = c->disc();
    return buildFromPolygons(disc, std::move(polys), s.glue, opt);
}

std::string Germ::key(const Surface& s) const {
    Vec2 d = orientedCanon(dir);
    std::ostringstream os;
    os << cls << ":" << fanIdx << ":" << d.x.str() << "," << d.y.str();
    (void)s;
    return os.str();
}

int Pencil::indexOfFan(int fanIdx) const {
    for (int i = 0; i < size(); ++i)
        if (entries[i].fanIdx == fanIdx) return i;
    return -1;
}

Germ Pencil::germ(const Surface& s, int i) const {
    (void)s;
    const Entry& e = entries[i];
    Germ g;
    g.cls = cls;
    g.fanIdx = e.fanIdx;
    g.dir = e.positive ? dplus : -dplus;
    return g;
}

Pencil buildPencil(const Surface& s, int cls, const Vec2& d) {
    Pencil p;
    p.cls = cls;
    p.dplus = d;
    const auto& fan = s.fans[cls];
    for (int i = 0; i < (int)fan.size(); ++i) {
        bool pos = s.cornerContains(fan[i], d);
        bool neg = s.cornerContains(fan[i], -d);
        if (pos && neg) throw SurfaceError("Internal", "corner contains both directions");
        if (pos) p.entries.push_back({i, true});
        if (neg) p.entries.push_back({i, false});
    }
    if ((int)p.entries.size() != 2 * s.turns[cls])
        throw SurfaceError("Internal", "pencil size mismatch");
    for (int i = 0; i < p.size(); ++i)
        if (p.entries[i].positive == p.entries[p.nextCCW(i)].positive)
            throw SurfaceError("Internal", "pencil directions do not alternate");
    return p;
}

}  // namespace g2
