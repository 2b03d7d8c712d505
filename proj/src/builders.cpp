#include "g2cyl/builders.hpp"

#include <numeric>
#include <sstream>

namespace g2 {

std::string Prototype::str() const {
    std::ostringstream os;
    os << "(" << a << "," << b << "," << c << "," << e << ")";
    return os.str();
}

bool prototypeValid(const Prototype& p, long D) {
    if (p.b <= 0 || p.c <= 0) return false;
    if (D != p.e * p.e + 4 * p.b * p.c) return false;
    long g = std::gcd(p.b, p.c);
    if (!(g > p.a && p.a >= 0)) return false;
    if (!(p.b > p.c + p.e)) return false;
    long g4 = std::gcd(std::gcd(std::labs(p.a), std::labs(p.b)),
                       std::gcd(std::labs(p.c), std::labs(p.e)));
    if (g4 != 1) return false;
    return true;
}

FE prototypeLambda(const Prototype& p) { return FE::make(p.e, 1, 2, p.D()); }

Int feFloor(const FE& x) {
    if (x.isRational()) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), x.a().get_mpz_t(), x.den().get_mpz_t());
        return q;
    }
    Rat lo, hi;
    x.bounds(16, lo, hi);
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
    // fl or fl+1; settle exactly
    while ((x - FE(Int(fl + 1))).sign() >= 0) fl += 1;
    if ((x - FE(fl)).sign() < 0) fl -= 1;
    return fl;
}

SurfacePtr buildSquareTiled(const std::vector<int>& hPerm, const std::vector<int>& vPerm) {
    int n = (int)hPerm.size();
    if (n <= 0 || (int)vPerm.size() != n)
        throw SurfaceError("NotConnected", "permutation sizes disagree");
    auto checkPerm = [n](const std::vector<int>& p) {
        std::vector<char> seen(n, 0);
        for (int x : p) {
            if (x < 0 || x >= n || seen[x]) throw SurfaceError("NotConnected", "not a permutation");
            seen[x] = 1;
        }
    };
    checkPerm(hPerm);
    checkPerm(vPerm);
    // transitivity of <h, v>
    std::vector<char> vis(n, 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    int cnt = 1;
    std::vector<int> hInv(n), vInv(n);
    for (int i = 0; i < n; ++i) hInv[hPerm[i]] = i, vInv[vPerm[i]] = i;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j : {hPerm[i], vPerm[i], hInv[i], vInv[i]})
            if (!vis[j]) {
                vis[j] = 1;
                ++cnt;
                stack.push_back(j);
            }
    }
    if (cnt != n) throw SurfaceError("NotConnected", "joint action not transitive");

    std::vector<std::vector<Vec2>> polys;
    std::vector<std::vector<EdgeRef>> glue(n, std::vector<EdgeRef>(4));
    for (int i = 0; i < n; ++i)
        polys.push_back({Vec2(FE(0), FE(0)), Vec2(FE(1), FE(0)), Vec2(FE(1), FE(1)),
                         Vec2(FE(0), FE(1))});
    // edges: 0 bottom, 1 right, 2 top, 3 left
    for (int i = 0; i < n; ++i) {
        glue[i][1] = EdgeRef{hPerm[i], 3};
        glue[hPerm[i]][3] = EdgeRef{i, 1};
        glue[i][2] = EdgeRef{vPerm[i], 0};
        glue[vPerm[i]][0] = EdgeRef{i, 2};
    }
    try {
        return buildFromPolygons(0, polys, glue, {});
    } catch (const SurfaceError& e) {
        BuildOptions opt;
        opt.allowTorus = true;
        opt.marked = {Corner{0, 0}};
        return buildFromPolygons(0, std::move(polys), std::move(glue), opt);
    }
}

SurfacePtr buildPrototypeSurface(const Prototype& p) {
    long D = p.D();
    if (!prototypeValid(p, D)) throw SurfaceError("InvalidPrototype", p.str());
    FE lam = prototypeLambda(p);
    FE a(p.a), b(p.b), c(p.c);
    if (!(lam > FE(0) && lam < b)) throw SurfaceError("InvalidPrototype", "lambda out of range");
    // long cylinder: hexagon with straight corners at the bottom/top splits
    std::vector<Vec2> P0 = {Vec2(FE(0), FE(0)), Vec2(lam, FE(0)),     Vec2(b, FE(0)),
                            Vec2(b + a, c),     Vec2(a + lam, c),     Vec2(a, c)};
    // square of size lambda on top of [a, a+lam] x {c}
    std::vector<Vec2> P1 = {Vec2(a, c), Vec2(a + lam, c), Vec2(a + lam, c + lam),
                            Vec2(a, c + lam)};
    std::vector<std::vector<EdgeRef>> glue(2);
    glue[0].assign(6, {});
    glue[1].assign(4, {});
    auto pair = [&](int p1, int e1, int p2, int e2) {
        glue[p1][e1] = EdgeRef{p2, e2};
        glue[p2][e2] = EdgeRef{p1, e1};
    };
    pair(0, 5, 0, 2);  // left side <-> right side
    pair(0, 0, 1, 2);  // bottom [0,lam] <-> square top
    pair(0, 1, 0, 3);  // bottom [lam,b] <-> top piece [a+lam, a+b]
    pair(0, 4, 1, 0);  // top piece [a, a+lam] <-> square bottom
    pair(1, 1, 1, 3);  // square right <-> square left
    long discS = isPerfectSquare(Int(D)) ? 0 : D;
    auto s = buildFromPolygons(discS, {P0, P1}, glue, {});
    if (s->stratum != Surface::Stratum::H2)
        throw SurfaceError("InvalidPrototype", "prototype surface not in H(2)");
    return s;
}

SurfacePtr buildSlitTorus(const Vec2& v1, const Vec2& v2, const Vec2& slitDir, const FE& t,
                          long disc) {
    FE covol = wedge(v1, v2);
    if (covol.isZero()) throw SurfaceError("DegenerateLattice", "dependent lattice vectors");
    Vec2 b1 = v1, b2 = v2;
    if (covol.sign() < 0) {
        std::swap(b1, b2);
        covol = -covol;
    }
    Vec2 w = slitDir * t;
    if (w.isZero()) throw SurfaceError("SlitThroughLatticePoint", "zero-length slit");
    // lattice coordinates of the slit vector
    FE al = wedge(w, b2) / covol;
    FE be = wedge(b1, w) / covol;
    // interior lattice point on the open segment (0, w)?
    auto rationalPair = al.isRational() && be.isRational();
    if (rationalPair) {
        Rat ra = al.rational(), rb = be.rational();
        Int q = lcm(ra.get_den(), rb.get_den());
        Int pa = ra.get_num() * (q / ra.get_den());
        Int pb = rb.get_num() * (q / rb.get_den());
        Int g = gcd(pa, pb);
        if (g != 0 && g > q)
            throw SurfaceError("SlitThroughLatticePoint", "lattice point inside slit");
        if (pa % q == 0 && pb % q == 0)
            throw SurfaceError("SlitThroughLatticePoint", "slit endpoints coincide mod lattice");
    } else if (!al.isRational() && !be.isRational()) {
        FE ratio = be / al;
        if (ratio.isRational()) {
            Rat r = ratio.rational();
            // integer points m*(1, r): m multiple of den(r); smallest positive
            // tau = r2/al must be >= 1 to exclude interior points
            FE tau = FE(Rat(r.get_den())) / al;
            if (tau.abs() < FE(1))
                throw SurfaceError("SlitThroughLatticePoint", "lattice point inside slit");
        }
    }
    // one of al, be irrational & the other rational: no lattice point on the ray

    // reduce the far endpoint into the fundamental parallelogram
    Int m = feFloor(al), n = feFloor(be);
    FE alr = al - FE(m), ber = be - FE(n);
    Vec2 wr = b1 * alr + b2 * ber;
    Vec2 zero(FE(0), FE(0));
    std::vector<std::vector<Vec2>> polys;
    std::vector<std::vector<EdgeRef>> glue;
    BuildOptions opt;
    opt.allowTorus = true;
    auto pairG = [&](int p1, int e1, int p2, int e2) {
        glue[p1][e1] = EdgeRef{p2, e2};
        glue[p2][e2] = EdgeRef{p1, e1};
    };
    if (ber.isZero()) {
        // wr on the b1 side (alr in (0,1))
        polys = {{zero, wr, b1, b1 + b2, wr + b2, b2}};
        glue.assign(1, std::vector<EdgeRef>(6));
        pairG(0, 0, 0, 4);  // 0->wr  <->  (wr+b2)->b2
        pairG(0, 1, 0, 3);  // wr->b1 <->  (b1+b2)->(wr+b2)
        pairG(0, 2, 0, 5);  // b1->(b1+b2) <-> b2->0
        opt.marked = {Corner{0, 0}, Corner{0, 1}};
    } else if (alr.isZero()) {
        // wr on the b2 side (ber in (0,1))
        polys = {{zero, b1, b1 + wr, b1 + b2, b2, wr}};
        glue.assign(1, std::vector<EdgeRef>(6));
        pairG(0, 0, 0, 3);  // 0->b1 <-> (b1+b2)->b2
        pairG(0, 1, 0, 5);  // b1->(b1+wr) <-> wr->0
        pairG(0, 2, 0, 4);  // (b1+wr)->(b1+b2) <-> b2->wr
        opt.marked = {Corner{0, 0}, Corner{0, 5}};
    } else {
        // wr interior: 4 triangles around it
        polys = {{zero, b1, wr}, {b1, b1 + b2, wr}, {b1 + b2, b2, wr}, {b2, zero, wr}};
        glue.assign(4, std::vector<EdgeRef>(3));
        pairG(0, 1, 1, 2);
        pairG(1, 1, 2, 2);
        pairG(2, 1, 3, 2);
        pairG(3, 1, 0, 2);
        pairG(0, 0, 2, 0);  // bottom <-> top
        pairG(1, 0, 3, 0);  // right <-> left
        opt.marked = {Corner{0, 0}, Corner{0, 2}};
    }
    return buildFromPolygons(disc, std::move(polys), std::move(glue), opt);
}

SurfacePtr sixSquareSurface() {
    // Squares: A=[0,1]x[2,3], B=[0,1]x[1,2], C=[1,2]x[1,2], D=[2,3]x[1,2],
    //          E=[1,2]x[0,1], F=[2,3]x[0,1]. Horizontal cylinders: {A} (circ 1),
    // {B,C,D} (circ 3), {E,F} (circ 2). Boundary identifications: the column
    // left side glues to the long right side with a unit vertical shift, the
    // remaining outline sides glue straight across.
    auto sq = [](long x0, long y0) {
        return std::vector<Vec2>{Vec2(FE(x0), FE(y0)), Vec2(FE(x0 + 1), FE(y0)),
                                 Vec2(FE(x0 + 1), FE(y0 + 1)), Vec2(FE(x0), FE(y0 + 1))};
    };
    enum { A, B, C, D, E, F };
    std::vector<std::vector<Vec2>> polys = {sq(0, 2), sq(0, 1), sq(1, 1),
                                            sq(2, 1), sq(1, 0), sq(2, 0)};
    std::vector<std::vector<EdgeRef>> glue(6, std::vector<EdgeRef>(4));
    auto pair = [&](int p1, int e1, int p2, int e2) {
        glue[p1][e1] = EdgeRef{p2, e2};
        glue[p2][e2] = EdgeRef{p1, e1};
    };
    // edges: 0 bottom, 1 right, 2 top, 3 left. Reference gluing table:
    //   rows close as A | BCD | EF (circumferences 1, 3, 2),
    //   columns close as AB | CEDF (circumferences 2, widths 1 and 2).
    pair(B, 1, C, 3);
    pair(C, 1, D, 3);
    pair(E, 1, F, 3);
    pair(A, 1, A, 3);  // row A wraps onto itself
    pair(B, 3, D, 1);  // row BCD wraps
    pair(E, 3, F, 1);  // row EF wraps
    pair(A, 0, B, 2);
    pair(C, 0, E, 2);
    pair(D, 0, F, 2);
    pair(B, 0, A, 2);  // column AB wraps
    pair(E, 0, C, 2);  // wide column wraps straight
    pair(F, 0, D, 2);
    auto s = buildFromPolygons(0, std::move(polys), std::move(glue), {});
    if (s->stratum != Surface::Stratum::H11)
        throw SurfaceError("WrongGenus", "six-square surface must lie in H(1,1)");
    return s;
}

SurfacePtr regularOctagonSurface() {
    FE s2 = FE::make(0, 1, 2, 2);  // sqrt(2)/2
    FE one(1), zero(0);
    std::vector<Vec2> oct = {Vec2(zero, zero),
                             Vec2(one, zero),
                             Vec2(one + s2, s2),
                             Vec2(one + s2, one + s2),
                             Vec2(one, one + s2 + s2),
                             Vec2(zero, one + s2 + s2),
                             Vec2(-s2, one + s2),
                             Vec2(-s2, s2)};
    std::vector<std::vector<EdgeRef>> glue(1, std::vector<EdgeRef>(8));
    for (int e = 0; e < 4; ++e) {
        glue[0][e] = EdgeRef{0, e + 4};
        glue[0][e + 4] = EdgeRef{0, e};
    }
    return buildFromPolygons(2, {oct}, glue, {});
}

}  // namespace g2
