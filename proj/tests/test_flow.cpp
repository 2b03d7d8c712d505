#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "g2cyl/builders.hpp"
#include "g2cyl/decompose.hpp"
#include "g2cyl/saddles.hpp"

using namespace g2;

namespace {
Vec2 H() { return Vec2(FE(1), FE(0)); }
Vec2 V() { return Vec2(FE(0), FE(1)); }
}  // namespace

TEST_CASE("square torus horizontal trace closes after one crossing") {
    auto t = buildSquareTiled({0}, {0});
    Tracer tr(*t);
    Pencil p = buildPencil(*t, t->singularClasses[0], H());
    Germ g;
    for (int i = 0; i < p.size(); ++i)
        if (p.entries[i].positive) g = p.germ(*t, i);
    RayStop st = tr.separatrix(g, 100);
    REQUIRE(st.kind == RayStop::Kind::Singular);
    CHECK(st.holonomy == Vec2(FE(1), FE(0)));
    CHECK(st.crossings <= 1);
}

TEST_CASE("golden L horizontal separatrices") {
    auto L = buildPrototypeSurface({0, 1, 1, -1});
    FE lam = prototypeLambda({0, 1, 1, -1});
    Tracer tr(*L);
    Pencil p = buildPencil(*L, L->singularClasses[0], H());
    std::vector<FE> lens;
    for (int i = 0; i < p.size(); ++i) {
        RayStop st = tr.separatrix(p.germ(*L, i), 1000);
        REQUIRE(st.kind == RayStop::Kind::Singular);
        lens.push_back(st.holonomy.x.abs());
    }
    // horizontal saddle lengths: two of length lambda, one of length 1-lambda,
    // each seen from both ends
    int nl = 0, ns = 0;
    for (auto& x : lens) {
        if (x == lam) ++nl;
        if (x == FE(1) - lam) ++ns;
    }
    CHECK(nl == 4);
    CHECK(ns == 2);
}

TEST_CASE("irrational slope exceeds budget on a rational surface") {
    auto t = buildSquareTiled({0}, {0});
    Tracer tr(*t);
    Pencil p = buildPencil(*t, 0, Vec2(FE(1), FE::make(0, 1, 1, 2)));
    RayStop st = tr.separatrix(p.germ(*t, 0), 1000);
    CHECK(st.kind == RayStop::Kind::Budget);
}

TEST_CASE("one-cylinder H(2) origami: 1 cylinder + 3 degenerates") {
    auto s = buildSquareTiled({1, 2, 0}, {2, 1, 0});
    auto inv = computeInvolution(*s);
    auto dec = decompose(*s, H(), 10000, &inv);
    REQUIRE(dec.status == Decomposition::Status::Periodic);
    CHECK(dec.cylinders.size() == 1);
    CHECK(dec.cylinders[0].circSq == FE(9));
    CHECK(dec.cylinders[0].area == FE(3));
    CHECK(dec.saddles.size() == 3);
    for (auto& sc : dec.saddles) CHECK(sc.invariant);
    CHECK(dec.degenerates.size() == 3);
    for (auto& dg : dec.degenerates) CHECK(dg.circSq == FE(4));  // (1+1)^2
}

TEST_CASE("one-cylinder H(1,1) origami: 1 cylinder + 4 degenerates") {
    auto s = buildSquareTiled({1, 2, 3, 0}, {3, 2, 1, 0});
    auto inv = computeInvolution(*s);
    auto dec = decompose(*s, H(), 10000, &inv);
    REQUIRE(dec.status == Decomposition::Status::Periodic);
    CHECK(dec.cylinders.size() == 1);
    CHECK(dec.saddles.size() == 4);
    CHECK(dec.degenerates.size() == 4);  // s_i u s_{i+1} cyclically, not all 6 pairs
}

TEST_CASE("golden L decompositions") {
    auto L = buildPrototypeSurface({0, 1, 1, -1});
    FE lam = prototypeLambda({0, 1, 1, -1});
    auto inv = computeInvolution(*L);
    auto hd = decompose(*L, H(), 10000, &inv);
    REQUIRE(hd.status == Decomposition::Status::Periodic);
    REQUIRE(hd.cylinders.size() == 2);
    CHECK(hd.degenerates.empty());
    int si = hd.cylinders[0].simple ? 0 : 1;
    CHECK(hd.cylinders[si].simple);
    CHECK(!hd.cylinders[1 - si].simple);
    CHECK(hd.cylinders[si].circSq == lam * lam);
    CHECK(hd.cylinders[1 - si].circSq == FE(1));
    // involution fixes each cylinder: image of a boundary saddle stays on it
    Tracer tr(*L);
    for (const auto& c : hd.cylinders) {
        for (int sid : c.bottom) {
            Germ img = inv.germImage(*L, hd.saddles[sid].gPlus);
            bool onCyl = false;
            for (int tid : c.bottom)
                if (hd.saddles[tid].gPlus.sameRay(img) || hd.saddles[tid].gMinus.sameRay(img))
                    onCyl = true;
            for (int tid : c.top)
                if (hd.saddles[tid].gPlus.sameRay(img) || hd.saddles[tid].gMinus.sameRay(img))
                    onCyl = true;
            CHECK(onCyl);
        }
    }
    auto vd = decompose(*L, V(), 10000, &inv);
    REQUIRE(vd.status == Decomposition::Status::Periodic);
    REQUIRE(vd.cylinders.size() == 2);
    FE onePlusLam = FE(1) + lam;
    bool seen1 = false, seenLong = false;
    for (auto& c : vd.cylinders) {
        if (c.circSq == FE(1)) seen1 = true;
        if (c.circSq == onePlusLam * onePlusLam) seenLong = true;
    }
    CHECK(seen1);
    CHECK(seenLong);
}

TEST_CASE("six-square decompositions match the figure") {
    auto s = sixSquareSurface();
    auto inv = computeInvolution(*s);
    auto hd = decompose(*s, H(), 10000, &inv);
    REQUIRE(hd.status == Decomposition::Status::Periodic);
    REQUIRE(hd.cylinders.size() == 3);
    std::vector<FE> circs;
    for (auto& c : hd.cylinders) circs.push_back(c.circSq);
    std::sort(circs.begin(), circs.end(), [](const FE& a, const FE& b) { return a < b; });
    CHECK(circs[0] == FE(1));
    CHECK(circs[1] == FE(4));
    CHECK(circs[2] == FE(9));
    auto vd = decompose(*s, V(), 10000, &inv);
    REQUIRE(vd.cylinders.size() == 2);
    for (auto& c : vd.cylinders) CHECK(c.circSq == FE(4));
    // widths 1 and 2: areas 2 and 4
    std::vector<FE> areas{vd.cylinders[0].area, vd.cylinders[1].area};
    std::sort(areas.begin(), areas.end(), [](const FE& a, const FE& b) { return a < b; });
    CHECK(areas[0] == FE(2));
    CHECK(areas[1] == FE(4));
}

TEST_CASE("prototype surface D=8 horizontal decomposition") {
    auto s = buildPrototypeSurface({0, 2, 1, 0});
    auto inv = computeInvolution(*s);
    auto hd = decompose(*s, H(), 10000, &inv);
    REQUIRE(hd.status == Decomposition::Status::Periodic);
    REQUIRE(hd.cylinders.size() == 2);
    CHECK(hd.degenerates.empty());
    FE rt2 = FE::make(0, 1, 1, 8) / FE(2) * FE(2);  // sqrt 8 / 2 * 2 ... = sqrt8
    for (auto& c : hd.cylinders) {
        if (c.simple)
            CHECK(c.circSq == FE(2));  // lambda = sqrt2
        else
            CHECK(c.circSq == FE(4));  // b = 2
    }
}

TEST_CASE("saddle enumeration on the square torus") {
    auto t = buildSquareTiled({0}, {0});
    auto rays = enumerateSaddleRays(*t, FE(1));
    REQUIRE(rays.size() == 4);
    std::vector<Vec2> hols;
    for (auto& r : rays) hols.push_back(r.holonomy);
    int count = 0;
    for (auto& h : hols)
        if (h == Vec2(FE(1), FE(0)) || h == Vec2(FE(-1), FE(0)) || h == Vec2(FE(0), FE(1)) ||
            h == Vec2(FE(0), FE(-1)))
            ++count;
    CHECK(count == 4);
}

TEST_CASE("saddle count is monotone in the length bound") {
    auto L = buildPrototypeSurface({0, 1, 1, -1});
    size_t prev = 0;
    for (long r2 : {1, 2, 4, 8}) {
        auto rays = enumerateSaddleRays(*L, FE(r2));
        CHECK(rays.size() >= prev);
        prev = rays.size();
    }
    // golden L at maxLen^2 = 1 contains the length-lambda horizontal and vertical
    auto rays = enumerateSaddleRays(*L, FE(1));
    FE lam = prototypeLambda({0, 1, 1, -1});
    bool horLam = false, verLam = false;
    for (auto& r : rays) {
        if (r.holonomy == Vec2(lam, FE(0))) horLam = true;
        if (r.holonomy == Vec2(FE(0), lam)) verLam = true;
    }
    CHECK(horLam);
    CHECK(verLam);
}

TEST_CASE("saddle enumeration agrees with separatrix tracing") {
    auto L = buildPrototypeSurface({0, 1, 1, -1});
    Tracer tr(*L);
    auto rays = enumerateSaddleRays(*L, FE(4));
    for (auto& r : rays) {
        RayStop st = tr.separatrix(r.start, 10000);
        REQUIRE(st.kind == RayStop::Kind::Singular);
        CHECK(st.holonomy == r.holonomy);
    }
}

TEST_CASE("eigenform saddle directions are periodic within budget") {
    for (Prototype p : {Prototype{0, 1, 1, -1}, Prototype{0, 2, 1, 0}}) {
        auto s = buildPrototypeSurface(p);
        auto dirs = saddleDirections(*s, FE(4));
        for (auto& d : dirs) {
            auto dec = decompose(*s, d.v, 20000, nullptr);
            CHECK(dec.status == Decomposition::Status::Periodic);
        }
    }
}

TEST_CASE("cylinderThroughPoint finds the vertical cylinder of the golden L") {
    auto L = buildPrototypeSurface({0, 1, 1, -1});
    FE lam = prototypeLambda({0, 1, 1, -1});
    // a point inside the right column [lam,1] x [0,1]
    FE mid = (lam + FE(1)) / FE(2);
    Loc pt{0, Vec2(mid, FE::make(1, 0, 3, 0))};
    Cylinder c = cylinderThroughPoint(*L, pt, V(), 10000);
    CHECK(c.circSq == FE(1));
    CHECK(c.area == FE(1) - lam);
    auto dec = decompose(*L, V(), 10000, nullptr);
    int ci = locateCylinder(*L, dec, pt);
    CHECK(dec.cylinders[ci].circSq == FE(1));
    CHECK(dec.cylinders[ci].key == c.key);
}
