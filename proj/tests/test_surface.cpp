#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "g2cyl/builders.hpp"
#include "g2cyl/involution.hpp"
#include "g2cyl/jsonio.hpp"

using namespace g2;

TEST_CASE("unit square torus accepted in torus mode") {
    auto t = buildSquareTiled({0}, {0});
    CHECK(t->genus == 1);
    CHECK(t->stratum == Surface::Stratum::Torus);
    CHECK(t->area == FE(1));
    REQUIRE(t->nClasses == 1);
    CHECK(t->turns[0] == 1);
}

TEST_CASE("regular octagon is H(2) with a 6pi zero") {
    auto s = regularOctagonSurface();
    CHECK(s->stratum == Surface::Stratum::H2);
    // angle-sum oracle: 8 corners of 3pi/4 sum to 6pi
    REQUIRE(s->nClasses == 1);
    CHECK(s->turns[0] == 3);
}

TEST_CASE("six square surface") {
    auto s = sixSquareSurface();
    CHECK(s->stratum == Surface::Stratum::H11);
    CHECK(s->area == FE(6));
    int zeros = 0;
    for (int k = 0; k < s->nClasses; ++k)
        if (s->turns[k] == 2) ++zeros;
    CHECK(zeros == 2);
}

TEST_CASE("three square L origami is H(2)") {
    auto s = buildSquareTiled({1, 2, 0}, {2, 1, 0});
    CHECK(s->stratum == Surface::Stratum::H2);
    CHECK(s->area == FE(3));
}

TEST_CASE("four square one-cylinder H(1,1) origami") {
    auto s = buildSquareTiled({1, 2, 3, 0}, {3, 2, 1, 0});
    CHECK(s->stratum == Surface::Stratum::H11);
    CHECK(s->area == FE(4));
}

TEST_CASE("prototype surfaces") {
    Prototype p5{0, 1, 1, -1};
    auto L = buildPrototypeSurface(p5);
    CHECK(L->stratum == Surface::Stratum::H2);
    FE lam = prototypeLambda(p5);
    CHECK(L->area == lam * lam + FE(1));

    Prototype p8{0, 2, 1, 0};
    auto s8 = buildPrototypeSurface(p8);
    CHECK(s8->area == FE(4));  // 2 + sqrt2*sqrt2
    CHECK(s8->disc == 8);

    Prototype p9{0, 2, 1, -1};
    auto s9 = buildPrototypeSurface(p9);
    CHECK(s9->disc == 0);  // rational surface
    CHECK(s9->area == FE(3));
    CHECK(prototypeLambda(p9) == FE(1));

    CHECK_THROWS_AS(buildPrototypeSurface(Prototype{1, 1, 1, 1}), SurfaceError);
}

TEST_CASE("slit torus builder") {
    Vec2 e1(FE(1), FE(0)), e2(FE(0), FE(1));
    FE half = FE::make(1, 0, 2, 0);
    // alpha=1/2, t=1/2: slit holonomy (1/2, 1/4)
    auto st = buildSlitTorus(e1, e2, Vec2(FE(1), half), half, 0);
    CHECK(st->genus == 1);
    CHECK(st->singularClasses.size() == 2);
    CHECK_THROWS_AS(buildSlitTorus(e1, e2, Vec2(FE(1), half), FE(0), 0), SurfaceError);
    CHECK_THROWS_AS(buildSlitTorus(e1, e2, Vec2(FE(2), FE(0)), FE(1), 0), SurfaceError);
    CHECK_THROWS_AS(buildSlitTorus(e1, e1, Vec2(FE(1), half), half, 0), SurfaceError);
}

TEST_CASE("json round trip is exact") {
    for (auto s : {buildPrototypeSurface({0, 1, 1, -1}), sixSquareSurface(),
                   regularOctagonSurface()}) {
        Json j = surfaceToJson(*s);
        auto s2 = surfaceFromJson(j);
        CHECK(s2->polys == s->polys);
        CHECK(s2->area == s->area);
        CHECK(s2->stratum == s->stratum);
        CHECK(surfaceToJson(*s2) == j);
        // reader accepts un-normalized field elements
        Json raw = j;
        raw["polygons"][0][0][0]["a"] = 0;
        raw["polygons"][0][0][0]["den"] = 7;
        auto s3 = surfaceFromJson(raw);
        CHECK(s3->polys == s->polys);
    }
}

TEST_CASE("gluing validation") {
    std::vector<std::vector<Vec2>> polys = {{Vec2(FE(0), FE(0)), Vec2(FE(1), FE(0)),
                                             Vec2(FE(1), FE(1)), Vec2(FE(0), FE(1))}};
    std::vector<std::vector<EdgeRef>> badGlue(1, std::vector<EdgeRef>(4));
    badGlue[0][0] = EdgeRef{0, 1};  // bottom to right: not a translation
    badGlue[0][1] = EdgeRef{0, 0};
    badGlue[0][2] = EdgeRef{0, 3};
    badGlue[0][3] = EdgeRef{0, 2};
    CHECK_THROWS_AS(buildFromPolygons(0, polys, badGlue, {}), SurfaceError);
}

TEST_CASE("involution on H(2) surfaces") {
    for (auto s : {regularOctagonSurface(), buildPrototypeSurface({0, 1, 1, -1}),
                   buildSquareTiled({1, 2, 0}, {2, 1, 0})}) {
        auto inv = computeInvolution(*s);
        int z = s->singularClasses[0];
        CHECK(inv.classImage[z] == z);
        // involutive on germs: tau(tau(g)) == g over the reference pencil
        Pencil p = buildPencil(*s, z, Vec2(FE(1), FE(0)));
        for (int i = 0; i < p.size(); ++i) {
            Germ g = p.germ(*s, i);
            Germ gg = inv.germImage(*s, inv.germImage(*s, g));
            CHECK(gg.sameRay(g));
        }
    }
}

TEST_CASE("involution swaps the zeros in H(1,1)") {
    auto s = sixSquareSurface();
    auto inv = computeInvolution(*s);
    int z1 = s->singularClasses[0], z2 = s->singularClasses[1];
    CHECK(inv.classImage[z1] == z2);
    CHECK(inv.classImage[z2] == z1);
}

TEST_CASE("involution on a slit torus swaps marked points") {
    Vec2 e1(FE(1), FE(0)), e2(FE(0), FE(1));
    FE half = FE::make(1, 0, 2, 0);
    auto st = buildSlitTorus(e1, e2, Vec2(FE(1), FE(0)), half, 0);
    auto inv = computeInvolution(*st);
    int z1 = st->singularClasses[0], z2 = st->singularClasses[1];
    CHECK(inv.classImage[z1] == z2);
}

TEST_CASE("transform by a shear keeps the stratum") {
    auto L = buildPrototypeSurface({0, 1, 1, -1});
    Mat2 shear{FE(1), FE(1), FE(0), FE(1)};
    auto L2 = transform(*L, shear);
    CHECK(L2->stratum == Surface::Stratum::H2);
    CHECK(L2->area == L->area);
    CHECK_THROWS_AS(transform(*L, Mat2{FE(1), FE(0), FE(0), FE(-1)}), SurfaceError);
}
