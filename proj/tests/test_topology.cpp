#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"

using namespace g2;
using namespace g2test;

namespace {
Vec2 H() { return Vec2(FE(1), FE(0)); }
Vec2 V() { return Vec2(FE(0), FE(1)); }
}  // namespace

TEST_CASE("golden L horizontal vs vertical crossings") {
    auto L = buildPrototypeSurface({0, 1, 1, -1});
    FE lam = prototypeLambda({0, 1, 1, -1});
    auto hd = decompose(*L, H(), 10000, nullptr);
    auto vd = decompose(*L, V(), 10000, nullptr);
    const Cylinder* simpleH = nullptr;
    for (auto& c : hd.cylinders)
        if (c.simple) simpleH = &c;
    REQUIRE(simpleH);
    const Cylinder *vShort = nullptr, *vLong = nullptr;
    for (auto& c : vd.cylinders)
        (c.circSq == FE(1) ? vShort : vLong) = &c;
    REQUIRE(vShort);
    REQUIRE(vLong);
    // the tall vertical cylinder passes through the square: one crossing
    CHECK(intersectionNumber(*L, *simpleH, *vLong) == 1);
    // the short vertical cylinder misses the square entirely (Figure-4 shape)
    CHECK(intersectionNumber(*L, *simpleH, *vShort) == 0);
    CHECK(disjointCyl(*L, *simpleH, *vShort));
    // self and parallel pairs
    CHECK(intersectionNumber(*L, *simpleH, *simpleH) == 0);
    CHECK(intersectionNumber(*L, hd.cylinders[0], hd.cylinders[1]) == 0);
}

TEST_CASE("one-cylinder origami: degenerate vs vertical cylinders") {
    auto s = buildSquareTiled({1, 2, 0}, {2, 1, 0});
    auto inv = computeInvolution(*s);
    auto hd = decompose(*s, H(), 10000, &inv);
    auto vd = decompose(*s, V(), 10000, &inv);
    REQUIRE(hd.degenerates.size() == 3);
    REQUIRE(vd.cylinders.size() == 2);
    const Cylinder* vWide = nullptr;
    const Cylinder* vThin = nullptr;
    for (auto& c : vd.cylinders)
        (c.circSq == FE(4) ? vWide : vThin) = &c;
    REQUIRE(vWide);
    REQUIRE(vThin);
    std::multiset<long> wide, thin;
    for (auto& dg : hd.degenerates) {
        wide.insert(intersectionNumber(*s, dg, *vWide));
        thin.insert(intersectionNumber(*s, dg, *vThin));
        // the full horizontal cylinder is disjoint from its boundary degenerates
        CHECK(intersectionNumber(*s, dg, hd.cylinders[0]) == 0);
    }
    CHECK(wide == std::multiset<long>({1, 1, 2}));
    CHECK(thin == std::multiset<long>({0, 1, 1}));
}

TEST_CASE("parallel degenerate pairs can intersect") {
    auto s = buildSquareTiled({1, 2, 0}, {2, 1, 0});
    auto inv = computeInvolution(*s);
    auto hd = decompose(*s, H(), 10000, &inv);
    REQUIRE(hd.degenerates.size() == 3);
    long positives = 0;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = i + 1; j < 3; ++j) {
            long n = intersectionNumber(*s, hd.degenerates[i], hd.degenerates[j]);
            CHECK(n == intersectionNumber(*s, hd.degenerates[j], hd.degenerates[i]));
            if (n > 0) ++positives;
        }
    CHECK(positives > 0);  // "two degenerate cylinders in the same direction
                           //  can have positive intersection number"
}

TEST_CASE("symmetry and brute-force oracle agreement") {
    std::vector<SurfacePtr> corpus = {buildPrototypeSurface({0, 1, 1, -1}),
                                      buildPrototypeSurface({0, 2, 1, 0}), sixSquareSurface(),
                                      buildSquareTiled({1, 2, 0}, {2, 1, 0})};
    long pairsChecked = 0;
    for (auto& s : corpus) {
        auto inv = computeInvolution(*s);
        auto cyls = gatherCylinders(*s, &inv, FE(4));
        OracleCache cache;
        for (size_t i = 0; i < cyls.size(); ++i) {
            for (size_t j = 0; j < cyls.size(); ++j) {
                long ij = intersectionNumber(*s, cyls[i], cyls[j]);
                CHECK(ij == intersectionNumber(*s, cyls[j], cyls[i]));
                if (!cyls[i].degenerate && !cyls[j].degenerate && i < j) {
                    CHECK(ij == bruteCrossings(*s, cyls[i], cyls[j], cache));
                    ++pairsChecked;
                }
            }
        }
    }
    CHECK(pairsChecked >= 50);
}

TEST_CASE("six-square pairwise intersection facts") {
    auto s = sixSquareSurface();
    auto hd = decompose(*s, H(), 10000, nullptr);
    auto vd = decompose(*s, V(), 10000, nullptr);
    REQUIRE(hd.cylinders.size() == 3);
    REQUIRE(vd.cylinders.size() == 2);
    // horizontal cylinders pairwise disjoint (they are parallel)
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(intersectionNumber(*s, hd.cylinders[i], hd.cylinders[j]) == 0);
    // D1 (area 2) crosses C1 and C3; D2 (area 4) crosses C2 and C3
    auto circOf = [](const Cylinder& c) { return c.circSq; };
    const Cylinder *c1 = nullptr, *c2 = nullptr, *c3 = nullptr;
    for (auto& c : hd.cylinders) {
        if (circOf(c) == FE(1)) c1 = &c;
        if (circOf(c) == FE(4)) c2 = &c;
        if (circOf(c) == FE(9)) c3 = &c;
    }
    const Cylinder *d1 = nullptr, *d2 = nullptr;
    for (auto& c : vd.cylinders) (c.area == FE(2) ? d1 : d2) = &c;
    REQUIRE((c1 && c2 && c3 && d1 && d2));
    CHECK(intersectionNumber(*s, *c1, *d1) == 1);
    CHECK(intersectionNumber(*s, *c3, *d1) == 1);
    CHECK(intersectionNumber(*s, *c2, *d1) == 0);
    CHECK(intersectionNumber(*s, *c1, *d2) == 0);
    CHECK(intersectionNumber(*s, *c3, *d2) == 1);
    CHECK(intersectionNumber(*s, *c2, *d2) == 1);
}
