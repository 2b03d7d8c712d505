#pragma once

#include "g2cyl/surface.hpp"

namespace g2 {

/// McMullen-style two-cylinder splitting data for eigenforms in H(2).
struct Prototype {
    long a = 0, b = 0, c = 0, e = 0;
    long D() const { return e * e + 4 * b * c; }
    bool operator==(const Prototype& o) const {
        return a == o.a && b == o.b && c == o.c && e == o.e;
    }
    bool operator<(const Prototype& o) const {
        return std::tie(a, b, c, e) < std::tie(o.a, o.b, o.c, o.e);
    }
    std::string str() const;
};

/// All six membership conditions for the prototype set of discriminant D.
bool prototypeValid(const Prototype& p, long D);

/// lambda = (e + sqrt(D))/2 of a prototype.
FE prototypeLambda(const Prototype& p);

/// Square-tiled surface: n unit squares, square i has hPerm[i] to its right
/// and vPerm[i] above it (0-based permutations).
SurfacePtr buildSquareTiled(const std::vector<int>& hPerm, const std::vector<int>& vPerm);

/// Two-cylinder eigenform surface of a prototype: a lambda x lambda square
/// riding on the parallelogram spanned by (b,0) and (a,c).
SurfacePtr buildPrototypeSurface(const Prototype& p);

/// Torus C^2/(Z v1 + Z v2) with an embedded straight slit of vector
/// slitDir * t from the origin; both endpoints become marked points.
SurfacePtr buildSlitTorus(const Vec2& v1, const Vec2& v2, const Vec2& slitDir, const FE& t,
                          long disc);

/// The 6-square H(1,1) surface (three horizontal cylinders of circumferences
/// 1, 2, 3; two vertical cylinders). Reference gluing table in the source.
SurfacePtr sixSquareSurface();

/// Regular octagon with opposite sides identified (H(2), disc 2).
SurfacePtr regularOctagonSurface();

/// Floor of a field element (exact).
Int feFloor(const FE& x);

}  // namespace g2
