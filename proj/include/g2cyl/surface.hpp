#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "g2cyl/field.hpp"

namespace g2 {

struct SurfaceError : std::runtime_error {
    std::string code;
    SurfaceError(std::string c, const std::string& msg)
        : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

struct EdgeRef {
    int poly = -1;
    int edge = -1;
    bool operator==(const EdgeRef& o) const { return poly == o.poly && edge == o.edge; }
};

struct Corner {
    int poly = -1;
    int vtx = -1;
    bool operator==(const Corner& o) const { return poly == o.poly && vtx == o.vtx; }
};

/// Half-open CCW sector [u1, u2) of opening angle in (0, pi]; does it contain d?
bool sectorContainsHalfOpen(const Vec2& u1, const Vec2& u2, const Vec2& d);
bool parallelSameDir(const Vec2& a, const Vec2& b);

/// Oriented canonical form of a nonzero vector up to positive scaling.
Vec2 orientedCanon(const Vec2& v);

struct BuildOptions {
    bool allowTorus = false;
    std::vector<Corner> marked;  // classes forced singular (slit endpoints)
};

class Surface {
  public:
    enum class Stratum { H2, H11, Torus };

    long disc = 0;
    std::vector<std::vector<Vec2>> polys;       // CCW convex vertex loops
    std::vector<std::vector<EdgeRef>> glue;     // partner of directed edge (p,e)

    // derived
    int nClasses = 0;
    std::vector<std::vector<int>> classOf;      // [poly][vtx] -> class id
    std::vector<std::vector<Corner>> fans;      // class -> CCW corner cycle
    std::vector<int> turns;                     // cone angle in multiples of 2*pi
    std::vector<char> isSingularClass;          // zeros plus marked classes
    std::vector<int> singularClasses;
    FE area;
    int genus = 0;
    Stratum stratum = Stratum::Torus;

    int np() const { return (int)polys.size(); }
    int nv(int p) const { return (int)polys[p].size(); }
    const Vec2& vtx(int p, int v) const { return polys[p][v]; }
    Vec2 edgeVec(int p, int e) const { return polys[p][(e + 1) % nv(p)] - polys[p][e]; }
    EdgeRef partner(int p, int e) const { return glue[p][e]; }
    // corner sector at (p,v): CCW from dirOut to dirIn
    Vec2 cornerDirOut(const Corner& c) const {
        return polys[c.poly][(c.vtx + 1) % nv(c.poly)] - polys[c.poly][c.vtx];
    }
    Vec2 cornerDirIn(const Corner& c) const {
        int n = nv(c.poly);
        return polys[c.poly][(c.vtx + n - 1) % n] - polys[c.poly][c.vtx];
    }
    int cls(const Corner& c) const { return classOf[c.poly][c.vtx]; }
    int fanIndexOf(const Corner& c) const;
    Corner nextCornerCCW(const Corner& c) const;

    bool cornerContains(const Corner& c, const Vec2& d) const {
        return sectorContainsHalfOpen(cornerDirOut(c), cornerDirIn(c), d);
    }
    /// The unique corner of the class of `near` whose half-open sector contains d.
    Corner cornerAtClassContaining(int cls, const Vec2& d, const Corner& near) const;
};

using SurfacePtr = std::shared_ptr<const Surface>;

SurfacePtr buildFromPolygons(long disc, std::vector<std::vector<Vec2>> polys,
                             std::vector<std::vector<EdgeRef>> glue,
                             const BuildOptions& opt = {});

SurfacePtr transform(const Surface& s, const Mat2& m);

/// Outgoing germ of a geodesic ray at a singular vertex class.
struct Germ {
    int cls = -1;
    int fanIdx = -1;  // index into fans[cls]
    Vec2 dir;         // exact direction (any positive scale)
    bool sameRay(const Germ& o) const {
        return cls == o.cls && fanIdx == o.fanIdx && wedge(dir, o.dir).isZero() &&
               dot(dir, o.dir).sign() > 0;
    }
    std::string key(const Surface& s) const;
};

/// Cyclic list of the germs of directions +d and -d around one singular class,
/// in fan order. Consecutive entries are exactly pi apart.
struct Pencil {
    int cls = -1;
    Vec2 dplus;
    struct Entry {
        int fanIdx;
        bool positive;
    };
    std::vector<Entry> entries;
    int size() const { return (int)entries.size(); }
    int indexOfFan(int fanIdx) const;
    Germ germ(const Surface& s, int i) const;
    int nextCCW(int i) const { return (i + 1) % size(); }
    int nextCW(int i) const { return (i + size() - 1) % size(); }
};

Pencil buildPencil(const Surface& s, int cls, const Vec2& d);

}  // namespace g2
