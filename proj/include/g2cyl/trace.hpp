#pragma once

#include "g2cyl/surface.hpp"

namespace g2 {

struct Loc {
    int poly = -1;
    Vec2 pt;
};

struct PathSeg {
    int poly;
    Vec2 a, b;
};

/// Per-polygon index of straight segments (saddle-connection pieces) used to
/// detect the first transversal crossing of a traced ray.
struct SegIndex {
    struct Item {
        int id;
        Vec2 a, b;
    };
    std::vector<std::vector<Item>> byPoly;
    explicit SegIndex(int np) : byPoly(np) {}
    void add(int id, int poly, const Vec2& a, const Vec2& b) { byPoly[poly].push_back({id, a, b}); }
};

struct SegHit {
    int id = -1;
    Loc where;
    bool atVertex = false;  // ray terminated at a singular vertex lying on a chain
};

struct RayStop {
    enum class Kind { Singular, Budget, Closed, SegCrossing } kind;
    Germ endGerm;       // Singular: germ of the reversed ray at the arrival class
    Vec2 holonomy;      // total displacement along the ray
    std::vector<PathSeg> path;
    long crossings = 0;
    SegHit hit;         // SegCrossing
};

long defaultBudget();

class Tracer {
  public:
    explicit Tracer(const Surface& s) : s_(s) {}

    /// Trace a straight ray. Stops at a singular vertex (Kind::Singular), when
    /// the budget is exhausted (Kind::Budget), or - if `detect` is given - at
    /// the first transversal crossing with an indexed segment
    /// (Kind::SegCrossing; crossings at the start point are ignored).
    RayStop ray(const Loc& start, const Vec2& dir, long budget,
                const SegIndex* detect = nullptr) const;

    /// Separatrix from an outgoing germ at a singular class.
    RayStop separatrix(const Germ& g, long budget, const SegIndex* detect = nullptr) const;

    /// Closed regular leaf through `start`: Kind::Closed with the full cyclic
    /// path on success; Singular if the leaf runs into a singular point.
    RayStop closedLeaf(const Loc& start, const Vec2& dir, long budget) const;

    /// Germ of the ray -dir at the vertex class of corner (p, v).
    Germ reversedGermAt(int p, int v, const Vec2& dir) const;

    /// Walk along a polyline path to the point at fraction num/den of the
    /// total displacement (exact); fraction must hit a segment interior.
    Loc pointAlong(const std::vector<PathSeg>& path, const Rat& frac) const;

  private:
    const Surface& s_;
};

}  // namespace g2
