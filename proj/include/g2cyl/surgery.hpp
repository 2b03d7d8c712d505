#pragma once

#include "g2cyl/decompose.hpp"

namespace g2 {

/// Mutable polygon complex for cut-and-reglue surgery. Edges carry stable
/// ids so gluings survive polygon splitting.
class Complex {
  public:
    struct Poly {
        std::vector<Vec2> v;
        std::vector<long> eid;
        int srcPoly;  // originating polygon of the input surface
    };
    long disc = 0;
    std::vector<Poly> polys;
    std::map<long, long> mate;  // absent key = boundary edge
    std::vector<std::pair<int, int>> marked;

    static Complex fromSurface(const Surface& s);

    std::pair<int, int> locate(long eid) const;
    Vec2 edgeVec(int p, int i) const;
    long freshId() { return nextId_++; }

    /// Insert a vertex at `pt` on edge (p,i) and on its mate; keeps gluing.
    /// Returns the ids of the two halves (in the edge's own direction).
    std::pair<long, long> splitEdgeAt(int p, int i, const Vec2& pt);
    /// Vertex index of `pt` on the boundary of piece p, splitting an edge if needed.
    int ensureVertex(int p, const Vec2& pt);
    /// Split piece p along the chord between vertex indices i and j.
    void splitChord(int p, int i, int j);
    /// Refine pieces so every given chart segment is a run of edges.
    /// Returns, per segment, the ordered edge ids covering it (oriented a->b).
    std::vector<std::vector<long>> sliceAlong(const std::vector<PathSeg>& segs);

    int pieceContaining(int srcPoly, const Vec2& a, const Vec2& b) const;
    bool pointInPiece(int p, const Vec2& pt) const;

    void unglue(long eid);
    void glue(long e1, long e2);

    /// Directed boundary walk starting from a boundary edge id.
    std::vector<long> boundaryCircle(long startEid) const;

    SurfacePtr compile(bool allowTorus) const;

  private:
    long nextId_ = 0;
};

/// Map locations of the pre-surgery surface into the result (coordinates are
/// preserved; only the polygon decomposition is refined).
struct SurgeryMap {
    const Surface* before = nullptr;
    SurfacePtr after;
    std::vector<std::vector<int>> piecesOf;  // before-poly -> after-poly ids
    Loc map(const Loc& l) const;
};

struct OpenedSurface {
    SurfacePtr surface;
    SurgeryMap map;
    int stripPoly = -1;   // the inserted strip polygon
    Vec2 sideVec;         // the strip's transversal side
};

/// Lemma-3.3-style deformation: open a degenerate cylinder into a genuine
/// simple cylinder of transversal side t*rot90(d). Exact arithmetic; the
/// stratum is preserved and the original flat structure is the t -> 0 limit.
OpenedSurface openDegenerate(const Surface& s, const Cylinder& deg, const FE& t);

struct CutOffCylinder {
    SurfacePtr rest;      // complement with the two boundary circles re-glued
    SurgeryMap map;       // defined away from the removed cylinder
    Germ slitGermPlus;    // germ of the slit seam at its start zero, +d oriented
    Vec2 slitHolonomy;
};

/// Cut a simple cylinder out of the surface and identify the two resulting
/// boundary circles by the translation matching their start zeros (the
/// complement in H(2) becomes a slit torus, in H(1,1) an H(2) surface with a
/// marked saddle seam).
CutOffCylinder cutCylinder(const Surface& s, const Decomposition& dec, int cylIndex);

}  // namespace g2
