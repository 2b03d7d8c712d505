#pragma once

#include "g2cyl/involution.hpp"

namespace g2 {

struct SaddleConn {
    int id = -1;
    Germ gPlus;   // germ parallel to the decomposition direction +d
    Germ gMinus;  // opposite end germ
    Vec2 holPlus; // holonomy traced from gPlus
    std::vector<PathSeg> path;  // traced from gPlus
    bool invariant = false;
    std::string key;
};

struct Junction {
    int cls;       // zero class where two core legs meet
    Germ in;       // reversed germ of the incoming leg
    Germ out;      // germ of the outgoing leg
    Germ arcLo, arcHi;  // the pinch resolves through the CCW sector [arcLo, arcHi] (= pi)
    Vec2 point;    // vertex coordinates in `poly`
    int poly;
};

struct Cylinder {
    bool degenerate = false;
    Direction dir;
    Vec2 dplus;             // oriented +d representative
    Vec2 holPlus;           // core holonomy (+d)
    FE circSq, area, heightSq;
    bool simple = false;
    std::vector<int> bottom, top;  // saddle ids along the two boundary chains
    int sad1 = -1, sad2 = -1;      // degenerate constituents
    std::vector<PathSeg> core;     // cyclic core trace
    std::vector<Junction> junctions;  // degenerate: the two zero passages
    std::array<std::string, 2> sadKeys;  // degenerate constituents' canonical keys
    std::string key;
};

struct Decomposition {
    enum class Status { Periodic, Budget };
    Status status = Status::Budget;
    Direction dir;
    Vec2 dplus;
    std::vector<SaddleConn> saddles;
    std::vector<Cylinder> cylinders;
    std::vector<Cylinder> degenerates;
};

/// Full cylinder decomposition in one direction. If `inv` is given, saddle
/// invariance is computed and degenerate cylinders are attached.
Decomposition decompose(const Surface& s, const Vec2& dirRaw, long budget,
                        const InvolutionData* inv = nullptr);

/// The (non-degenerate) cylinder of `dec` whose interior contains `pt`
/// (pt must not lie on a boundary saddle). Returns index into dec.cylinders.
int locateCylinder(const Surface& s, const Decomposition& dec, const Loc& pt);

/// The maximal cylinder containing the closed regular leaf through `pt` in
/// direction `dir` (the direction need not be globally periodic).
Cylinder cylinderThroughPoint(const Surface& s, const Loc& pt, const Vec2& dir, long budget);

}  // namespace g2
