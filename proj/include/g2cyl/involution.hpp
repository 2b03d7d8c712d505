#pragma once

#include "g2cyl/saddles.hpp"
#include "g2cyl/trace.hpp"

namespace g2 {

/// Hyperelliptic involution as a map on outgoing germs at singular classes
/// (flat derivative -Id). Determined by one anchor germ per singular class.
struct InvolutionData {
    std::vector<int> classImage;  // per class id (-1 for non-singular classes)
    struct Anchor {
        Germ ref;  // a germ of direction (1,0)
        Germ img;  // its image: a germ of direction (-1,0) at classImage
    };
    std::vector<Anchor> anchors;  // per class id

    Germ germImage(const Surface& s, const Germ& g) const;
    /// tau(saddle traced from g) == that saddle itself?
    bool saddleInvariant(const Surface& s, const Tracer& tr, const Germ& g1, const Germ& g2) const;
};

InvolutionData computeInvolution(const Surface& s);

/// Cyclic position comparison of two outgoing rays at the same class:
/// -1 / 0 / +1 as g comes before / equals / after h in the CCW fan walk
/// (positions are absolute within the fan, starting at corner 0).
int germPosCompare(const Surface& s, const Germ& g, const Germ& h);

/// Number of +/-(1,0) pencil germs in the half-open cyclic interval
/// (from, to], walking CCW.
int pencilCrossings(const Surface& s, const Pencil& refPencil, const Germ& from, const Germ& to);

}  // namespace g2
