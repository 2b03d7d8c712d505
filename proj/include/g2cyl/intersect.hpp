#pragma once

#include "g2cyl/decompose.hpp"

namespace g2 {

/// Geometric intersection number of the free homotopy classes of the core
/// curves of two cylinders (possibly degenerate) on the same surface.
/// Exact: transversal interior crossings of the fixed core representatives,
/// plus the combinatorial germ-interleaving count at shared zeros.
long intersectionNumber(const Surface& s, const Cylinder& c, const Cylinder& d);

inline bool disjointCyl(const Surface& s, const Cylinder& c, const Cylinder& d) {
    return intersectionNumber(s, c, d) == 0;
}

/// Do the four rays {aIn, aOut} and {bIn, bOut} at one zero strictly
/// interleave in the cyclic order of directions around it?
bool germsInterleave(const Surface& s, const Germ& aIn, const Germ& aOut, const Germ& bIn,
                     const Germ& bOut);

}  // namespace g2
