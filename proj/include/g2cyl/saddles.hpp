#pragma once

#include "g2cyl/trace.hpp"

namespace g2 {

struct FoundSaddle {
    Germ start;
    Vec2 holonomy;
};

/// All saddle connections with |holonomy|^2 <= maxNormSq, one entry per
/// oriented start germ (so each geometric saddle appears twice, once per
/// orientation). Deterministic order: by squared length, then holonomy,
/// then germ key.
std::vector<FoundSaddle> enumerateSaddleRays(const Surface& s, const FE& maxNormSq);

/// Unoriented saddle directions with |holonomy|^2 <= maxNormSq, deduplicated.
std::vector<Direction> saddleDirections(const Surface& s, const FE& maxNormSq);

}  // namespace g2
