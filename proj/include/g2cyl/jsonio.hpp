#pragma once

#include "g2cyl/decompose.hpp"

// vendor single-header json
#include "json.hpp"

namespace g2 {

using Json = nlohmann::ordered_json;

Json feToJson(const FE& x);
FE feFromJson(const Json& j);

Json surfaceToJson(const Surface& s);
SurfacePtr surfaceFromJson(const Json& j);

Json decompositionToJson(const Surface& s, const Decomposition& d);

/// Exact display string for a squared length: the circumference itself when
/// it has an exact field square root, else "sqrt(...)" of the exact square.
std::string lengthString(const FE& sq);

}  // namespace g2
