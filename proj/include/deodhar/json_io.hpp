#pragma once

#include <json.hpp>

#include "deodhar/cells.hpp"
#include "deodhar/prop21.hpp"
#include "deodhar/search.hpp"
#include "deodhar/unipotent.hpp"

namespace deodhar {

using Json = nlohmann::ordered_json;

/// {"mask", "end", "I", "J", "distinguished", "dim", "affine", "torus",
///  "phi": [{"i", "root", "free"}]}
Json to_json(const CellDescriptor& c);

/// [{"root": [ints], "coeff": [{"mono": {"z1": 2, "t": -1}, "num": 1, "den": 1}]}]
Json to_json(const UnipotentWord& w);
/// Inverse of to_json; throws std::invalid_argument on malformed input.
UnipotentWord unipotent_word_from_json(const Json& j);

Json to_json(const ObstructionReport& r);
Json to_json(const CertifiedPair& p);
Json to_json(const Prop21Report& r);

}  // namespace deodhar
