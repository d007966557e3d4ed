#pragma once

#include <json.hpp>

#include "bgr/catalog.hpp"
#include "bgr/colored_bigraph.hpp"
#include "bgr/patterns.hpp"
#include "bgr/search.hpp"
#include "bgr/structure.hpp"

namespace bgr {

using Json = nlohmann::ordered_json;

/// {a, b, k, colors: [[...], ...]}
void to_json(Json& j, const ColoredBigraph& g);
ColoredBigraph coloringFromJson(const Json& j);

void to_json(Json& j, const Vertex& v);
void to_json(Json& j, const Certificate& c);
/// {theorem, case, uPartition, vPartition, baseColor, colorAssignment, swapped}
void to_json(Json& j, const StructureWitness& w);
void to_json(Json& j, const Classification& c);
/// {theoremId, value, hypothesesChecked, alsoMatched}
void to_json(Json& j, const BgrValue& v);
void to_json(Json& j, const OutOfTheoremRange& r);
void to_json(Json& j, const TheoremCheck& c);
void to_json(Json& j, const BipartitionStats& s);
void to_json(Json& j, const LiBounds& b);
void to_json(Json& j, const EnumerationStats& s);
void to_json(Json& j, const AvoidanceResult& r);
void to_json(Json& j, const CheckOutcome& c);

/// Wall time is left out unless asked for, so equal inputs give equal bytes.
Json reportToJson(const VerificationReport& r, bool includeWallTime = false);

}  // namespace bgr
