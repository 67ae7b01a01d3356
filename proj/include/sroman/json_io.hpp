#pragma once

#include "json.hpp"

#include "sroman/constructions.hpp"
#include "sroman/formulas.hpp"
#include "sroman/roman.hpp"
#include "sroman/sierpinski.hpp"
#include "sroman/solver.hpp"

namespace sroman {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits are numbers, larger ones decimal strings.
Json big_to_json(const BigInt& x);

/// {"graph": hash, "labels": [...], "weight": w}
Json roman_to_json(const RomanFunction& f, const Graph& g);
/// Same, plus "words": {word: label} for the vertices of S(G,t).
Json roman_to_json(const RomanFunction& f, const SierpinskiGraph& s);

/// Reads the "labels" array (or a bare array). When "graph" is present it
/// must match `g`; throws InputError otherwise.
RomanFunction roman_from_json(const Json& j, const Graph& g);

Json certificate_to_json(const Certificate& c, const Graph& g, bool with_stats);
Json report_to_json(const ConstructionReport& r);
Json value_or_bounds_to_json(const ValueOrBounds& v);
Json sierpinski_metadata(const SierpinskiGraph& s);

}  // namespace sroman
