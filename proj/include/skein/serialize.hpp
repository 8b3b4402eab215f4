#pragma once

// JSON forms of scalars, polynomials, morphisms and check reports.
//
//   root scalar     {"N": 8, "coeffs": ["1", "0", "-1/2", "0"]}   (phi(N) entries)
//   generic scalar  {"N": 0, "num": {"-2": "1", "2": "1"}, "den": ["1", "0", "1"]}
//   polynomial      {"coeffs": {"2": 1, "0": -2}}
//   morphism        {"source": k, "target": l, "N": N, "terms": [{"pairing": [...], "coeff": ...}]}
//
// Object keys keep insertion order, so output is byte-deterministic.

#include <string>
#include <vector>

#include "json.hpp"
#include "skein/chebyshev.hpp"
#include "skein/diagram.hpp"
#include "skein/verify.hpp"

namespace skein {

using Json = nlohmann::ordered_json;

Json to_json(const CycScalar& s);
Json to_json(const IntPoly& p);
Json to_json(const TLMorphism& f);
Json to_json(const RootContext& ctx);
// Timings are left out unless asked for, since they differ between runs.
Json to_json(const CheckReport& r, bool timings = false);
Json to_json(const std::vector<CheckReport>& rs, bool timings = false);

// Inverse maps; malformed input throws InvalidArgument.
CycScalar scalar_from_json(const Json& j);
IntPoly poly_from_json(const Json& j);
TLMorphism morphism_from_json(const Json& j);

// (matching, coefficient) rows in canonical term order.
Json coefficient_table(const TLMorphism& f);

}  // namespace skein
