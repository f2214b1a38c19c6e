#pragma once

#include <json.hpp>

#include "dmf/tseries.hpp"

namespace dmf {

/// JSON schemas (ordered_json keeps key order deterministic):
///  Poly               -> [int, ...]            (ascending encodings)
///  Rat                -> {"num": [...], "den": [...]}
///  Monomial           -> {"g": [...], "delta": int}
///  CoefficientElement -> [{"monomial": {...}, "num": [...], "den": [...]}]
///  TruncatedSeries    -> {"prec": M, "terms": [{"n": int, "coeff": [...]}]}
using json = nlohmann::ordered_json;

json to_json(const Poly& p);
json to_json(const Rat& c);
json to_json(const Monomial& m);
json to_json(const CoefficientElement& c);
json to_json(const TruncatedSeries& f);

Poly poly_from_json(const FieldSpec& F, const json& j);
Rat rat_from_json(const FieldSpec& F, const json& j);
Monomial monomial_from_json(const RingSpec& spec, const json& j);
CoefficientElement coeff_from_json(const RingSpec& spec, const json& j);
TruncatedSeries series_from_json(const RingSpec& spec, const json& j);

}  // namespace dmf
