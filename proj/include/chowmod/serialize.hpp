#pragma once

#include <optional>
#include <string_view>

#include <json.hpp>

#include "chowmod/milnor.hpp"

namespace chowmod {

using Json = nlohmann::ordered_json;

/// "Q", "Q:<mu>", "Fp:<p>", "Fq:<p>:<mu>" (mu a monic polynomial in u) or
/// "Fq:<p>:<d>" for the stored degree-d extension.
FieldPtr parse_field_spec(std::string_view text);

Json field_to_json(const FieldPtr& field);
/// Accepts {"spec": "..."} or a bare spec string.
FieldPtr field_from_json(const Json& j);

/// "1,2,1" -> D_(1,2,1).
ModulusDatum parse_modulus_exponents(std::string_view text, const FieldPtr& field);
Json modulus_to_json(const ModulusDatum& d);
/// {"exponents": [...]} or {"poly": "t1*t2 - ..."}.
ModulusDatum modulus_from_json(const Json& j, const FieldPtr& field, unsigned r);

/// "num" or "(num)/(den)" in the variable t1.
RatFunc parse_ratfunc(std::string_view text, const FieldPtr& field);

struct CycleInput {
  HypersurfaceCycle cycle;
  std::optional<ModulusDatum> modulus;
};

Json cycle_to_json(const HypersurfaceCycle& z, const ModulusDatum* d = nullptr);
CycleInput cycle_from_json(const Json& j);

struct ZeroCycleInput {
  ZeroCycle cycle;
  std::optional<ModulusDatum> modulus;
};

/// {"t": [...], "y": [...]}, with "field" when the residue field differs
/// from the base.
Json point_to_json(const ClosedPoint& p, const FieldPtr& base);
ClosedPoint point_from_json(const Json& j, const FieldPtr& base);
Json zero_cycle_to_json(const ZeroCycle& z, const ModulusDatum* d = nullptr);
ZeroCycleInput zero_cycle_from_json(const Json& j);

/// {"field": ..., "n": 2, "terms": [{"mult": 1, "entries": ["2", "3"]}]}.
/// Input may also be the one-symbol form {"field": ..., "entries": [...]}.
Json symbol_to_json(const MilnorElement& e);
MilnorElement symbol_from_json(const Json& j);
Json function_symbol_to_json(const FunctionMilnorElement& e);
FunctionMilnorElement function_symbol_from_json(const Json& j);

/// {"pi": "t1^2 + 1"} or {"infinity": true}.
Json place_to_json(const Place& v);
Place place_from_json(const Json& j, const FieldPtr& field);

/// {"field": ..., "model": "original", "base": [...], "components": [...]}.
Json curve_to_json(const ParamCurve& c);
ParamCurve curve_from_json(const Json& j);

/// Structured error object {"error": {"code": ..., "message": ...}}.
Json error_to_json(const Error& e);

}  // namespace chowmod
