#pragma once

#include <json.hpp>

#include "gruss/core.hpp"
#include "gruss/fuzz.hpp"
#include "gruss/measure.hpp"

namespace gruss {

using Json = nlohmann::ordered_json;

// Key order is fixed and no timestamps appear anywhere, so serialized
// reports are byte-identical for identical inputs.
Json scalar_json(const Scalar& s);
Json bracket_json(const Bracket& br);
Json condition_json(const ConditionReport& rep);
Json bound_json(const BoundReport& rep);
Json companion_json(const CompanionReport& rep);
Json dual_chain_json(const DualChain& chain);
Json estimated_bracket_json(const EstimatedBracket& est);
Json fuzz_json(const FuzzReport& rep);
Json sharpness_json(const SharpnessResult& res);

const char* field_name(Field f);

}  // namespace gruss
