#pragma once

// JSON and CSV encodings of the toolkit's values.

#include <string>
#include <vector>

#include "json.hpp"

#include "delpezzo/curve_counting.hpp"
#include "delpezzo/cycle_algebra.hpp"
#include "delpezzo/degeneration.hpp"
#include "delpezzo/incidence.hpp"
#include "delpezzo/neg_one.hpp"
#include "delpezzo/tame_symbol.hpp"

namespace delpezzo {

using nlohmann::json;

// [a, b_1, ..., b_r]
json class_to_json(const DivisorClass& x);
DivisorClass class_from_json(const json& j);

// {id, class, type, indices} plus "omitted" for cubics that miss a point.
json curve_to_json(const NegOneCurve& c);

// Header "id,class,type,indices" followed by one row per curve.
std::string curves_to_csv(const std::vector<NegOneCurve>& curves);

// {terms: [{curve, orders: {point: int}, anchor}]}; "constant" is added for
// constant functions.
json precycle_to_json(const FormalPrecycle& z);
FormalPrecycle precycle_from_json(const json& j);

json formal_sum_to_json(const FormalSum& s);

json tame_to_json(const TameSymbol& t);

// Starts from DegenerationModel::standard() and applies overrides:
//   {"intersections": [{"x": "H", "y": "T11", "value": 2}, ...],
//    "other_components": [{"label": "Z1", "a_z": 1, "t11": 0, "swap_with": "Z2"}, ...],
//    "p1_component": "T12", "splitting": "none" | "first" | "both",
//    "identity_involution": false}
// Throws InputError on malformed input.
DegenerationModel model_from_json(const json& overrides);

json replay_to_json(const DegenerationModel& m, const BoundaryReplay& r);

json count_table_to_json(const std::map<long, BigInt>& table);

}  // namespace delpezzo
