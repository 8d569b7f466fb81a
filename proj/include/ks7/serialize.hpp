#pragma once

// JSON forms of the library's values. Rationals and residues are "p/q"
// strings; integers are JSON integers.

#include "ks7/classify.hpp"
#include "ks7/kreckstolz.hpp"
#include "ks7/sixfold.hpp"

#include <json.hpp>

namespace ks7::serialize {

using json = nlohmann::json;

/// JSON integer when it fits in 64 bits, decimal string otherwise.
json integer_to_json(const exactmath::Integer& n);
exactmath::Integer integer_from_json(const json& j);

json to_json(const exactmath::Rational& q);
json to_json(const exactmath::QmodZ& q);
json to_json(const sixfold::TypeIBase& base);
json to_json(const sixfold::TypeIIBase& base);
json to_json(const sixfold::ValidationReport& report);
json to_json(const kreckstolz::CharNumbers& ch);
json to_json(const kreckstolz::SInvariants& s);
json to_json(const classify::RealizationSet& set);
json to_json(const classify::Decision& d);

sixfold::TypeIBase type1_from_json(const json& j);
sixfold::TypeIIBase type2_from_json(const json& j);
kreckstolz::SInvariants s_invariants_from_json(const json& j);
classify::RealizationSet realization_set_from_json(const json& j);

} // namespace ks7::serialize
