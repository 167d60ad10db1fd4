#pragma once

#include <string>

#include <json.hpp>

#include "tauex/algebra.hpp"
#include "tauex/egf.hpp"
#include "tauex/enumeration.hpp"
#include "tauex/perpendicular.hpp"

// JSON forms. Objects use ordered_json so keys always come out in the same
// order; counts are decimal strings.

namespace tauex {

using Json = nlohmann::ordered_json;

Json to_json(const AlgebraId& a);
Json to_json(const Indecomposable& m);
Json to_json(const CategoryShape& s);
Json to_json(const ChoiceChain& c);
Json to_json(const IdentityReport& r);

AlgebraId algebra_from_json(const Json& j);
Indecomposable module_from_json(const Json& j);

/// Composition factors from top to socle, e.g. "1/2" or "3/1".
std::string composition_label(const AlgebraId& a, const Indecomposable& m);

}  // namespace tauex
