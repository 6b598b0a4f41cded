#pragma once

#include <json.hpp>

#include "leviform/hermitian_poly.hpp"
#include "leviform/poly.hpp"

namespace leviform {

// Wire shapes:
//   Poly          {"nvars": n, "terms": [{"exps": [..], "re": "p/q", "im": "p/q"}]}
//   BiPoly        same as Poly plus "split": n (nvars = 2n)
//   HermitianPoly {"nvars": n, "terms": [{"mu": [..], "nu": [..], "re": "p/q", "im": "p/q"}]}
// Terms are written in display order so output is byte-stable. Readers throw
// DomainError(InvalidArgument) on malformed input.

nlohmann::json to_json(const ExponentVector& e);
ExponentVector exponent_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BiPoly& p);
BiPoly bipoly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const HermitianPoly& f);
HermitianPoly hermitian_from_json(const nlohmann::json& j);

}  // namespace leviform
