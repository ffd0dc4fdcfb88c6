#pragma once

#include <string>

#include <json.hpp>

#include "splitoct/morphisms.hpp"
#include "splitoct/rota_baxter.hpp"

namespace splitoct {

using Json = nlohmann::ordered_json;

// matrix file: {"field": "Q"|"Fp:<p>", "rows": [[8 scalar strings] x 8]},
// row-major; columns are the images of the basis vectors
Json matrix_to_json(const LinearMap& m);
LinearMap matrix_from_json(const Json& j);

// operator file: matrix file plus weight and verification status
Json operator_to_json(const RotaBaxterCandidate& c);
RotaBaxterCandidate operator_from_json(const Json& j);

// morphism file: matrix file plus kind/source/params
Json morphism_to_json(const Morphism& m);

Json subspace_to_json(const Subspace& s);

} // namespace splitoct
