#pragma once

#include <optional>
#include <utility>

#include "splitoct/subalgebra.hpp"

namespace splitoct {

struct RotaBaxterCheck {
    bool holds;
    // lexicographically first basis pair (i, j) violating the identity
    std::optional<std::pair<int, int>> witness;
};

// R(x)R(y) == R(R(x)y + xR(y) + lambda*xy) on all 64 ordered basis pairs;
// both sides are bilinear, so this settles the identity on the whole algebra.
RotaBaxterCheck is_rota_baxter(const LinearMap& r, const Scalar& weight);

// For nonzero weight: splitting <=> R^2 = -lambda R.
bool is_splitting(const LinearMap& r, const Scalar& weight);

// phi(R) = -R - lambda*id; an involution on weight-lambda operators.
LinearMap phi(const LinearMap& r, const Scalar& weight);

// mu*R is Rota-Baxter of weight mu*lambda; returns the map and the new weight.
std::pair<LinearMap, Scalar> scale(const LinearMap& r, const Scalar& mu, const Scalar& weight);

// The operator acting as -lambda on a1 and 0 on a2; requires a direct-sum
// decomposition into subalgebras.
LinearMap from_decomposition(const Subspace& a1, const Subspace& a2, const Scalar& weight);

// Inverse of from_decomposition: (kernel(R + lambda id), kernel(R)).
// Requires a splitting operator; the round trip through from_decomposition
// reproduces R exactly.
std::pair<Subspace, Subspace> splitting_parts(const LinearMap& r, const Scalar& weight);

// m^-1 * R * m
LinearMap conjugate_operator(const LinearMap& r, const LinearMap& m);

// tri-state verification status carried by operator files
enum class Verified { Unchecked, Holds, Fails };

struct RotaBaxterCandidate {
    LinearMap map;
    Scalar weight;
    Verified verified = Verified::Unchecked;
};

RotaBaxterCandidate r1(const Field& f);   // non-splitting, kernel K4
RotaBaxterCandidate r2(const Field& f);   // non-splitting, kernel K3b

} // namespace splitoct
