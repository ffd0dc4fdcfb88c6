#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splitoct/linmap.hpp"

namespace splitoct {

bool is_automorphism(const LinearMap& m);       // invertible, m(xy) = m(x)m(y)
bool is_antiautomorphism(const LinearMap& m);   // invertible, m(xy) = m(y)m(x)

enum class MorphKind { Auto, Anti };

struct Morphism {
    LinearMap map;
    MorphKind kind;
    std::vector<Scalar> params;
    std::string source;
};

// Construct the k-th entry (1..18, except 14) of the built-in morphism
// family over the scalar's field. Families 1-8, 10, 12, 13, 15, 16 take the
// parameter alpha (nonzero for 7, 12, 13); 9, 11, 17, 18 take none.
// Every map is verified at construction and the call throws if the check
// fails. Family 14 is underdetermined; use complete_involution_14.
Morphism example_morphism(const Field& f, int k,
                          std::optional<Scalar> alpha = std::nullopt);

// x -> conjugate(x) as a verified antiautomorphism
Morphism canonical_involution(const Field& f);

Morphism compose(const Morphism& a, const Morphism& b);  // a after b

// All ways to extend the partial family-14 data (e11 <-> e22, e12 <-> ve22,
// e21 <-> ve11) by images of ve12 and ve21 so that the result squares to the
// identity and is an automorphism or antiautomorphism. Exhaustive over
// |F|^16 candidate pairs with incremental pruning on the first column;
// deterministic odometer order. Throws if |F|^8 exceeds the cap.
std::vector<Morphism> complete_involution_14(const Field& f,
                                             std::uint64_t cap = 20'000'000);

// Every admissible member of the family over a finite field (all alpha for
// the parametric entries) plus the canonical involution; used as generators
// for group closures.
std::vector<Morphism> all_example_morphisms(const Field& f);

} // namespace splitoct
