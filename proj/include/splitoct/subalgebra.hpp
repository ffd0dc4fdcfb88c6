#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "splitoct/linmap.hpp"

namespace splitoct {

bool is_subalgebra(const Subspace& s);

// Smallest product-closed subspace containing the generators; reaches its
// fixed point in at most 8 closure rounds.
Subspace generated_subalgebra(const std::vector<Octonion>& gens);

// Both summands are subalgebras, they meet trivially, and dimensions add to 8.
bool is_direct_sum_decomposition(const Subspace& a1, const Subspace& a2);

bool contains_unit(const Subspace& s);

// { x in O | t(x) = 0 }, dimension 7
Subspace trace_zero_subspace(const Field& f);

struct NamedSubspace {
    std::string name;
    std::string note;
    Subspace carrier;
};

struct DecompositionPair {
    std::string name;
    std::string note;
    Subspace a1;
    Subspace a2;
};

// Built-in subalgebras and direct-sum decompositions, materialized over the
// requested field. Names are stable identifiers used by the CLI (--kernel).
struct Catalog {
    std::vector<NamedSubspace> spaces;
    std::vector<DecompositionPair> decompositions;   // D1..D7 plus E19p

    const NamedSubspace& space(const std::string& name) const;
    const DecompositionPair& decomposition(const std::string& name) const;
};

Catalog catalog(const Field& f);

// Exhaustive search for x in S with x*x == target; finite fields only.
// Candidates are enumerated in odometer order over the RREF basis
// coefficients (last coefficient fastest), so "first found" is well defined.
// Throws if |F|^dim(S) exceeds the cap.
std::optional<Octonion> find_element_with_square(const Subspace& s,
                                                 const Octonion& target,
                                                 std::uint64_t cap = 100'000'000);

} // namespace splitoct
