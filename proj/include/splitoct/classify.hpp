#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "splitoct/morphisms.hpp"
#include "splitoct/rota_baxter.hpp"
#include "splitoct/subalgebra.hpp"

namespace splitoct {

// Compact arithmetic over small prime fields, used by the exhaustive
// searches; residues are bytes, octonions are 8-byte vectors, operators are
// row-major 64-byte matrices. Everything mirrors the generic modules and
// solutions found here are re-verified through them.
namespace compact {

using Vec8 = std::array<std::uint8_t, 8>;
using Mat8 = std::array<std::uint8_t, 64>;

inline std::uint8_t& entry(Mat8& m, int r, int c) { return m[r * 8 + c]; }
inline std::uint8_t entry(const Mat8& m, int r, int c) { return m[r * 8 + c]; }

Vec8 add(std::int64_t p, const Vec8& a, const Vec8& b);
Vec8 scale(std::int64_t p, const Vec8& a, std::int64_t c);
Vec8 mul(std::int64_t p, const Vec8& a, const Vec8& b);     // octonion product
std::int64_t norm(std::int64_t p, const Vec8& x);           // det a - det c

Mat8 identity();
Vec8 column(const Mat8& m, int j);
Vec8 apply(std::int64_t p, const Mat8& m, const Vec8& x);
Mat8 compose(std::int64_t p, const Mat8& a, const Mat8& b);
Mat8 scale(std::int64_t p, const Mat8& a, std::int64_t c);
Mat8 phi(std::int64_t p, const Mat8& r, std::int64_t weight);  // -R - w*id
int rank(std::int64_t p, const Mat8& m);
std::optional<Mat8> inverse(std::int64_t p, const Mat8& m);

bool is_rota_baxter(std::int64_t p, const Mat8& r, std::int64_t weight);
bool is_splitting(std::int64_t p, const Mat8& r, std::int64_t weight);

Mat8 to_compact(const LinearMap& m);
LinearMap from_compact(const Field& f, const Mat8& m);
Vec8 to_compact(const Octonion& x);

} // namespace compact

// BFS closure of a generator set inside GL(8, p); elements are recorded in
// deterministic discovery order together with a product-reversal bit.
struct GroupClosure {
    std::int64_t p = 2;
    std::vector<Morphism> generators;
    std::vector<compact::Mat8> elements;
    std::vector<std::uint8_t> anti;      // 1 = antiautomorphism-like
    bool complete = true;

    std::size_t size() const { return elements.size(); }
};

GroupClosure group_closure(const std::vector<Morphism>& generators, std::uint64_t cap);

// (rank(R^k), rank((R+id)^k) for k=1..4, characteristic polynomial); constant
// on conjugation orbits.
struct Fingerprint {
    std::array<int, 4> rank_pow;
    std::array<int, 4> rank_shift;
    std::vector<std::string> char_poly;

    bool operator==(const Fingerprint& o) const = default;
    std::string str() const;
};

Fingerprint gl_invariant_fingerprint(const LinearMap& r);

struct OrbitWitness {
    std::size_t element_index;       // into GroupClosure::elements
    std::int64_t mu;                 // scalar factor
    bool applied_phi;
};

// Fast membership index for { m^-1 (mu phi^f(S)) m }; find(R) returns the
// minimal (element_index, applied_phi, mu) transform with
// m^-1 (mu phi^f(R)) m == S, honoring weight bookkeeping mu*wR == wS.
class OrbitIndex {
public:
    OrbitIndex(const GroupClosure& g, const compact::Mat8& target,
               std::int64_t target_weight, bool use_scalars, bool use_phi);

    std::optional<OrbitWitness> find(const compact::Mat8& r, std::int64_t weight) const;

private:
    struct Entry {
        std::size_t element_index;
        std::int64_t mu;
        bool applied_phi;
    };
    std::int64_t p_;
    std::int64_t target_weight_;
    // per key, at most one entry per scalar mu (the first in scan order)
    std::unordered_map<std::string, std::vector<Entry>> index_;
};

std::optional<OrbitWitness> orbit_equivalent(const LinearMap& r, const LinearMap& s,
                                             const GroupClosure& g,
                                             bool use_scalars, bool use_phi,
                                             const Scalar& weight_r, const Scalar& weight_s);

// Depth-first enumeration of Rota-Baxter operators vanishing exactly on a
// prescribed kernel; images of the complement basis are assigned column by
// column with incremental constraint checks.
struct SearchReport {
    std::string kernel_name;
    std::int64_t p = 2;
    std::int64_t weight = 1;
    std::vector<compact::Mat8> solutions;    // lexicographic assignment order
    int splitting_count = 0;
    int nonsplitting_count = 0;
    std::uint64_t nodes_visited = 0;
    bool complete = true;
};

SearchReport search_rb_with_kernel(const NamedSubspace& kernel, const Scalar& weight,
                                   std::uint64_t budget);

struct IsotropicReport {
    std::uint64_t subspaces_checked = 0;     // all 5-dim subspaces of F_2^8
    std::uint64_t isotropic_dim5 = 0;        // expected 0
    std::vector<compact::Vec8> example_dim4; // a totally isotropic 4-dim basis
    bool example_verified = false;
};

IsotropicReport isotropic_audit(const Field& f);   // F_2 only

enum class Verdict { OrbitMatched, FingerprintMatchedOnly, Unresolved };

struct SolutionVerdict {
    std::string kernel_name;
    std::size_t solution_index;
    bool splitting;
    Verdict verdict = Verdict::Unresolved;
    std::optional<OrbitWitness> witness;
};

struct Theorem1Report {
    SearchReport k4, k3a, k3b;
    std::size_t closure_size = 0;
    bool closure_complete = true;
    std::vector<SolutionVerdict> verdicts;   // non-splitting solutions only
    bool complete = true;

    bool any_unresolved() const;
};

Theorem1Report verify_theorem1_f2(std::uint64_t budget, std::uint64_t closure_cap);

} // namespace splitoct
