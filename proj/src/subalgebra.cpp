#include "splitoct/subalgebra.hpp"

#include <algorithm>

namespace splitoct {

bool is_subalgebra(const Subspace& s)
{
    for (const Octonion& u : s.basis())
        for (const Octonion& w : s.basis())
            if (!s.contains(u * w)) return false;
    return true;
}

Subspace generated_subalgebra(const std::vector<Octonion>& gens)
{
    if (gens.empty()) throw std::invalid_argument("no generators");
    const Field f = gens.front().field();
    Subspace s(f, gens);
    for (int round = 0; round < 8; ++round) {
        std::vector<Octonion> products;
        for (const Octonion& u : s.basis())
            for (const Octonion& w : s.basis())
                products.push_back(u * w);
        Subspace next = s.sum(Subspace(f, products));
        if (next.dim() == s.dim()) return s;
        s = next;
    }
    return s;
}

bool is_direct_sum_decomposition(const Subspace& a1, const Subspace& a2)
{
    if (a1.dim() + a2.dim() != 8) return false;
    if (a1.intersection(a2).dim() != 0) return false;
    return is_subalgebra(a1) && is_subalgebra(a2);
}

bool contains_unit(const Subspace& s)
{
    return s.contains(Octonion::unit(s.field()));
}

namespace {

Octonion lincomb(const Field& f, std::initializer_list<std::pair<int, int>> terms)
{
    Octonion x(f);
    for (auto [idx, coef] : terms) x[idx] = x[idx] + Scalar(f, coef);
    return x;
}

Subspace span_of(const Field& f, std::initializer_list<Octonion> gens)
{
    return Subspace(f, std::vector<Octonion>(gens));
}

Subspace span_idx(const Field& f, std::initializer_list<int> idxs)
{
    std::vector<Octonion> gens;
    for (int i : idxs) gens.push_back(Octonion::basis(f, i));
    return Subspace(f, gens);
}

} // namespace

Subspace trace_zero_subspace(const Field& f)
{
    std::vector<Octonion> gens;
    for (int i = 4; i < 8; ++i) gens.push_back(Octonion::basis(f, i));
    gens.push_back(Octonion::basis(f, E12));
    gens.push_back(Octonion::basis(f, E21));
    gens.push_back(lincomb(f, {{E11, 1}, {E22, -1}}));
    return Subspace(f, gens);
}

const NamedSubspace& Catalog::space(const std::string& name) const
{
    for (const auto& s : spaces)
        if (s.name == name) return s;
    throw std::invalid_argument("unknown catalog subspace '" + name + "'");
}

const DecompositionPair& Catalog::decomposition(const std::string& name) const
{
    for (const auto& d : decompositions)
        if (d.name == name) return d;
    throw std::invalid_argument("unknown catalog decomposition '" + name + "'");
}

Catalog catalog(const Field& f)
{
    Catalog cat;
    const Octonion unit = Octonion::unit(f);

    cat.spaces.push_back({"O0", "trace-zero hyperplane", trace_zero_subspace(f)});
    cat.spaces.push_back({"K4", "four-dimensional kernel of the non-splitting operator r1",
                          span_idx(f, {E11, E12, VE11, VE12})});
    cat.spaces.push_back({"K3a", "idempotent three-dimensional kernel; admits only splitting operators",
                          span_idx(f, {E11, VE12, VE22})});
    cat.spaces.push_back({"K3b", "three-dimensional kernel of the non-splitting operator r2",
                          span_idx(f, {E12, VE12, VE22})});
    cat.spaces.push_back({"B1", "non-unital four-dimensional subalgebra annihilated by r1",
                          span_idx(f, {E11, E12, VE11, VE12})});
    cat.spaces.push_back({"B2", "three-dimensional subalgebra on which r1 acts as -id",
                          span_idx(f, {E21, VE21, VE22})});
    cat.spaces.push_back({"U", "five-dimensional unital subalgebra meeting K3b trivially",
                          span_idx(f, {E11, E21, E22, VE11, VE21})});
    cat.spaces.push_back({"C1", "unital four-dimensional subalgebra, diagonal type",
                          span_idx(f, {E11, E22, VE12, VE22})});
    cat.spaces.push_back({"C2", "unital four-dimensional subalgebra through e12",
                          span_of(f, {unit, Octonion::basis(f, E12), Octonion::basis(f, VE12),
                                      Octonion::basis(f, VE22)})});

    const Subspace m2_plus = span_idx(f, {E11, E12, E21, E22, VE12, VE22});
    const Subspace dim5 = span_idx(f, {E11, E12, E22, VE12, VE22});
    cat.decompositions.push_back({"D1", "6+2, right summand with zero product",
                                  m2_plus, span_idx(f, {VE11, VE21})});
    cat.decompositions.push_back({"D2", "6+2, right summand with an idempotent",
                                  m2_plus,
                                  span_of(f, {Octonion::basis(f, VE11),
                                              lincomb(f, {{VE21, 1}, {E22, 1}})})});
    cat.decompositions.push_back({"D3", "5+3, right summand with zero product",
                                  dim5, span_idx(f, {E21, VE11, VE21})});
    cat.decompositions.push_back({"D4", "5+3, right summand with an idempotent",
                                  dim5,
                                  span_of(f, {lincomb(f, {{E21, 1}, {E11, 1}}),
                                              Octonion::basis(f, VE11),
                                              Octonion::basis(f, VE21)})});
    cat.decompositions.push_back({"D5", "4+4 unital, diagonal left summand",
                                  span_idx(f, {E11, E22, VE12, VE22}),
                                  span_of(f, {lincomb(f, {{E11, 1}, {E12, 1}}),
                                              lincomb(f, {{E21, 1}, {E22, 1}}),
                                              Octonion::basis(f, VE11),
                                              Octonion::basis(f, VE21)})});
    cat.decompositions.push_back({"D6", "4+4, left summand spanned through the unit",
                                  span_of(f, {unit, Octonion::basis(f, E12),
                                              Octonion::basis(f, VE12), Octonion::basis(f, VE22)}),
                                  span_idx(f, {E11, E21, VE11, VE21})});
    cat.decompositions.push_back({"D7", "4+4, two non-unital summands",
                                  span_idx(f, {E11, E12, VE11, VE12}),
                                  span_idx(f, {E21, E22, VE21, VE22})});
    cat.decompositions.push_back({"E19p", "4+4 unital variant whose left summand holds a square root of -1",
                                  span_of(f, {unit, lincomb(f, {{E12, 1}, {E21, -1}}),
                                              Octonion::basis(f, VE12), Octonion::basis(f, VE22)}),
                                  span_idx(f, {E11, E21, VE11, VE21})});
    return cat;
}

std::optional<Octonion> find_element_with_square(const Subspace& s,
                                                 const Octonion& target,
                                                 std::uint64_t cap)
{
    const Field f = s.field();
    if (!f.is_finite()) throw std::domain_error("infinite field");
    const int d = s.dim();
    const std::uint64_t p = static_cast<std::uint64_t>(f.modulus());

    std::uint64_t total = 1;
    for (int i = 0; i < d; ++i) {
        if (total > cap / (p ? p : 1)) throw std::runtime_error(
            "square search space exceeds cap " + std::to_string(cap));
        total *= p;
    }

    std::vector<std::int64_t> digits(d, 0);
    for (std::uint64_t n = 0; n < total; ++n) {
        Octonion x(f);
        for (int i = 0; i < d; ++i)
            if (digits[i]) x = x + s.basis()[i].scaled(Scalar(f, digits[i]));
        if (x * x == target) return x;
        // odometer, last coefficient fastest
        for (int i = d - 1; i >= 0; --i) {
            if (++digits[i] < f.modulus()) break;
            digits[i] = 0;
        }
    }
    return std::nullopt;
}

} // namespace splitoct
