#include "splitoct/morphisms.hpp"

#include <array>

namespace splitoct {

namespace {

bool multiplicative(const LinearMap& m, bool reversed)
{
    const Field& f = m.field();
    for (int i = 0; i < 8; ++i) {
        const Octonion mi = m.column(i);
        for (int j = 0; j < 8; ++j) {
            const Octonion mj = m.column(j);
            const Octonion lhs = reversed ? mj * mi : mi * mj;
            const Octonion prod = Octonion::basis(f, i) * Octonion::basis(f, j);
            if (lhs != m.apply(prod)) return false;
        }
    }
    return true;
}

bool invertible(const LinearMap& m) { return m.rank() == 8; }

} // namespace

bool is_automorphism(const LinearMap& m)
{
    return invertible(m) && multiplicative(m, false);
}

bool is_antiautomorphism(const LinearMap& m)
{
    return invertible(m) && multiplicative(m, true);
}

namespace {

struct Term {
    int index;
    int num;            // small integer coefficient, or alpha-power below
    int alpha_power;    // coefficient is num * alpha^alpha_power (power in {-1,0,1,2})
};

// column builder: image of basis vector j
void set_column(LinearMap& m, int j, const Scalar& alpha, std::initializer_list<Term> terms)
{
    const Field& f = m.field();
    for (int i = 0; i < 8; ++i) m.at(i, j) = zero(f);
    for (const Term& t : terms) {
        Scalar c = Scalar(f, t.num);
        if (t.alpha_power == 1) c = c * alpha;
        else if (t.alpha_power == 2) c = c * alpha * alpha;
        else if (t.alpha_power == -1) c = c * alpha.inverse();
        m.at(t.index, j) += c;
    }
}

constexpr bool needs_alpha(int k)
{
    switch (k) {
    case 1: case 2: case 3: case 4: case 5: case 6: case 7: case 8:
    case 10: case 12: case 13: case 15: case 16:
        return true;
    default:
        return false;
    }
}

constexpr bool alpha_nonzero(int k) { return k == 7 || k == 12 || k == 13; }

} // namespace

Morphism example_morphism(const Field& f, int k, std::optional<Scalar> alpha)
{
    if (k < 1 || k > 18)
        throw std::invalid_argument("family index must be 1..18");
    if (k == 14)
        throw std::invalid_argument(
            "family 14 is underdetermined; use complete_involution_14");
    if (needs_alpha(k) && !alpha)
        throw std::invalid_argument("family " + std::to_string(k) + " needs a parameter");
    if (!needs_alpha(k) && alpha)
        throw std::invalid_argument("family " + std::to_string(k) + " takes no parameter");
    const Scalar a = alpha ? *alpha : zero(f);
    if (alpha_nonzero(k) && a.is_zero())
        throw std::invalid_argument("family " + std::to_string(k) + " needs a nonzero parameter");

    LinearMap m = LinearMap::identity(f);
    switch (k) {
    case 1:
        set_column(m, VE11, a, {{VE11, 1, 0}, {VE12, 1, 1}});
        set_column(m, VE21, a, {{VE21, 1, 0}, {VE22, 1, 1}});
        break;
    case 2:
    case 16:
        set_column(m, E11, a, {{E11, 1, 0}, {VE22, 1, 1}});
        set_column(m, E12, a, {{E12, 1, 0}, {VE12, 1, 1}});
        set_column(m, E22, a, {{E22, 1, 0}, {VE22, -1, 1}});
        set_column(m, VE11, a, {{VE11, 1, 0}, {E11, -1, 1}, {E22, 1, 1}, {VE22, -1, 2}});
        set_column(m, VE21, a, {{VE21, 1, 0}, {E21, 1, 1}});
        break;
    case 3:
        set_column(m, E21, a, {{E21, 1, 0}, {VE12, 1, 1}});
        set_column(m, VE21, a, {{VE21, 1, 0}, {E12, 1, 1}});
        break;
    case 4:
        set_column(m, E21, a, {{E21, 1, 0}, {VE11, 1, 1}});
        set_column(m, VE22, a, {{VE22, 1, 0}, {E12, -1, 1}});
        break;
    case 5:
        set_column(m, E11, a, {{E11, 1, 0}, {VE12, -1, 1}});
        set_column(m, E21, a, {{E21, 1, 0}, {VE22, 1, 1}});
        set_column(m, E22, a, {{E22, 1, 0}, {VE12, 1, 1}});
        set_column(m, VE11, a, {{VE11, 1, 0}, {E12, -1, 1}});
        set_column(m, VE21, a, {{VE21, 1, 0}, {E11, -1, 1}, {E22, 1, 1}, {VE12, 1, 2}});
        break;
    case 6:
        set_column(m, E11, a, {{E11, 1, 0}, {E12, 1, 1}});
        set_column(m, E21, a, {{E21, 1, 0}, {E11, -1, 1}, {E22, 1, 1}, {E12, -1, 2}});
        set_column(m, E22, a, {{E22, 1, 0}, {E12, -1, 1}});
        set_column(m, VE21, a, {{VE21, 1, 0}, {VE11, -1, 1}});
        set_column(m, VE22, a, {{VE22, 1, 0}, {VE12, -1, 1}});
        break;
    case 7:
        set_column(m, VE11, a, {{VE11, 1, 1}});
        set_column(m, VE21, a, {{VE21, 1, 1}});
        set_column(m, VE22, a, {{VE22, 1, -1}});
        set_column(m, VE12, a, {{VE12, 1, -1}});
        break;
    case 8:
        set_column(m, E12, a, {{E12, 1, 0}, {VE22, -1, 1}});
        set_column(m, VE11, a, {{VE11, 1, 0}, {E21, 1, 1}});
        break;
    case 9:
        set_column(m, VE12, a, {{VE11, -1, 0}});
        set_column(m, VE11, a, {{VE12, 1, 0}});
        set_column(m, VE21, a, {{VE22, 1, 0}});
        set_column(m, VE22, a, {{VE21, -1, 0}});
        break;
    case 10:
        set_column(m, E12, a, {{E12, 1, 0}, {VE21, 1, 1}});
        set_column(m, VE12, a, {{VE12, 1, 0}, {E21, 1, 1}});
        break;
    case 11:
        set_column(m, E12, a, {{E21, 1, 0}});
        set_column(m, E21, a, {{E12, 1, 0}});
        set_column(m, VE11, a, {{VE21, -1, 0}});
        set_column(m, VE12, a, {{VE22, -1, 0}});
        set_column(m, VE21, a, {{VE11, 1, 0}});
        set_column(m, VE22, a, {{VE12, 1, 0}});
        break;
    case 12:
        set_column(m, E12, a, {{E12, 1, 1}});
        set_column(m, VE11, a, {{VE11, 1, 1}});
        set_column(m, E21, a, {{E21, 1, -1}});
        set_column(m, VE22, a, {{VE22, 1, -1}});
        break;
    case 13:
        set_column(m, E12, a, {{E12, 1, 1}});
        set_column(m, VE12, a, {{VE12, 1, 1}});
        set_column(m, E21, a, {{E21, 1, -1}});
        set_column(m, VE21, a, {{VE21, 1, -1}});
        break;
    case 15:
        set_column(m, VE12, a, {{VE12, 1, 0}, {VE11, 1, 1}});
        set_column(m, VE22, a, {{VE22, 1, 0}, {VE21, 1, 1}});
        break;
    case 17:
        set_column(m, E11, a, {{E21, 1, 0}, {E22, 1, 0}, {VE12, 1, 0}});
        set_column(m, E12, a, {{E11, -1, 0}, {E12, -1, 0}, {E21, 1, 0}, {E22, 1, 0}, {VE12, 1, 0}});
        set_column(m, E21, a, {{E21, -1, 0}, {VE22, -1, 0}});
        set_column(m, E22, a, {{E11, 1, 0}, {E21, -1, 0}, {VE12, -1, 0}});
        set_column(m, VE11, a, {{E12, -1, 0}, {VE11, 1, 0}, {VE21, -1, 0}});
        set_column(m, VE12, a, {{VE12, 1, 0}, {VE22, -1, 0}});
        set_column(m, VE21, a, {{E11, -1, 0}, {E21, 1, 0}, {E22, 1, 0}, {VE12, 1, 0}, {VE21, 1, 0}});
        set_column(m, VE22, a, {{VE22, 1, 0}});
        break;
    case 18:
        set_column(m, E11, a, {{E11, 1, 0}, {VE12, 1, 0}});
        set_column(m, E21, a, {{E21, 1, 0}, {VE22, -1, 0}});
        set_column(m, E22, a, {{E22, 1, 0}, {VE12, -1, 0}});
        set_column(m, VE11, a, {{VE11, 1, 0}, {E12, 1, 0}, {VE12, 1, 0}});
        set_column(m, VE12, a, {{E12, -1, 0}, {VE11, -1, 0}});
        set_column(m, VE21, a, {{VE21, 1, 0}, {E11, 1, 0}, {E22, -1, 0}, {VE12, 1, 0}, {VE22, 1, 0}});
        set_column(m, VE22, a, {{E11, -1, 0}, {E22, 1, 0}, {VE12, -1, 0}, {VE21, -1, 0}});
        break;
    }

    const MorphKind kind = (k == 11 || k == 17) ? MorphKind::Anti : MorphKind::Auto;
    const bool ok = kind == MorphKind::Auto ? is_automorphism(m) : is_antiautomorphism(m);
    if (!ok)
        throw std::logic_error("family " + std::to_string(k) + " failed verification over " + f.tag());

    Morphism result{m, kind, {}, "family-" + std::to_string(k)};
    if (alpha) result.params.push_back(a);
    return result;
}

Morphism canonical_involution(const Field& f)
{
    std::array<Octonion, 8> cols{Octonion(f), Octonion(f), Octonion(f), Octonion(f),
                                 Octonion(f), Octonion(f), Octonion(f), Octonion(f)};
    for (int j = 0; j < 8; ++j) cols[j] = conjugate(Octonion::basis(f, j));
    LinearMap m = LinearMap::from_columns(f, cols);
    if (!is_antiautomorphism(m))
        throw std::logic_error("canonical involution failed verification");
    return {m, MorphKind::Anti, {}, "canonical involution"};
}

Morphism compose(const Morphism& a, const Morphism& b)
{
    const MorphKind kind = a.kind == b.kind ? MorphKind::Auto : MorphKind::Anti;
    return {a.map * b.map, kind, {}, "composed"};
}

namespace {

// next coordinate vector in odometer order (last coordinate fastest);
// returns false after the all-max vector wrapped to zero
bool odometer(std::array<std::int64_t, 8>& digits, std::int64_t p)
{
    for (int i = 7; i >= 0; --i) {
        if (++digits[i] < p) return true;
        digits[i] = 0;
    }
    return false;
}

Octonion from_digits(const Field& f, const std::array<std::int64_t, 8>& digits)
{
    Octonion x(f);
    for (int i = 0; i < 8; ++i) x[i] = Scalar(f, digits[i]);
    return x;
}

} // namespace

std::vector<Morphism> complete_involution_14(const Field& f, std::uint64_t cap)
{
    if (!f.is_finite()) throw std::domain_error("completion search needs a finite field");
    const std::int64_t p = f.modulus();
    std::uint64_t column_space = 1;
    for (int i = 0; i < 8; ++i) {
        if (column_space > cap / static_cast<std::uint64_t>(p))
            throw std::runtime_error("field too large for the completion search cap " +
                                     std::to_string(cap));
        column_space *= static_cast<std::uint64_t>(p);
    }

    LinearMap base(f);
    auto set_basis_image = [&](int from, int to) { base.at(to, from) = one(f); };
    set_basis_image(E11, E22);
    set_basis_image(E12, VE22);
    set_basis_image(E21, VE11);
    set_basis_image(E22, E11);
    // forced by squaring to the identity
    set_basis_image(VE11, E21);
    set_basis_image(VE22, E12);

    // partial multiplicativity check on pairs whose images and whose product
    // image are already determined by the forced columns plus column ve12
    auto partial_ok = [&](const LinearMap& m, bool reversed) {
        const auto& tbl = structure_table();
        for (int i = 0; i < 8; ++i) {
            if (i == VE21) continue;
            const Octonion mi = m.column(i);
            for (int j = 0; j < 8; ++j) {
                if (j == VE21) continue;
                const StructEntry e = tbl[i][j];
                if (e.sign != 0 && e.index == VE21) continue;
                const Octonion mj = m.column(j);
                const Octonion lhs = reversed ? mj * mi : mi * mj;
                Octonion rhs(f);
                if (e.sign != 0) {
                    rhs = m.column(e.index);
                    if (e.sign < 0) rhs = -rhs;
                }
                if (lhs != rhs) return false;
            }
        }
        return true;
    };

    std::vector<Morphism> found;
    std::array<std::int64_t, 8> udig{};
    do {
        const Octonion u = from_digits(f, udig);
        LinearMap m = base;
        for (int i = 0; i < 8; ++i) m.at(i, VE12) = u[i];

        // involution constraint on ve12 when phi(u) avoids the open column
        bool u_feasible = u[VE21].is_zero()
            ? m.apply(u) == Octonion::basis(f, VE12)
            : true;
        if (!u_feasible) continue;
        const bool auto_ok = partial_ok(m, false);
        const bool anti_ok = partial_ok(m, true);
        if (!auto_ok && !anti_ok) continue;

        std::array<std::int64_t, 8> wdig{};
        do {
            LinearMap full = m;
            for (int i = 0; i < 8; ++i) full.at(i, VE21) = Scalar(f, wdig[i]);
            if (!(full * full == LinearMap::identity(f))) continue;
            if (auto_ok && is_automorphism(full))
                found.push_back({full, MorphKind::Auto, {}, "completion-14"});
            else if (anti_ok && is_antiautomorphism(full))
                found.push_back({full, MorphKind::Anti, {}, "completion-14"});
        } while (odometer(wdig, p));
    } while (odometer(udig, p));
    return found;
}

std::vector<Morphism> all_example_morphisms(const Field& f)
{
    if (!f.is_finite())
        throw std::domain_error("morphism sweep needs a finite field");
    std::vector<Morphism> out;
    for (int k = 1; k <= 18; ++k) {
        if (k == 14) continue;
        if (!needs_alpha(k)) {
            out.push_back(example_morphism(f, k));
            continue;
        }
        for (const Scalar& a : enumerate_field(f)) {
            if (alpha_nonzero(k) && a.is_zero()) continue;
            out.push_back(example_morphism(f, k, a));
        }
    }
    out.push_back(canonical_involution(f));
    return out;
}

} // namespace splitoct
