#include "splitoct/rota_baxter.hpp"

namespace splitoct {

RotaBaxterCheck is_rota_baxter(const LinearMap& r, const Scalar& weight)
{
    const Field& f = r.field();
    for (int i = 0; i < 8; ++i) {
        const Octonion x = Octonion::basis(f, i);
        const Octonion rx = r.column(i);
        for (int j = 0; j < 8; ++j) {
            const Octonion y = Octonion::basis(f, j);
            const Octonion ry = r.column(j);
            const Octonion lhs = rx * ry;
            const Octonion arg = rx * y + x * ry + (x * y).scaled(weight);
            if (lhs != r.apply(arg))
                return {false, std::make_pair(i, j)};
        }
    }
    return {true, std::nullopt};
}

bool is_splitting(const LinearMap& r, const Scalar& weight)
{
    if (weight.is_zero()) throw std::domain_error(
        "weight 0 is out of scope here (zero-weight operators form a separate classification)");
    return (r * r + r.scaled(weight)).is_zero();
}

LinearMap phi(const LinearMap& r, const Scalar& weight)
{
    return -r - LinearMap::scalar(r.field(), weight);
}

std::pair<LinearMap, Scalar> scale(const LinearMap& r, const Scalar& mu, const Scalar& weight)
{
    if (mu.is_zero()) throw std::domain_error("scaling factor must be nonzero");
    return {r.scaled(mu), mu * weight};
}

LinearMap from_decomposition(const Subspace& a1, const Subspace& a2, const Scalar& weight)
{
    if (weight.is_zero()) throw std::domain_error(
        "weight 0 is out of scope here (zero-weight operators form a separate classification)");
    if (!is_direct_sum_decomposition(a1, a2))
        throw std::invalid_argument("not a direct-sum decomposition into subalgebras");
    const Field& f = a1.field();
    // columns of P are the a1 basis then the a2 basis; R = P diag(-w,..,0,..) P^-1
    LinearMap p(f);
    int col = 0;
    for (const Octonion& v : a1.basis()) {
        for (int i = 0; i < 8; ++i) p.at(i, col) = v[i];
        ++col;
    }
    for (const Octonion& v : a2.basis()) {
        for (int i = 0; i < 8; ++i) p.at(i, col) = v[i];
        ++col;
    }
    LinearMap d(f);
    for (int i = 0; i < a1.dim(); ++i) d.at(i, i) = -weight;
    return p * d * p.inverse();
}

std::pair<Subspace, Subspace> splitting_parts(const LinearMap& r, const Scalar& weight)
{
    auto check = is_rota_baxter(r, weight);
    if (!check.holds)
        throw std::invalid_argument("not a Rota-Baxter operator at this weight");
    if (!is_splitting(r, weight))
        throw std::invalid_argument("not splitting: R^2 + weight*R != 0");
    Subspace a1 = (r + LinearMap::scalar(r.field(), weight)).kernel();
    Subspace a2 = r.kernel();
    return {a1, a2};
}

LinearMap conjugate_operator(const LinearMap& r, const LinearMap& m)
{
    return m.inverse() * r * m;
}

RotaBaxterCandidate r1(const Field& f)
{
    LinearMap m(f);
    const Scalar minus1 = -one(f);
    m.at(E11, E22) = one(f);       // e22 -> e11
    m.at(E21, E21) = minus1;       // e21 -> -e21
    m.at(VE21, VE21) = minus1;     // ve21 -> -ve21
    m.at(VE22, VE22) = minus1;     // ve22 -> -ve22
    return {m, one(f), Verified::Unchecked};
}

RotaBaxterCandidate r2(const Field& f)
{
    LinearMap m(f);
    const Scalar minus1 = -one(f);
    m.at(E11, E11) = minus1;       // e11 -> -1 = -(e11 + e22)
    m.at(E22, E11) = minus1;
    m.at(E21, E21) = minus1;       // e21 -> -e21
    m.at(E22, E22) = minus1;       // e22 -> -e22
    m.at(VE11, VE11) = minus1;     // ve11 -> -ve11
    m.at(VE21, VE21) = minus1;     // ve21 -> -ve21
    return {m, one(f), Verified::Unchecked};
}

} // namespace splitoct
