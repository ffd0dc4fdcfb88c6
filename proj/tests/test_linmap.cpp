#include <doctest.h>

#include <algorithm>
#include <random>

#include "splitoct/linmap.hpp"
#include "splitoct/morphisms.hpp"
#include "splitoct/rota_baxter.hpp"

using namespace splitoct;

namespace {

LinearMap rand_map(const Field& f, std::mt19937_64& rng)
{
    LinearMap m(f);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            m.at(i, j) = Scalar(f, static_cast<std::int64_t>(rng() % f.modulus()));
    return m;
}

// determinant by plain Gaussian elimination; used only as an oracle against
// the Berkowitz characteristic polynomial
Scalar det_oracle(const LinearMap& m)
{
    const Field f = m.field();
    std::array<std::array<Scalar, 8>, 8> a;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) a[i][j] = m.at(i, j);
    Scalar det = one(f);
    for (int col = 0; col < 8; ++col) {
        int sel = col;
        while (sel < 8 && a[sel][col].is_zero()) ++sel;
        if (sel == 8) return zero(f);
        if (sel != col) {
            std::swap(a[sel], a[col]);
            det = -det;
        }
        det = det * a[col][col];
        const Scalar inv = a[col][col].inverse();
        for (int i = col + 1; i < 8; ++i) {
            const Scalar fmul = a[i][col] * inv;
            for (int j = col; j < 8; ++j) a[i][j] -= fmul * a[col][j];
        }
    }
    return det;
}

} // namespace

TEST_CASE("kernel and image basics")
{
    const Field q = Field::rationals();
    CHECK(LinearMap::identity(q).kernel().dim() == 0);
    CHECK(LinearMap(q).kernel().dim() == 8);
    CHECK(LinearMap::identity(q).image() == Subspace::full(q));

    const LinearMap m1 = r1(q).map;
    Subspace k = m1.kernel();
    CHECK(k.dim() == 4);
    std::vector<Octonion> expect;
    for (int i : {E11, E12, VE11, VE12}) expect.push_back(Octonion::basis(q, i));
    CHECK(k == Subspace(q, expect));
    CHECK(m1.image().dim() == 4);
    CHECK(r2(q).map.image().dim() == 5);
}

TEST_CASE("inverse")
{
    const Field q = Field::rationals();
    CHECK(LinearMap::identity(q).inverse() == LinearMap::identity(q));
    const Scalar a = Scalar(q, 7);
    const LinearMap m7 = example_morphism(q, 7, a).map;
    CHECK(m7.inverse() == example_morphism(q, 7, a.inverse()).map);
    CHECK_THROWS_AS(r1(q).map.inverse(), std::domain_error);
}

TEST_CASE("subspace operations")
{
    const Field q = Field::rationals();
    auto span = [&](std::initializer_list<int> idx) {
        std::vector<Octonion> v;
        for (int i : idx) v.push_back(Octonion::basis(q, i));
        return Subspace(q, v);
    };
    CHECK(span({E11}).sum(span({E22})).dim() == 2);
    CHECK(span({E11, E12}).intersection(span({E12, E21})) == span({E12}));
    const Subspace v = span({E11, VE21});
    CHECK(v.sum(v) == v);
    CHECK(v.contains(Octonion::basis(q, E11) - Octonion::basis(q, VE21).scaled(Scalar(q, 3))));
    CHECK(!v.contains(Octonion::basis(q, E12)));
}

TEST_CASE("rank-nullity on random matrices")
{
    const Field f5 = Field::prime(5);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 1000; ++t) {
        const LinearMap m = rand_map(f5, rng);
        CHECK(m.rank() + m.kernel().dim() == 8);
    }
}

TEST_CASE("rref canonical form is order independent")
{
    const Field f5 = Field::prime(5);
    std::mt19937_64 rng(12);
    for (int t = 0; t < 100; ++t) {
        std::vector<Octonion> gens;
        const int n = 2 + static_cast<int>(rng() % 5);
        for (int i = 0; i < n; ++i) {
            Octonion v(f5);
            for (int j = 0; j < 8; ++j) v[j] = Scalar(f5, static_cast<std::int64_t>(rng() % 5));
            gens.push_back(v);
        }
        const Subspace s1(f5, gens);
        std::shuffle(gens.begin(), gens.end(), rng);
        // also rescale a generator; the span is unchanged
        gens[0] = gens[0].scaled(Scalar(f5, 3));
        const Subspace s2(f5, gens);
        CHECK(s1 == s2);
    }
}

TEST_CASE("inverse is an involution on random invertible maps")
{
    const Field f5 = Field::prime(5);
    std::mt19937_64 rng(13);
    int done = 0;
    while (done < 50) {
        const LinearMap m = rand_map(f5, rng);
        if (m.rank() != 8) continue;
        ++done;
        CHECK(m.inverse().inverse() == m);
        CHECK(m * m.inverse() == LinearMap::identity(f5));
        CHECK(m.inverse() * m == LinearMap::identity(f5));
    }
}

TEST_CASE("dimension formula for sums and intersections")
{
    const Field f3 = Field::prime(3);
    std::mt19937_64 rng(14);
    for (int t = 0; t < 200; ++t) {
        auto rand_space = [&] {
            std::vector<Octonion> gens;
            const int n = 1 + static_cast<int>(rng() % 5);
            for (int i = 0; i < n; ++i) {
                Octonion v(f3);
                for (int j = 0; j < 8; ++j) v[j] = Scalar(f3, static_cast<std::int64_t>(rng() % 3));
                gens.push_back(v);
            }
            return Subspace(f3, gens);
        };
        const Subspace v = rand_space(), w = rand_space();
        CHECK(v.dim() + w.dim() == v.sum(w).dim() + v.intersection(w).dim());
        CHECK(v.sum(w).contains(v.basis().empty() ? Octonion(f3) : v.basis()[0]));
    }
}

TEST_CASE("characteristic polynomial against determinant oracle")
{
    const Field q = Field::rationals();
    std::mt19937_64 rng(15);
    for (int t = 0; t < 20; ++t) {
        LinearMap m(q);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                m.at(i, j) = Scalar(q, static_cast<std::int64_t>(rng() % 11) - 5);
        const auto coeff = m.char_poly();
        CHECK(coeff[8].is_one());
        // det(cI - M) must equal the polynomial at 9 sample points
        for (int c = 0; c <= 8; ++c) {
            const LinearMap shifted = LinearMap::scalar(q, Scalar(q, c)) - m;
            Scalar value = zero(q), power = one(q);
            for (int k = 0; k <= 8; ++k) {
                value += coeff[k] * power;
                power = power * Scalar(q, c);
            }
            CHECK(value == det_oracle(shifted));
        }
    }
}

TEST_CASE("gram matrix of the bilinear form is invertible away from char 2")
{
    for (const Field& f : {Field::rationals(), Field::prime(3), Field::prime(5)}) {
        LinearMap gram(f);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                gram.at(i, j) = bilinear_form(Octonion::basis(f, i), Octonion::basis(f, j));
        CHECK(gram.rank() == 8);
    }
    // in characteristic 2 the polarization degenerates: f(x, x) = 2 n(x) = 0
    const Field f2 = Field::prime(2);
    for (int i = 0; i < 8; ++i)
        CHECK(bilinear_form(Octonion::basis(f2, i), Octonion::basis(f2, i)).is_zero());
}

TEST_CASE("characteristic polynomial of known operators")
{
    const Field q = Field::rationals();
    // identity: (x - 1)^8
    const auto id_coeff = LinearMap::identity(q).char_poly();
    const int binom[9] = {1, 8, 28, 56, 70, 56, 28, 8, 1};
    for (int k = 0; k <= 8; ++k) {
        const int sign = ((8 - k) % 2 == 0) ? 1 : -1;
        CHECK(id_coeff[k] == Scalar(q, sign * binom[k]));
    }
    // r1 acts as -1 on three basis vectors, nilpotently on e22 -> e11 -> 0,
    // and as 0 elsewhere: x^5 (x+1)^3
    const auto r1_coeff = r1(q).map.char_poly();
    const int expect[9] = {0, 0, 0, 0, 0, 1, 3, 3, 1};
    for (int k = 0; k <= 8; ++k) CHECK(r1_coeff[k] == Scalar(q, expect[k]));
}
