#include <doctest.h>

#include <random>

#include "splitoct/morphisms.hpp"
#include "splitoct/octonion.hpp"

using namespace splitoct;

TEST_CASE("family sweep over small finite fields")
{
    for (const Field& f : {Field::prime(3), Field::prime(5)}) {
        for (int k = 1; k <= 18; ++k) {
            if (k == 14) continue;
            const bool parametric = !(k == 9 || k == 11 || k == 17 || k == 18);
            const bool nonzero = (k == 7 || k == 12 || k == 13);
            std::vector<Morphism> members;
            if (parametric) {
                for (const Scalar& a : enumerate_field(f)) {
                    if (nonzero && a.is_zero()) continue;
                    members.push_back(example_morphism(f, k, a));
                }
            } else {
                members.push_back(example_morphism(f, k));
            }
            for (const Morphism& m : members) {
                if (k == 11 || k == 17) {
                    CHECK(m.kind == MorphKind::Anti);
                    CHECK(is_antiautomorphism(m.map));
                    CHECK(!is_automorphism(m.map));
                } else {
                    CHECK(m.kind == MorphKind::Auto);
                    CHECK(is_automorphism(m.map));
                }
                CHECK(m.map.apply(Octonion::unit(f)) == Octonion::unit(f));
            }
        }
    }
}

TEST_CASE("degenerate parameters")
{
    const Field q = Field::rationals();
    CHECK(example_morphism(q, 1, zero(q)).map == LinearMap::identity(q));
    CHECK_THROWS_AS(example_morphism(q, 7, zero(q)), std::invalid_argument);
    CHECK_THROWS_AS(example_morphism(q, 12, zero(q)), std::invalid_argument);
    CHECK_THROWS_AS(example_morphism(q, 1), std::invalid_argument);   // needs alpha
    CHECK_THROWS_AS(example_morphism(q, 9, one(q)), std::invalid_argument);
    CHECK_THROWS_AS(example_morphism(q, 14), std::invalid_argument);
    CHECK_THROWS_AS(example_morphism(q, 0), std::invalid_argument);
    CHECK_THROWS_AS(example_morphism(q, 19), std::invalid_argument);
}

TEST_CASE("canonical involution")
{
    const Field q = Field::rationals();
    const Morphism c = canonical_involution(q);
    CHECK(c.kind == MorphKind::Anti);
    CHECK(is_antiautomorphism(c.map));
    CHECK(c.map.column(E11) == Octonion::basis(q, E22));
    CHECK(c.map * c.map == LinearMap::identity(q));
    CHECK(c.map.apply(Octonion::unit(q)) == Octonion::unit(q));
}

TEST_CASE("family 9 has order four over the rationals")
{
    const Field q = Field::rationals();
    const LinearMap m = example_morphism(q, 9).map;
    CHECK(m.pow(2) != LinearMap::identity(q));
    CHECK(m.pow(4) == LinearMap::identity(q));
}

TEST_CASE("families 2 and 16 coincide")
{
    const Field f5 = Field::prime(5);
    for (const Scalar& a : enumerate_field(f5))
        CHECK(example_morphism(f5, 2, a).map == example_morphism(f5, 16, a).map);
}

TEST_CASE("parameter composition laws")
{
    const Field f5 = Field::prime(5);
    for (const Scalar& a : enumerate_field(f5)) {
        for (const Scalar& b : enumerate_field(f5)) {
            CHECK(example_morphism(f5, 1, a).map * example_morphism(f5, 1, b).map ==
                  example_morphism(f5, 1, a + b).map);
            if (!a.is_zero() && !b.is_zero())
                CHECK(example_morphism(f5, 7, a).map * example_morphism(f5, 7, b).map ==
                      example_morphism(f5, 7, a * b).map);
        }
    }
}

TEST_CASE("composition parity")
{
    const Field f3 = Field::prime(3);
    const auto pool = all_example_morphisms(f3);
    std::mt19937_64 rng(41);
    for (int t = 0; t < 100; ++t) {
        const Morphism& a = pool[rng() % pool.size()];
        const Morphism& b = pool[rng() % pool.size()];
        const Morphism c = compose(a, b);
        if (c.kind == MorphKind::Auto)
            CHECK(is_automorphism(c.map));
        else
            CHECK(is_antiautomorphism(c.map));
    }
}

TEST_CASE("norm preservation")
{
    const Field f5 = Field::prime(5);
    const auto pool = all_example_morphisms(f5);
    std::mt19937_64 rng(42);
    for (int t = 0; t < 100; ++t) {
        const Morphism& m = pool[rng() % pool.size()];
        Octonion x(f5);
        for (int i = 0; i < 8; ++i) x[i] = Scalar(f5, static_cast<std::int64_t>(rng() % 5));
        CHECK(norm(m.map.apply(x)) == norm(x));
    }
}

TEST_CASE("family 14 completion search")
{
    // the partial data admits exactly one involutive completion over each of
    // these fields: the antiautomorphism fixing ve12 and ve21 (value frozen
    // from the exhaustive search)
    for (const Field& f : {Field::prime(2), Field::prime(3), Field::prime(5)}) {
        const auto found = complete_involution_14(f);
        REQUIRE(found.size() == 1);
        const Morphism& m = found.front();
        CHECK(m.kind == MorphKind::Anti);
        CHECK(m.map * m.map == LinearMap::identity(f));
        CHECK(m.map.apply(Octonion::unit(f)) == Octonion::unit(f));
        CHECK(m.map.column(VE12) == Octonion::basis(f, VE12));
        CHECK(m.map.column(VE21) == Octonion::basis(f, VE21));
        CHECK(m.map.column(E11) == Octonion::basis(f, E22));
        CHECK(m.map.column(E12) == Octonion::basis(f, VE22));
        CHECK(m.map.column(E21) == Octonion::basis(f, VE11));
        CHECK(is_antiautomorphism(m.map));
    }
    CHECK_THROWS_AS(complete_involution_14(Field::prime(2), 10), std::runtime_error);
    CHECK_THROWS_AS(complete_involution_14(Field::rationals()), std::domain_error);
}

TEST_CASE("generator pool composition")
{
    const Field f2 = Field::prime(2);
    const auto pool = all_example_morphisms(f2);
    // 13 parametric families with 2 (or 1 for the nonzero-parameter ones)
    // choices, 4 fixed families, plus the canonical involution
    int antis = 0;
    for (const Morphism& m : pool) antis += m.kind == MorphKind::Anti;
    CHECK(antis == 3);   // families 11, 17 and the canonical involution
    CHECK(pool.size() == 13 * 2 - 3 + 4 + 1);
}
