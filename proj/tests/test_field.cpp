#include <doctest.h>

#include <random>

#include "splitoct/field.hpp"

using namespace splitoct;

TEST_CASE("prime field arithmetic")
{
    const Field f5 = Field::prime(5);
    CHECK(Scalar(f5, 3) + Scalar(f5, 4) == Scalar(f5, 2));
    CHECK(Scalar(f5, 3).inverse() == Scalar(f5, 2));
    CHECK(-Scalar(f5, 1) == Scalar(f5, 4));
    CHECK(Scalar(f5, 2) * Scalar(f5, 4) == Scalar(f5, 3));
    CHECK(Scalar(f5, 4) / Scalar(f5, 2) == Scalar(f5, 2));
    CHECK(Scalar(f5, -7) == Scalar(f5, 3));
}

TEST_CASE("rational arithmetic")
{
    const Field q = Field::rationals();
    CHECK(Scalar(q, 1, 2) + Scalar(q, 1, 3) == Scalar(q, 5, 6));
    CHECK(Scalar(q, 2, 4) == Scalar(q, 1, 2));
    CHECK(Scalar(q, 3).inverse() == Scalar(q, 1, 3));
    CHECK((Scalar(q, 1, 2) - Scalar(q, 1, 2)).is_zero());
}

TEST_CASE("field construction errors")
{
    CHECK_THROWS_AS(Field::prime(4), std::invalid_argument);
    CHECK_THROWS_AS(Field::prime(1), std::invalid_argument);
    CHECK_NOTHROW(Field::prime(7919));
    const Field f5 = Field::prime(5);
    CHECK_THROWS_AS(Scalar(f5, 0).inverse(), std::domain_error);
    CHECK_THROWS_AS(Scalar(f5, 1) / Scalar(f5, 0), std::domain_error);
    const Field q = Field::rationals();
    CHECK_THROWS_AS(Scalar(q, 1) + Scalar(f5, 1), std::invalid_argument);
}

TEST_CASE("field enumeration")
{
    auto f2 = enumerate_field(Field::prime(2));
    REQUIRE(f2.size() == 2);
    CHECK(f2[0].is_zero());
    CHECK(f2[1].is_one());
    auto f3 = enumerate_field(Field::prime(3));
    REQUIRE(f3.size() == 3);
    CHECK(f3[2] == Scalar(Field::prime(3), 2));
    CHECK_THROWS_AS(enumerate_field(Field::rationals()), std::domain_error);
}

TEST_CASE("field axioms on random elements")
{
    std::mt19937_64 rng(20240901);
    for (const Field& f : {Field::prime(5), Field::rationals()}) {
        auto rand_scalar = [&] {
            if (f.is_finite()) return Scalar(f, static_cast<std::int64_t>(rng() % 5));
            return Scalar(f, static_cast<std::int64_t>(rng() % 41) - 20,
                          1 + static_cast<std::int64_t>(rng() % 7));
        };
        for (int t = 0; t < 200; ++t) {
            const Scalar a = rand_scalar(), b = rand_scalar(), c = rand_scalar();
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + (-a)).is_zero());
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        }
    }
}

TEST_CASE("scalar text format")
{
    const Field q = Field::rationals();
    CHECK(Scalar(q, 5, 6).str() == "5/6");
    CHECK(Scalar(q, -4, 6).str() == "-2/3");
    CHECK(Scalar(q, 7).str() == "7");
    CHECK(Scalar::parse(q, "-2/3") == Scalar(q, -2, 3));
    CHECK(Scalar::parse(q, "7") == Scalar(q, 7));

    const Field f5 = Field::prime(5);
    CHECK(Scalar(f5, 3).str() == "3 mod 5");
    CHECK(Scalar::parse(f5, "3 mod 5") == Scalar(f5, 3));
    CHECK(Scalar::parse(f5, "8") == Scalar(f5, 3));
    CHECK_THROWS_AS(Scalar::parse(f5, "3 mod 7"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse(q, "x"), std::invalid_argument);

    CHECK(Field::parse("Q").is_rational());
    CHECK(Field::parse("F2").modulus() == 2);
    CHECK(Field::parse("Fp:11").modulus() == 11);
    CHECK_THROWS_AS(Field::parse("R"), std::invalid_argument);
}
