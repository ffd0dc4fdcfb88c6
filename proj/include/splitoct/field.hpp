#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace splitoct {

// Exact ground field: the rationals, or a prime field F_p with p fixed at
// construction. Scalars are self-describing (they carry the modulus), so
// mixing elements of different fields is detected at every operation.
class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime(std::int64_t p);

    // "Q" or "Fp:<p>"
    static Field parse(const std::string& tag);

    bool is_rational() const { return modulus_ == 0; }
    bool is_finite() const { return modulus_ != 0; }
    std::int64_t modulus() const { return modulus_; }          // 0 for Q
    std::int64_t characteristic() const { return modulus_; }   // 0 for Q

    std::string tag() const;

    bool operator==(const Field& o) const { return modulus_ == o.modulus_; }
    bool operator!=(const Field& o) const { return modulus_ != o.modulus_; }

private:
    explicit Field(std::int64_t m) : modulus_(m) {}
    std::int64_t modulus_;
};

class Scalar {
public:
    Scalar() : mod_(0), v_(mpq_class(0)) {}
    Scalar(const Field& f, std::int64_t n);          // n reduced into the field
    Scalar(const Field& f, std::int64_t num, std::int64_t den);
    static Scalar from_rational(const mpq_class& q);

    Field field() const { return mod_ == 0 ? Field::rationals() : Field::prime(mod_); }
    std::int64_t modulus() const { return mod_; }

    bool is_zero() const;
    bool is_one() const;

    // residue in [0, p) for prime fields
    std::int64_t residue() const;
    const mpq_class& rational() const;

    Scalar operator-() const;
    Scalar inverse() const;                          // throws on zero

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // "num/den" (den omitted when 1) for Q, "k mod p" for F_p
    std::string str() const;
    static Scalar parse(const Field& f, const std::string& text);

private:
    Scalar(std::int64_t mod, std::int64_t res) : mod_(mod), v_(res) {}
    explicit Scalar(mpq_class q) : mod_(0), v_(std::move(q)) {}

    static void check_same(const Scalar& a, const Scalar& b);

    std::int64_t mod_;                               // 0 => rational
    std::variant<std::int64_t, mpq_class> v_;
};

inline Scalar zero(const Field& f) { return Scalar(f, 0); }
inline Scalar one(const Field& f) { return Scalar(f, 1); }

bool is_prime(std::int64_t n);

// All elements of a finite field in canonical order 0, 1, ..., p-1.
// Throws std::domain_error for Q.
std::vector<Scalar> enumerate_field(const Field& f);

} // namespace splitoct
