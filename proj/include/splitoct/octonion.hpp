#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "splitoct/field.hpp"

namespace splitoct {

// Basis of the split octonions O = M2(F) + v M2(F), in this fixed order
// everywhere (coordinates, matrix rows/columns, file formats):
enum BasisIndex : int {
    E11 = 0, E12 = 1, E21 = 2, E22 = 3,
    VE11 = 4, VE12 = 5, VE21 = 6, VE22 = 7,
};

extern const char* const kBasisNames[8];

// Product of two basis elements is 0 or +-(one basis element); the whole
// multiplication is dispatched through this table.
struct StructEntry {
    std::int8_t sign;   // -1, 0, +1
    std::int8_t index;  // meaningful when sign != 0
};

// table[i][j] describes e_i * e_j
const std::array<std::array<StructEntry, 8>, 8>& structure_table();

class Octonion {
public:
    explicit Octonion(const Field& f);                       // zero
    Octonion(const Field& f, std::array<Scalar, 8> coords);

    static Octonion basis(const Field& f, int i);
    static Octonion unit(const Field& f);                    // e11 + e22

    const Field& field() const { return field_; }
    const Scalar& operator[](int i) const { return coords_[i]; }
    Scalar& operator[](int i) { return coords_[i]; }
    const std::array<Scalar, 8>& coords() const { return coords_; }

    bool is_zero() const;

    Octonion operator+(const Octonion& o) const;
    Octonion operator-(const Octonion& o) const;
    Octonion operator-() const;
    Octonion operator*(const Octonion& o) const;             // algebra product
    Octonion scaled(const Scalar& c) const;

    bool operator==(const Octonion& o) const;
    bool operator!=(const Octonion& o) const { return !(*this == o); }

    // 8 scalars in basis order, comma separated
    std::string str() const;
    static Octonion parse(const Field& f, const std::string& text);

private:
    Field field_;
    std::array<Scalar, 8> coords_;
};

Octonion conjugate(const Octonion& x);      // a + vc  ->  abar - vc
Scalar norm(const Octonion& x);             // det(a) - det(c)
Scalar trace(const Octonion& x);            // tr(a)
Scalar bilinear_form(const Octonion& x, const Octonion& y);  // n(x+y)-n(x)-n(y)

// The symplectic involution [[a,b],[c,d]] -> [[d,-b],[-c,a]] on 2x2 matrices,
// entries in row-major order.
std::array<Scalar, 4> symplectic_involution_2x2(const std::array<Scalar, 4>& m);

} // namespace splitoct
