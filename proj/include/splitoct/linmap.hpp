#pragma once

#include <array>
#include <optional>
#include <vector>

#include "splitoct/octonion.hpp"

namespace splitoct {

class Subspace;

// 8x8 matrix over an exact field; column j is the image of basis vector j.
class LinearMap {
public:
    explicit LinearMap(const Field& f);                      // zero map
    static LinearMap identity(const Field& f);
    static LinearMap from_columns(const Field& f, const std::array<Octonion, 8>& cols);
    static LinearMap scalar(const Field& f, const Scalar& c); // c * id

    const Field& field() const { return field_; }
    const Scalar& at(int row, int col) const { return e_[row][col]; }
    Scalar& at(int row, int col) { return e_[row][col]; }
    Octonion column(int j) const;

    Octonion apply(const Octonion& x) const;

    LinearMap operator+(const LinearMap& o) const;
    LinearMap operator-(const LinearMap& o) const;
    LinearMap operator-() const;
    LinearMap operator*(const LinearMap& o) const;           // composition
    LinearMap scaled(const Scalar& c) const;
    LinearMap pow(int k) const;

    bool operator==(const LinearMap& o) const;
    bool operator!=(const LinearMap& o) const { return !(*this == o); }
    bool is_zero() const;

    int rank() const;
    LinearMap inverse() const;                               // throws std::domain_error if singular
    Subspace kernel() const;
    Subspace image() const;

    // coefficients c[0..8] of det(x*I - M) = sum c[k] x^k, c[8] = 1
    // (Berkowitz, division free, valid over any field)
    std::array<Scalar, 9> char_poly() const;

private:
    Field field_;
    std::array<std::array<Scalar, 8>, 8> e_;
};

// Subspace of the 8-dimensional coordinate space, held as the reduced
// row-echelon basis; two subspaces are equal iff their RREF rows coincide.
class Subspace {
public:
    explicit Subspace(const Field& f);                       // zero subspace
    Subspace(const Field& f, const std::vector<Octonion>& spanning);
    static Subspace full(const Field& f);

    const Field& field() const { return field_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<Octonion>& basis() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const Octonion& x) const;
    // coefficients of x over the RREF basis, or nullopt if x is outside
    std::optional<std::vector<Scalar>> coordinates(const Octonion& x) const;

    Subspace sum(const Subspace& o) const;
    Subspace intersection(const Subspace& o) const;

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    Field field_;
    std::vector<Octonion> rows_;   // RREF, ordered by pivot column
    std::vector<int> pivots_;
};

} // namespace splitoct
