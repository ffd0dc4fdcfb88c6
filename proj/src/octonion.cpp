#include "splitoct/octonion.hpp"

#include <sstream>

namespace splitoct {

const char* const kBasisNames[8] = {
    "e11", "e12", "e21", "e22", "ve11", "ve12", "ve21", "ve22",
};

namespace {

// Small integer 2x2 matrices, enough to generate the structure constants.
struct M2 {
    int a, b, c, d; // [[a,b],[c,d]]
};

M2 mul(const M2& x, const M2& y)
{
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

M2 bar(const M2& x) { return {x.d, -x.b, -x.c, x.a}; }

M2 add(const M2& x, const M2& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }

// basis index -> (v-half flag, matrix unit)
M2 unit_of(int i)
{
    M2 m{0, 0, 0, 0};
    switch (i % 4) {
    case 0: m.a = 1; break;
    case 1: m.b = 1; break;
    case 2: m.c = 1; break;
    case 3: m.d = 1; break;
    }
    return m;
}

std::array<std::array<StructEntry, 8>, 8> build_table()
{
    std::array<std::array<StructEntry, 8>, 8> t{};
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            // x = a + vc, y = b + vd with exactly one nonzero matrix unit each;
            // x*y = (ab + d cbar) + v(abar d + b c)
            M2 a{0, 0, 0, 0}, c{0, 0, 0, 0}, b{0, 0, 0, 0}, d{0, 0, 0, 0};
            (i < 4 ? a : c) = unit_of(i);
            (j < 4 ? b : d) = unit_of(j);
            M2 mat = add(mul(a, b), mul(d, bar(c)));
            M2 vee = add(mul(bar(a), d), mul(b, c));
            int coords[8] = {mat.a, mat.b, mat.c, mat.d, vee.a, vee.b, vee.c, vee.d};
            StructEntry e{0, 0};
            for (int k = 0; k < 8; ++k) {
                if (coords[k] == 0) continue;
                if (e.sign != 0 || (coords[k] != 1 && coords[k] != -1))
                    throw std::logic_error("structure table is not monomial");
                e.sign = static_cast<std::int8_t>(coords[k]);
                e.index = static_cast<std::int8_t>(k);
            }
            t[i][j] = e;
        }
    }
    return t;
}

} // namespace

const std::array<std::array<StructEntry, 8>, 8>& structure_table()
{
    static const auto table = build_table();
    return table;
}

Octonion::Octonion(const Field& f)
    : field_(f),
      coords_{zero(f), zero(f), zero(f), zero(f), zero(f), zero(f), zero(f), zero(f)}
{
}

Octonion::Octonion(const Field& f, std::array<Scalar, 8> coords)
    : field_(f), coords_(std::move(coords))
{
    for (const Scalar& c : coords_)
        if (c.modulus() != f.modulus())
            throw std::invalid_argument("field mismatch in octonion coordinates");
}

Octonion Octonion::basis(const Field& f, int i)
{
    Octonion x(f);
    x.coords_[i] = one(f);
    return x;
}

Octonion Octonion::unit(const Field& f)
{
    Octonion x(f);
    x.coords_[E11] = one(f);
    x.coords_[E22] = one(f);
    return x;
}

bool Octonion::is_zero() const
{
    for (const Scalar& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

Octonion Octonion::operator+(const Octonion& o) const
{
    Octonion r(field_);
    for (int i = 0; i < 8; ++i) r.coords_[i] = coords_[i] + o.coords_[i];
    return r;
}

Octonion Octonion::operator-(const Octonion& o) const
{
    Octonion r(field_);
    for (int i = 0; i < 8; ++i) r.coords_[i] = coords_[i] - o.coords_[i];
    return r;
}

Octonion Octonion::operator-() const
{
    Octonion r(field_);
    for (int i = 0; i < 8; ++i) r.coords_[i] = -coords_[i];
    return r;
}

Octonion Octonion::scaled(const Scalar& c) const
{
    Octonion r(field_);
    for (int i = 0; i < 8; ++i) r.coords_[i] = coords_[i] * c;
    return r;
}

Octonion Octonion::operator*(const Octonion& o) const
{
    if (field_ != o.field_)
        throw std::invalid_argument("field mismatch in octonion product");
    const auto& tbl = structure_table();
    Octonion r(field_);
    for (int i = 0; i < 8; ++i) {
        if (coords_[i].is_zero()) continue;
        for (int j = 0; j < 8; ++j) {
            if (o.coords_[j].is_zero()) continue;
            const StructEntry e = tbl[i][j];
            if (e.sign == 0) continue;
            Scalar term = coords_[i] * o.coords_[j];
            if (e.sign < 0)
                r.coords_[e.index] -= term;
            else
                r.coords_[e.index] += term;
        }
    }
    return r;
}

bool Octonion::operator==(const Octonion& o) const
{
    if (field_ != o.field_) return false;
    for (int i = 0; i < 8; ++i)
        if (coords_[i] != o.coords_[i]) return false;
    return true;
}

std::string Octonion::str() const
{
    std::ostringstream out;
    for (int i = 0; i < 8; ++i) {
        if (i) out << ",";
        out << coords_[i].str();
    }
    return out.str();
}

Octonion Octonion::parse(const Field& f, const std::string& text)
{
    Octonion x(f);
    std::stringstream in(text);
    std::string part;
    for (int i = 0; i < 8; ++i) {
        if (!std::getline(in, part, ','))
            throw std::invalid_argument("octonion needs 8 coordinates: '" + text + "'");
        x.coords_[i] = Scalar::parse(f, part);
    }
    return x;
}

std::array<Scalar, 4> symplectic_involution_2x2(const std::array<Scalar, 4>& m)
{
    return {m[3], -m[1], -m[2], m[0]};
}

Octonion conjugate(const Octonion& x)
{
    const Field& f = x.field();
    Octonion r(f);
    std::array<Scalar, 4> a{x[E11], x[E12], x[E21], x[E22]};
    auto ab = symplectic_involution_2x2(a);
    r[E11] = ab[0]; r[E12] = ab[1]; r[E21] = ab[2]; r[E22] = ab[3];
    for (int i = 4; i < 8; ++i) r[i] = -x[i];
    return r;
}

Scalar norm(const Octonion& x)
{
    return (x[E11] * x[E22] - x[E12] * x[E21]) - (x[VE11] * x[VE22] - x[VE12] * x[VE21]);
}

Scalar trace(const Octonion& x)
{
    return x[E11] + x[E22];
}

Scalar bilinear_form(const Octonion& x, const Octonion& y)
{
    return norm(x + y) - norm(x) - norm(y);
}

} // namespace splitoct
