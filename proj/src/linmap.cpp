#include "splitoct/linmap.hpp"

#include <algorithm>

namespace splitoct {

namespace {

using Row = std::vector<Scalar>;

// in-place reduced row echelon form with deterministic leftmost pivots;
// returns pivot columns
std::vector<int> rref(std::vector<Row>& rows, int width, const Field& f)
{
    std::vector<int> pivots;
    std::size_t r = 0;
    for (int c = 0; c < width && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        Scalar inv = rows[r][c].inverse();
        for (int k = c; k < width; ++k) rows[r][k] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            Scalar factor = rows[i][c];
            for (int k = c; k < width; ++k) rows[i][k] -= factor * rows[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r, Row(width, zero(f)));
    return pivots;
}

} // namespace

LinearMap::LinearMap(const Field& f) : field_(f)
{
    for (auto& row : e_) row.fill(zero(f));
}

LinearMap LinearMap::identity(const Field& f)
{
    LinearMap m(f);
    for (int i = 0; i < 8; ++i) m.e_[i][i] = one(f);
    return m;
}

LinearMap LinearMap::scalar(const Field& f, const Scalar& c)
{
    LinearMap m(f);
    for (int i = 0; i < 8; ++i) m.e_[i][i] = c;
    return m;
}

LinearMap LinearMap::from_columns(const Field& f, const std::array<Octonion, 8>& cols)
{
    LinearMap m(f);
    for (int j = 0; j < 8; ++j) {
        if (cols[j].field() != f) throw std::invalid_argument("field mismatch in columns");
        for (int i = 0; i < 8; ++i) m.e_[i][j] = cols[j][i];
    }
    return m;
}

Octonion LinearMap::column(int j) const
{
    Octonion x(field_);
    for (int i = 0; i < 8; ++i) x[i] = e_[i][j];
    return x;
}

Octonion LinearMap::apply(const Octonion& x) const
{
    if (x.field() != field_) throw std::invalid_argument("field mismatch in apply");
    Octonion y(field_);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            if (!e_[i][j].is_zero() && !x[j].is_zero())
                y[i] += e_[i][j] * x[j];
    return y;
}

LinearMap LinearMap::operator+(const LinearMap& o) const
{
    LinearMap r(field_);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) r.e_[i][j] = e_[i][j] + o.e_[i][j];
    return r;
}

LinearMap LinearMap::operator-(const LinearMap& o) const
{
    LinearMap r(field_);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) r.e_[i][j] = e_[i][j] - o.e_[i][j];
    return r;
}

LinearMap LinearMap::operator-() const
{
    LinearMap r(field_);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) r.e_[i][j] = -e_[i][j];
    return r;
}

LinearMap LinearMap::operator*(const LinearMap& o) const
{
    if (field_ != o.field_) throw std::invalid_argument("field mismatch in compose");
    LinearMap r(field_);
    for (int i = 0; i < 8; ++i)
        for (int k = 0; k < 8; ++k) {
            if (e_[i][k].is_zero()) continue;
            for (int j = 0; j < 8; ++j)
                if (!o.e_[k][j].is_zero()) r.e_[i][j] += e_[i][k] * o.e_[k][j];
        }
    return r;
}

LinearMap LinearMap::scaled(const Scalar& c) const
{
    LinearMap r(field_);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) r.e_[i][j] = e_[i][j] * c;
    return r;
}

LinearMap LinearMap::pow(int k) const
{
    LinearMap acc = identity(field_);
    for (int i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

bool LinearMap::operator==(const LinearMap& o) const
{
    if (field_ != o.field_) return false;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            if (e_[i][j] != o.e_[i][j]) return false;
    return true;
}

bool LinearMap::is_zero() const
{
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            if (!e_[i][j].is_zero()) return false;
    return true;
}

int LinearMap::rank() const
{
    std::vector<Row> rows;
    for (int i = 0; i < 8; ++i) rows.emplace_back(e_[i].begin(), e_[i].end());
    return static_cast<int>(rref(rows, 8, field_).size());
}

LinearMap LinearMap::inverse() const
{
    // Gauss-Jordan on [M | I]
    std::vector<Row> rows;
    for (int i = 0; i < 8; ++i) {
        Row row(16, zero(field_));
        for (int j = 0; j < 8; ++j) row[j] = e_[i][j];
        row[8 + i] = one(field_);
        rows.push_back(std::move(row));
    }
    auto pivots = rref(rows, 16, field_);
    if (pivots.size() < 8 || pivots[7] != 7)
        throw std::domain_error("singular matrix");
    LinearMap inv(field_);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) inv.e_[i][j] = rows[i][8 + j];
    return inv;
}

Subspace LinearMap::kernel() const
{
    std::vector<Row> rows;
    for (int i = 0; i < 8; ++i) rows.emplace_back(e_[i].begin(), e_[i].end());
    auto pivots = rref(rows, 8, field_);
    std::vector<Octonion> basis;
    for (int c = 0; c < 8; ++c) {
        if (std::find(pivots.begin(), pivots.end(), c) != pivots.end()) continue;
        Octonion v(field_);
        v[c] = one(field_);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -rows[r][c];
        basis.push_back(std::move(v));
    }
    return Subspace(field_, basis);
}

Subspace LinearMap::image() const
{
    std::vector<Octonion> cols;
    for (int j = 0; j < 8; ++j) cols.push_back(column(j));
    return Subspace(field_, cols);
}

std::array<Scalar, 9> LinearMap::char_poly() const
{
    // Berkowitz: iteratively build the coefficient vector of the leading
    // principal minors via Toeplitz products; no divisions required.
    const Scalar zf = zero(field_);
    std::vector<Scalar> coeff{one(field_)};                 // 1x0 case: det(xI - []) = 1
    for (int n = 1; n <= 8; ++n) {
        // data of the n-th leading block: M = top-left (n-1)x(n-1),
        // row r (below), column s (right), corner a = e_[n-1][n-1]
        const int m = n - 1;
        // powers of M applied to s, dotted with r
        std::vector<Scalar> q(m >= 1 ? m : 0, zf);          // q[k] = r * M^k * s
        if (m >= 1) {
            std::vector<Scalar> v(m, zf);
            for (int i = 0; i < m; ++i) v[i] = e_[i][m];    // s
            for (int k = 0; k < m; ++k) {
                Scalar dot = zf;
                for (int i = 0; i < m; ++i) dot += e_[m][i] * v[i];
                q[k] = dot;
                if (k + 1 < m) {
                    std::vector<Scalar> nv(m, zf);
                    for (int i = 0; i < m; ++i)
                        for (int j = 0; j < m; ++j) nv[i] += e_[i][j] * v[j];
                    v = std::move(nv);
                }
            }
        }
        // Toeplitz column: (1, -a, -q0, -q1, ...)
        std::vector<Scalar> col(n + 1, zf);
        col[0] = one(field_);
        col[1] = -e_[m][m];
        for (int k = 0; k < m; ++k) col[k + 2] = -q[k];
        // new coefficients = Toeplitz(col) * coeff
        std::vector<Scalar> next(n + 1, zf);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= std::min<int>(i, n - 1); ++j)
                if (i - j <= n) next[i] += col[i - j] * coeff[j];
        coeff = std::move(next);
    }
    // coeff[i] multiplies x^(8-i); repack lowest-degree-first
    std::array<Scalar, 9> out{zf, zf, zf, zf, zf, zf, zf, zf, zf};
    for (int i = 0; i <= 8; ++i) out[8 - i] = coeff[i];
    return out;
}

Subspace::Subspace(const Field& f) : field_(f) {}

Subspace::Subspace(const Field& f, const std::vector<Octonion>& spanning) : field_(f)
{
    std::vector<Row> rows;
    for (const Octonion& v : spanning) {
        if (v.field() != f) throw std::invalid_argument("field mismatch in subspace basis");
        rows.emplace_back(v.coords().begin(), v.coords().end());
    }
    pivots_ = rref(rows, 8, f);
    for (const Row& row : rows) {
        Octonion v(f);
        for (int i = 0; i < 8; ++i) v[i] = row[i];
        rows_.push_back(std::move(v));
    }
}

Subspace Subspace::full(const Field& f)
{
    std::vector<Octonion> all;
    for (int i = 0; i < 8; ++i) all.push_back(Octonion::basis(f, i));
    return Subspace(f, all);
}

std::optional<std::vector<Scalar>> Subspace::coordinates(const Octonion& x) const
{
    Octonion rem = x;
    std::vector<Scalar> coeffs;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Scalar c = rem[pivots_[r]];
        coeffs.push_back(c);
        if (!c.is_zero()) rem = rem - rows_[r].scaled(c);
    }
    if (!rem.is_zero()) return std::nullopt;
    return coeffs;
}

bool Subspace::contains(const Octonion& x) const
{
    return coordinates(x).has_value();
}

Subspace Subspace::sum(const Subspace& o) const
{
    if (field_ != o.field_) throw std::invalid_argument("field mismatch in subspace sum");
    std::vector<Octonion> all = rows_;
    all.insert(all.end(), o.rows_.begin(), o.rows_.end());
    return Subspace(field_, all);
}

Subspace Subspace::intersection(const Subspace& o) const
{
    if (field_ != o.field_) throw std::invalid_argument("field mismatch in subspace intersection");
    // Zassenhaus: rref of [V|V; W|0] -- rows with zero left half carry the
    // intersection in their right half
    std::vector<Row> rows;
    for (const Octonion& v : rows_) {
        Row row(16, zero(field_));
        for (int i = 0; i < 8; ++i) row[i] = row[8 + i] = v[i];
        rows.push_back(std::move(row));
    }
    for (const Octonion& w : o.rows_) {
        Row row(16, zero(field_));
        for (int i = 0; i < 8; ++i) row[i] = w[i];
        rows.push_back(std::move(row));
    }
    rref(rows, 16, field_);
    std::vector<Octonion> basis;
    for (const Row& row : rows) {
        bool left_zero = true;
        for (int i = 0; i < 8 && left_zero; ++i) left_zero = row[i].is_zero();
        if (!left_zero) continue;
        Octonion v(field_);
        for (int i = 0; i < 8; ++i) v[i] = row[8 + i];
        if (!v.is_zero()) basis.push_back(std::move(v));
    }
    return Subspace(field_, basis);
}

bool Subspace::operator==(const Subspace& o) const
{
    if (field_ != o.field_ || rows_.size() != o.rows_.size()) return false;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i] != o.rows_[i]) return false;
    return true;
}

} // namespace splitoct
