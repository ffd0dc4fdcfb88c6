#include "splitoct/field.hpp"

namespace splitoct {

bool is_prime(std::int64_t n)
{
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::int64_t p)
{
    if (!is_prime(p))
        throw std::invalid_argument("field modulus must be prime, got " + std::to_string(p));
    return Field(p);
}

Field Field::parse(const std::string& tag)
{
    if (tag == "Q") return rationals();
    if (tag.rfind("Fp:", 0) == 0) return prime(std::stoll(tag.substr(3)));
    // short aliases used on the command line
    if (tag.size() >= 2 && tag[0] == 'F') return prime(std::stoll(tag.substr(1)));
    throw std::invalid_argument("unknown field tag '" + tag + "' (expected Q, F2, F3, F5 or Fp:<p>)");
}

std::string Field::tag() const
{
    return is_rational() ? "Q" : "Fp:" + std::to_string(modulus_);
}

namespace {

std::int64_t mod_reduce(std::int64_t n, std::int64_t p)
{
    std::int64_t r = n % p;
    return r < 0 ? r + p : r;
}

// extended Euclid; p prime, 0 < a < p
std::int64_t mod_inverse(std::int64_t a, std::int64_t p)
{
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t; new_t = tmp;
        tmp = r - q * new_r;
        r = new_r; new_r = tmp;
    }
    return mod_reduce(t, p);
}

} // namespace

Scalar::Scalar(const Field& f, std::int64_t n)
    : mod_(f.modulus())
{
    if (mod_ == 0)
        v_ = mpq_class(static_cast<long>(n));
    else
        v_ = mod_reduce(n, mod_);
}

Scalar::Scalar(const Field& f, std::int64_t num, std::int64_t den)
    : mod_(f.modulus())
{
    if (den == 0) throw std::domain_error("division by zero");
    if (mod_ == 0) {
        mpq_class q(static_cast<long>(num), static_cast<long>(den));
        q.canonicalize();
        v_ = std::move(q);
    } else {
        std::int64_t d = mod_reduce(den, mod_);
        if (d == 0) throw std::domain_error("division by zero");
        v_ = mod_reduce(num, mod_) * mod_inverse(d, mod_) % mod_;
    }
}

Scalar Scalar::from_rational(const mpq_class& q)
{
    mpq_class c = q;
    c.canonicalize();
    return Scalar(std::move(c));
}

bool Scalar::is_zero() const
{
    return mod_ == 0 ? std::get<mpq_class>(v_) == 0 : std::get<std::int64_t>(v_) == 0;
}

bool Scalar::is_one() const
{
    return mod_ == 0 ? std::get<mpq_class>(v_) == 1 : std::get<std::int64_t>(v_) == 1;
}

std::int64_t Scalar::residue() const
{
    if (mod_ == 0) throw std::logic_error("residue() on a rational scalar");
    return std::get<std::int64_t>(v_);
}

const mpq_class& Scalar::rational() const
{
    if (mod_ != 0) throw std::logic_error("rational() on a prime-field scalar");
    return std::get<mpq_class>(v_);
}

void Scalar::check_same(const Scalar& a, const Scalar& b)
{
    if (a.mod_ != b.mod_)
        throw std::invalid_argument("field mismatch: " + a.field().tag() + " vs " + b.field().tag());
}

Scalar Scalar::operator-() const
{
    if (mod_ == 0) return Scalar(mpq_class(-std::get<mpq_class>(v_)));
    return Scalar(mod_, mod_reduce(-std::get<std::int64_t>(v_), mod_));
}

Scalar Scalar::inverse() const
{
    if (is_zero()) throw std::domain_error("division by zero");
    if (mod_ == 0) return Scalar(mpq_class(1 / std::get<mpq_class>(v_)));
    return Scalar(mod_, mod_inverse(std::get<std::int64_t>(v_), mod_));
}

Scalar operator+(const Scalar& a, const Scalar& b)
{
    Scalar::check_same(a, b);
    if (a.mod_ == 0) return Scalar(mpq_class(std::get<mpq_class>(a.v_) + std::get<mpq_class>(b.v_)));
    return Scalar(a.mod_, (std::get<std::int64_t>(a.v_) + std::get<std::int64_t>(b.v_)) % a.mod_);
}

Scalar operator-(const Scalar& a, const Scalar& b)
{
    Scalar::check_same(a, b);
    if (a.mod_ == 0) return Scalar(mpq_class(std::get<mpq_class>(a.v_) - std::get<mpq_class>(b.v_)));
    std::int64_t r = std::get<std::int64_t>(a.v_) - std::get<std::int64_t>(b.v_);
    return Scalar(a.mod_, r < 0 ? r + a.mod_ : r);
}

Scalar operator*(const Scalar& a, const Scalar& b)
{
    Scalar::check_same(a, b);
    if (a.mod_ == 0) return Scalar(mpq_class(std::get<mpq_class>(a.v_) * std::get<mpq_class>(b.v_)));
    return Scalar(a.mod_, std::get<std::int64_t>(a.v_) * std::get<std::int64_t>(b.v_) % a.mod_);
}

Scalar operator/(const Scalar& a, const Scalar& b)
{
    return a * b.inverse();
}

bool Scalar::operator==(const Scalar& o) const
{
    if (mod_ != o.mod_) return false;
    if (mod_ == 0) return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
    return std::get<std::int64_t>(v_) == std::get<std::int64_t>(o.v_);
}

std::string Scalar::str() const
{
    if (mod_ != 0)
        return std::to_string(std::get<std::int64_t>(v_)) + " mod " + std::to_string(mod_);
    const mpq_class& q = std::get<mpq_class>(v_);
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Scalar Scalar::parse(const Field& f, const std::string& text)
{
    auto fail = [&] { throw std::invalid_argument("bad scalar '" + text + "' for field " + f.tag()); };
    try {
        if (f.is_rational()) {
            auto slash = text.find('/');
            mpq_class q(text.substr(0, slash) +
                        (slash == std::string::npos ? "" : "/" + text.substr(slash + 1)));
            q.canonicalize();
            return from_rational(q);
        }
        auto m = text.find(" mod ");
        std::int64_t k = std::stoll(text.substr(0, m));
        if (m != std::string::npos && std::stoll(text.substr(m + 5)) != f.modulus()) fail();
        return Scalar(f, k);
    } catch (const std::invalid_argument&) {
        fail();
    }
    return Scalar(f, 0); // unreachable
}

std::vector<Scalar> enumerate_field(const Field& f)
{
    if (!f.is_finite()) throw std::domain_error("infinite field");
    std::vector<Scalar> out;
    out.reserve(static_cast<std::size_t>(f.modulus()));
    for (std::int64_t k = 0; k < f.modulus(); ++k)
        out.push_back(Scalar(f, k));
    return out;
}

} // namespace splitoct
