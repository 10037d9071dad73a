#include "stratkit/numbers.hpp"

namespace stratkit {

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
    // extended Euclid; a nonzero mod p
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw MathError("not invertible mod p");
    return mod_reduce(t, p);
}

std::int64_t rat_mod_p(const Rat& v, std::int64_t p) {
    Int num = boost::multiprecision::numerator(v) % p;
    Int den = boost::multiprecision::denominator(v) % p;
    auto n = mod_reduce(static_cast<std::int64_t>(num), p);
    auto d = mod_reduce(static_cast<std::int64_t>(den), p);
    if (d == 0) throw InputError("denominator divisible by p");
    return mod_mul(n, mod_inv(d, p), p);
}

}  // namespace

Field Field::prime(std::int64_t p) {
    if (p < 2) throw InputError("field characteristic must be a prime >= 2");
    if (p > (std::int64_t(1) << 31)) throw InputError("prime too large");
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw InputError("field characteristic is not prime");
    return Field{p};
}

Scalar Scalar::of_int(std::int64_t n, const Field& f) {
    Scalar s;
    s.p_ = f.p;
    if (f.is_rational())
        s.q_ = Rat(n);
    else
        s.v_ = mod_reduce(n, f.p);
    return s;
}

Scalar Scalar::of_rat(const Rat& v, const Field& f) {
    Scalar s;
    s.p_ = f.p;
    if (f.is_rational())
        s.q_ = v;
    else
        s.v_ = rat_mod_p(v, f.p);
    return s;
}

Scalar Scalar::parse(const std::string& s, const Field& f) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return of_rat(Rat(Int(s)), f);
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw InputError("zero denominator in '" + s + "'");
        return of_rat(make_rat(num, den), f);
    } catch (const std::exception& e) {
        throw InputError("bad scalar literal '" + s + "': " + e.what());
    }
}

bool Scalar::is_zero() const { return p_ == 0 ? q_.is_zero() : v_ == 0; }
bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : v_ == 1; }

const Rat& Scalar::rat() const {
    if (p_ != 0) throw MathError("rat() on prime-field scalar");
    return q_;
}

std::string Scalar::str() const {
    if (p_ != 0) return std::to_string(v_);
    std::string n = boost::multiprecision::numerator(q_).str();
    Int d = boost::multiprecision::denominator(q_);
    return d == 1 ? n : n + "/" + d.str();
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (p_ == 0)
        r.q_ = -q_;
    else
        r.v_ = v_ == 0 ? 0 : p_ - v_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar r = *this;
    if (p_ == 0)
        r.q_ = q_ + o.q_;
    else
        r.v_ = mod_reduce(v_ + o.v_, p_);
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar r = *this;
    if (p_ == 0)
        r.q_ = q_ * o.q_;
    else
        r.v_ = mod_mul(v_, o.v_, p_);
    return r;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw MathError("division by zero");
    Scalar r = *this;
    if (p_ == 0)
        r.q_ = make_rat(boost::multiprecision::denominator(q_), boost::multiprecision::numerator(q_));
    else
        r.v_ = mod_inv(v_, p_);
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

bool Scalar::operator==(const Scalar& o) const {
    check_same(o);
    return p_ == 0 ? q_ == o.q_ : v_ == o.v_;
}

}  // namespace stratkit
