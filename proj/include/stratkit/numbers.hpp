#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stratkit {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MathError : std::logic_error {
    using std::logic_error::logic_error;
};

// two-argument cpp_rational construction rejects negative denominators in
// some boost versions; normalize the sign first
inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw MathError("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(num, den);
}

// Coefficient field: the rationals (p == 0) or a prime field F_p.
struct Field {
    std::int64_t p = 0;

    bool is_rational() const { return p == 0; }
    bool operator==(const Field&) const = default;
    std::string str() const { return p == 0 ? "Q" : "F" + std::to_string(p); }

    static Field rationals() { return Field{0}; }
    static Field prime(std::int64_t p);  // validates primality
};

// Exact scalar tagged by its ambient field.  Rationals are kept in lowest
// terms with positive denominator (cpp_rational canonical form); prime-field
// values are reduced to [0, p).
class Scalar {
  public:
    Scalar() = default;  // zero over Q

    static Scalar zero(const Field& f) { return of_int(0, f); }
    static Scalar one(const Field& f) { return of_int(1, f); }
    static Scalar of_int(std::int64_t n, const Field& f);
    static Scalar of_rat(const Rat& v, const Field& f);
    // accepts "a" or "a/b"
    static Scalar parse(const std::string& s, const Field& f);

    Field field() const { return Field{p_}; }
    bool is_zero() const;
    bool is_one() const;
    const Rat& rat() const;           // rational field only
    std::int64_t residue() const { return v_; }
    std::string str() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inv() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

  private:
    Rat q_;                // payload when p_ == 0
    std::int64_t v_ = 0;   // payload when p_ > 0
    std::int64_t p_ = 0;

    void check_same(const Scalar& o) const {
        if (p_ != o.p_) throw MathError("scalar field mismatch");
    }
};

}  // namespace stratkit
