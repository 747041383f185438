#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace hilbcheck {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
class Rational {
public:
    struct Domain;

    Rational() = default;
    Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class v);

    const mpq_class& value() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational inverse() const;
    std::string to_string() const { return v_.get_str(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

private:
    mpq_class v_;
};

struct Rational::Domain {
    Rational from_integer(long v) const { return Rational(v); }
    Rational from_rational(const mpq_class& q) const { return Rational(q); }
    unsigned characteristic() const { return 0; }
    std::string name() const { return "Q"; }
    friend bool operator==(const Domain&, const Domain&) = default;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }

}  // namespace hilbcheck
