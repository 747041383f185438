#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <vector>

#include "hilbcheck/kernel/rational.hpp"

namespace hilbcheck {

/// Dense integer-coefficient polynomial in the distinguished parameter t.
/// Coefficients are stored low degree first with no trailing zeros; the zero
/// polynomial has no coefficients.
///
/// Usable as a matrix scalar for fraction-free elimination: the ring has
/// exact division through `exact_div`.
class UPoly {
public:
    UPoly() = default;
    UPoly(long c);  // NOLINT(google-explicit-constructor)
    UPoly(int c) : UPoly(static_cast<long>(c)) {}  // NOLINT(google-explicit-constructor)
    explicit UPoly(std::vector<mpz_class> coeffs);

    /// c * t^k
    static UPoly monomial(const mpz_class& c, int k);
    static UPoly t() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    /// t-adic order; -1 for the zero polynomial.
    int order() const;
    const mpz_class& coeff(int k) const;
    const mpz_class& lead() const { return c_.back(); }
    const std::vector<mpz_class>& coeffs() const { return c_; }

    mpz_class content() const;
    UPoly primitive_part() const;
    Rational evaluate(const Rational& x) const;

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
    UPoly& operator*=(const mpz_class& s);

    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    std::string to_string(const std::string& var = "t") const;
    friend std::ostream& operator<<(std::ostream& os, const UPoly& p) { return os << p.to_string(); }

private:
    void trim();
    std::vector<mpz_class> c_;
};

inline bool is_zero(const UPoly& p) { return p.is_zero(); }

/// a / b, which must be an exact quotient in Z[t]; throws otherwise.
UPoly exact_div(const UPoly& a, const UPoly& b);

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
UPoly pseudo_remainder(const UPoly& a, const UPoly& b);

/// Greatest common divisor in Z[t], normalized to a positive leading
/// coefficient.
UPoly gcd(const UPoly& a, const UPoly& b);

}  // namespace hilbcheck
