#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>

#include "hilbcheck/kernel/rational.hpp"
#include "hilbcheck/kernel/univariate.hpp"

namespace hilbcheck {

/// Element of Q(t), kept in the canonical form  c * num / den  where c is a
/// rational scalar, num and den are primitive integer polynomials with
/// positive leading coefficients and gcd(num, den) = 1. Zero is stored as
/// c = 0, num = den = 1.
class RatFunc {
public:
    struct Domain;

    RatFunc() : RatFunc(0L) {}
    RatFunc(long v);  // NOLINT(google-explicit-constructor)
    RatFunc(int v) : RatFunc(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    explicit RatFunc(const Rational& c);
    explicit RatFunc(const UPoly& p);
    RatFunc(const UPoly& num, const UPoly& den);

    static RatFunc t() { return RatFunc(UPoly::t()); }

    const Rational& scalar() const { return c_; }
    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }

    bool is_zero() const { return c_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    /// Polynomial value as scalar * num; only meaningful when is_polynomial().
    /// Returns nullopt when the coefficients are not integral.
    std::optional<UPoly> as_integer_polynomial() const;

    /// ord_t(num) - ord_t(den); throws on zero.
    int valuation() const;
    /// Value at t = x; throws when the denominator vanishes there.
    Rational evaluate(const Rational& x) const;

    RatFunc inverse() const;
    std::string to_string() const;

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this * o.inverse(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
    friend RatFunc operator-(const RatFunc& a);

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.c_ == b.c_ && a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.to_string(); }

private:
    void normalize();

    Rational c_;
    UPoly num_{1};
    UPoly den_{1};
};

struct RatFunc::Domain {
    RatFunc from_integer(long v) const { return RatFunc(v); }
    RatFunc from_rational(const mpq_class& q) const { return RatFunc(Rational(q)); }
    unsigned characteristic() const { return 0; }
    std::string name() const { return "Qt"; }
    friend bool operator==(const Domain&, const Domain&) = default;
};

inline bool is_zero(const RatFunc& r) { return r.is_zero(); }

}  // namespace hilbcheck
