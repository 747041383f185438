#include "hilbcheck/kernel/rational_function.hpp"

#include <sstream>
#include <stdexcept>

namespace hilbcheck {

RatFunc::RatFunc(long v) : c_(v) {}

RatFunc::RatFunc(const Rational& c) : c_(c) {}

RatFunc::RatFunc(const UPoly& p) : c_(0), num_(p), den_(1) {
    if (p.is_zero()) {
        num_ = 1;
        return;
    }
    c_ = 1;
    normalize();
}

RatFunc::RatFunc(const UPoly& num, const UPoly& den) : c_(1), num_(num), den_(den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (c_.is_zero() || num_.is_zero()) {
        c_ = 0;
        num_ = 1;
        den_ = 1;
        return;
    }
    const mpz_class cn = num_.content() * (num_.lead() < 0 ? -1 : 1);
    const mpz_class cd = den_.content() * (den_.lead() < 0 ? -1 : 1);
    num_ = num_.primitive_part();
    den_ = den_.primitive_part();
    c_ *= Rational(mpq_class(cn, cd));
    if (den_.degree() > 0) {
        const UPoly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
}

std::optional<UPoly> RatFunc::as_integer_polynomial() const {
    if (!is_polynomial()) return std::nullopt;
    if (c_.denominator() != 1) return std::nullopt;
    UPoly r = num_;
    r *= c_.numerator();
    return r;
}

int RatFunc::valuation() const {
    if (is_zero()) throw std::domain_error("valuation of zero");
    return num_.order() - den_.order();
}

Rational RatFunc::evaluate(const Rational& x) const {
    const Rational d = den_.evaluate(x);
    if (d.is_zero()) throw std::domain_error("rational function has a pole at " + x.to_string());
    return c_ * num_.evaluate(x) / d;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(t)");
    RatFunc r;
    r.c_ = c_.inverse();
    r.num_ = den_;
    r.den_ = num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // a.c * a.n / a.d + b.c * b.n / b.d with integer-scaled numerators
    const mpz_class ka = a.c_.numerator() * b.c_.denominator();
    const mpz_class kb = b.c_.numerator() * a.c_.denominator();
    const mpz_class kd = a.c_.denominator() * b.c_.denominator();
    RatFunc r;
    if (a.den_ == b.den_) {
        UPoly na = a.num_, nb = b.num_;
        na *= ka;
        nb *= kb;
        r.num_ = na + nb;
        r.den_ = a.den_;
    } else {
        UPoly na = a.num_ * b.den_, nb = b.num_ * a.den_;
        na *= ka;
        nb *= kb;
        r.num_ = na + nb;
        r.den_ = a.den_ * b.den_;
    }
    r.c_ = Rational(mpq_class(1, kd));
    r.normalize();
    return r;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    RatFunc r;
    r.c_ = a.c_ * b.c_;
    if (a.den_.degree() == 0 && b.den_.degree() == 0) {
        r.num_ = a.num_ * b.num_;  // product of primitives is primitive (Gauss)
        r.den_ = 1;
        return r;
    }
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_ * b.den_;
    r.normalize();
    return r;
}

RatFunc operator-(const RatFunc& a) {
    RatFunc r = a;
    r.c_ = -r.c_;
    return r;
}

std::string RatFunc::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    const bool poly = is_polynomial();
    if (num_.degree() == 0 && poly) return c_.to_string();
    if (!c_.is_one()) os << "(" << c_.to_string() << ")*";
    os << "(" << num_.to_string() << ")";
    if (!poly) os << "/(" << den_.to_string() << ")";
    return os.str();
}

}  // namespace hilbcheck
