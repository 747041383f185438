#include "hilbcheck/kernel/rational.hpp"

#include "hilbcheck/kernel/errors.hpp"

namespace hilbcheck {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q");
    return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero in Q");
    v_ /= o.v_;
    return *this;
}

}  // namespace hilbcheck
