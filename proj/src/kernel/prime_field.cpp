#include "hilbcheck/kernel/prime_field.hpp"

#include "hilbcheck/kernel/errors.hpp"

namespace hilbcheck {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::int64_t Fp::reduce(std::int64_t v, std::uint32_t p) {
    const auto m = static_cast<std::int64_t>(p);
    v %= m;
    return v < 0 ? v + m : v;
}

Fp::Fp(long v, std::uint32_t p) : v_(v), p_(p) {
    if (p < 5 || !is_prime(p)) throw PreconditionError("prime field requires a prime p >= 5, got " + std::to_string(p));
    v_ = reduce(v_, p_);
}

std::uint32_t Fp::unify(const Fp& o) {
    if (p_ == o.p_) return p_;
    if (p_ == 0) {
        p_ = o.p_;
        v_ = reduce(v_, p_);
        return p_;
    }
    if (o.p_ == 0) return p_;
    throw DomainError("mixed prime fields F" + std::to_string(p_) + " and F" + std::to_string(o.p_));
}

Fp& Fp::operator+=(const Fp& o) {
    const auto p = unify(o);
    v_ += p == 0 ? o.v_ : reduce(o.v_, p);
    if (p != 0) v_ = reduce(v_, p);
    return *this;
}

Fp& Fp::operator-=(const Fp& o) {
    const auto p = unify(o);
    v_ -= p == 0 ? o.v_ : reduce(o.v_, p);
    if (p != 0) v_ = reduce(v_, p);
    return *this;
}

Fp& Fp::operator*=(const Fp& o) {
    const auto p = unify(o);
    if (p == 0) {
        v_ *= o.v_;
        return *this;
    }
    v_ = static_cast<std::int64_t>((static_cast<unsigned __int128>(v_) * static_cast<unsigned __int128>(reduce(o.v_, p))) % p);
    return *this;
}

Fp Fp::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in prime field");
    if (p_ == 0) {
        if (v_ == 1 || v_ == -1) return Fp(v_);
        throw DomainError("cannot invert an integer literal outside a prime field");
    }
    // extended Euclid on (v, p)
    std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
        const std::int64_t q = a / b;
        std::int64_t t = a - q * b; a = b; b = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
    }
    return Fp(reduce(x0, p_), p_, Unchecked{});
}

bool operator==(const Fp& a, const Fp& b) {
    if (a.p_ == b.p_) return a.p_ == 0 ? a.v_ == b.v_ : a.v_ == b.v_;
    if (a.p_ != 0 && b.p_ != 0) throw DomainError("comparison across prime fields");
    const auto p = a.p_ != 0 ? a.p_ : b.p_;
    return Fp::reduce(a.v_, p) == Fp::reduce(b.v_, p);
}

std::string Fp::to_string() const { return std::to_string(v_); }

Fp::Domain Fp::Domain::make(std::uint32_t p) {
    if (p < 5 || !is_prime(p)) throw PreconditionError("prime field requires a prime p >= 5, got " + std::to_string(p));
    return Domain{p};
}

Fp Fp::Domain::from_rational(const mpq_class& q) const {
    const mpz_class pz(static_cast<unsigned long>(p));
    mpz_class num = q.get_num() % pz;
    mpz_class den = q.get_den() % pz;
    if (den == 0) throw PreconditionError("coefficient " + q.get_str() + " is not defined in F" + std::to_string(p));
    return from_integer(num.get_si()) / from_integer(den.get_si());
}

}  // namespace hilbcheck
