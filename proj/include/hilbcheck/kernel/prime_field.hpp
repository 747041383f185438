#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

namespace hilbcheck {

/// Residue modulo a prime p >= 5, stored in [0, p).
///
/// An element constructed from a bare integer carries no modulus yet (it is
/// an integer literal such as the 0 and 1 that generic matrix code creates);
/// it adopts the modulus of the first element it is combined with.
/// Combining residues of two different primes throws DomainError.
class Fp {
public:
    struct Domain;

    Fp() = default;
    Fp(long v) : v_(v), p_(0) {}  // NOLINT(google-explicit-constructor)
    Fp(int v) : v_(v), p_(0) {}   // NOLINT(google-explicit-constructor)
    Fp(long v, std::uint32_t p);

    std::uint32_t modulus() const { return p_; }
    /// Representative in [0, p); for a literal, the literal itself.
    std::int64_t value() const { return v_; }

    bool is_zero() const { return v_ == 0 || (p_ != 0 && v_ % p_ == 0); }
    bool is_one() const { return p_ == 0 ? v_ == 1 : v_ == 1 % static_cast<std::int64_t>(p_); }

    Fp inverse() const;
    std::string to_string() const;

    Fp& operator+=(const Fp& o);
    Fp& operator-=(const Fp& o);
    Fp& operator*=(const Fp& o);
    Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend Fp operator-(const Fp& a) { return Fp(0) - a; }

    friend bool operator==(const Fp& a, const Fp& b);

    friend std::ostream& operator<<(std::ostream& os, const Fp& r) { return os << r.to_string(); }

private:
    struct Unchecked {};
    Fp(std::int64_t v, std::uint32_t p, Unchecked) : v_(v), p_(p) {}

    std::uint32_t unify(const Fp& o);
    static std::int64_t reduce(std::int64_t v, std::uint32_t p);

    std::int64_t v_ = 0;
    std::uint32_t p_ = 0;
};

struct Fp::Domain {
    std::uint32_t p = 5;

    /// Validated constructor: p must be a prime >= 5.
    static Domain make(std::uint32_t p);

    Fp from_integer(long v) const { return Fp(reduce(v, p), p, Unchecked{}); }
    Fp from_rational(const mpq_class& q) const;
    unsigned characteristic() const { return p; }
    std::string name() const { return "F" + std::to_string(p); }
    friend bool operator==(const Domain&, const Domain&) = default;
};

inline bool is_zero(const Fp& r) { return r.is_zero(); }

bool is_prime(std::uint64_t n);

}  // namespace hilbcheck
