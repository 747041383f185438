#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hilbcheck {

inline constexpr int kMaxVars = 16;

/// Exponent vector x^a in at most kMaxVars variables.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int nvars);
    Monomial(std::initializer_list<int> exps);
    explicit Monomial(const std::vector<int>& exps);

    static Monomial variable(int nvars, int i, int power = 1);

    int nvars() const { return n_; }
    int degree() const { return deg_; }
    int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
    void set(int i, int v);

    bool divides(const Monomial& o) const;
    bool is_one() const { return deg_ == 0; }
    long dot(const std::vector<long>& w) const;
    std::vector<int> exponents() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// a / b; requires b | a.
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend bool coprime(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.n_ == b.n_ && a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    std::size_t hash() const;
    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::array<std::uint16_t, kMaxVars> e_{};
    int n_ = 0;
    int deg_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

enum class OrderKind { Grevlex, Lex, Weight };

/// Monomial order: grevlex, lex, or a weight vector refined by grevlex/lex.
struct MonomialOrder {
    OrderKind kind = OrderKind::Grevlex;
    std::vector<long> weight;
    OrderKind tiebreak = OrderKind::Grevlex;

    static std::shared_ptr<const MonomialOrder> grevlex();
    static std::shared_ptr<const MonomialOrder> lex();
    static std::shared_ptr<const MonomialOrder> weighted(std::vector<long> w, OrderKind tiebreak = OrderKind::Grevlex);

    Cmp compare(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::GT; }
    /// True when every monomial is >= 1 (a well-order), which Buchberger needs.
    bool is_global() const;
    std::string describe() const;

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

using OrderPtr = std::shared_ptr<const MonomialOrder>;

/// Free-function form used by tests and the CLI; throws on dimension mismatch.
Cmp compare(const MonomialOrder& order, const Monomial& a, const Monomial& b);

/// All monomials of total degree exactly `deg` in n variables, in descending
/// grevlex order.
std::vector<Monomial> monomials_of_degree(int nvars, int deg);

}  // namespace hilbcheck
