#include "hilbcheck/kernel/univariate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hilbcheck {

namespace {
const mpz_class kZero = 0;
}

UPoly::UPoly(long c) {
    if (c != 0) c_.emplace_back(c);
}

UPoly::UPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const mpz_class& c, int k) {
    UPoly p;
    if (c == 0) return p;
    p.c_.assign(static_cast<std::size_t>(k) + 1, mpz_class(0));
    p.c_.back() = c;
    return p;
}

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int UPoly::order() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != 0) return static_cast<int>(k);
    return -1;
}

const mpz_class& UPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(k)];
}

mpz_class UPoly::content() const {
    mpz_class g = 0;
    for (const auto& c : c_) {
        g = gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

UPoly UPoly::primitive_part() const {
    if (is_zero()) return {};
    mpz_class g = content();
    if (lead() < 0) g = -g;
    UPoly r = *this;
    for (auto& c : r.c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return r;
}

Rational UPoly::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it, 1);
    return acc;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const mpz_class& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    return UPoly(std::move(r));
}

UPoly operator-(const UPoly& a) {
    UPoly r = a;
    for (auto& c : r.c_) c = -c;
    return r;
}

std::string UPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const mpz_class& c = c_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << a;
            continue;
        }
        if (a != 1) os << a << "*";
        os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
    std::vector<mpz_class> rem = a.coeffs();
    std::vector<mpz_class> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, mpz_class(0));
    const auto db = static_cast<std::size_t>(b.degree());
    for (std::size_t k = q.size(); k-- > 0;) {
        mpz_class& top = rem[k + db];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), b.lead().get_mpz_t())) throw std::domain_error("inexact polynomial division");
        mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), b.lead().get_mpz_t());
        for (std::size_t j = 0; j <= db; ++j) mpz_submul(rem[k + j].get_mpz_t(), q[k].get_mpz_t(), b.coeffs()[j].get_mpz_t());
    }
    for (const auto& c : rem)
        if (c != 0) throw std::domain_error("inexact polynomial division");
    return UPoly(std::move(q));
}

UPoly pseudo_remainder(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
    if (a.degree() < b.degree()) return a;
    std::vector<mpz_class> rem = a.coeffs();
    const auto db = static_cast<std::size_t>(b.degree());
    const mpz_class& lb = b.lead();
    for (std::size_t top = rem.size(); top-- > db;) {
        const mpz_class f = rem[top];
        for (auto& c : rem) c *= lb;
        if (f == 0) continue;
        const std::size_t shift = top - db;
        for (std::size_t j = 0; j <= db; ++j) mpz_submul(rem[shift + j].get_mpz_t(), f.get_mpz_t(), b.coeffs()[j].get_mpz_t());
    }
    rem.resize(db);
    return UPoly(std::move(rem));
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        const UPoly& nz = a.is_zero() ? b : a;
        UPoly r = nz.primitive_part();
        r *= nz.content();
        return r;
    }
    const mpz_class c = gcd(a.content(), b.content());
    UPoly x = a.primitive_part();
    UPoly y = b.primitive_part();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        UPoly r = pseudo_remainder(x, y);
        x = std::move(y);
        y = r.primitive_part();
    }
    x = x.primitive_part();
    x *= c;
    return x;
}

}  // namespace hilbcheck
