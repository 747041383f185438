#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hilbcheck/kernel/errors.hpp"
#include "hilbcheck/kernel/scalar_traits.hpp"
#include "hilbcheck/poly/monomial.hpp"

namespace hilbcheck {

namespace detail {

struct CoeffText {
    bool negative = false;
    std::string magnitude;  // text of |c|, or of c itself when no sign split applies
    bool atomic = true;     // safe to print without parentheses before '*'
};

inline CoeffText coeff_text(const Rational& c) {
    return {c.sign() < 0, (c.sign() < 0 ? -c : c).to_string(), true};
}
inline CoeffText coeff_text(const Fp& c) { return {false, c.to_string(), true}; }
inline CoeffText coeff_text(const RatFunc& c) {
    if (c.is_polynomial() && c.num().degree() == 0) return coeff_text(c.scalar());
    return {false, c.to_string(), false};
}

}  // namespace detail

/// Sparse polynomial with terms sorted in decreasing order for `order()`.
/// `dom` produces the constants the polynomial needs (it fixes the prime for
/// F_p coefficients).
template <class K>
class Polynomial {
public:
    using Domain = typename K::Domain;
    using Term = std::pair<Monomial, K>;

    Polynomial() = default;
    explicit Polynomial(int nvars, Domain dom = {}, OrderPtr order = MonomialOrder::grevlex())
        : n_(nvars), dom_(dom), order_(std::move(order)) {}

    static Polynomial constant(int nvars, const K& c, Domain dom = {}, OrderPtr order = MonomialOrder::grevlex()) {
        Polynomial p(nvars, dom, std::move(order));
        if (!hilbcheck::is_zero(c)) p.terms_.emplace_back(Monomial(nvars), c);
        return p;
    }
    static Polynomial term(const Monomial& m, const K& c, Domain dom = {}, OrderPtr order = MonomialOrder::grevlex()) {
        Polynomial p(m.nvars(), dom, std::move(order));
        if (!hilbcheck::is_zero(c)) p.terms_.emplace_back(m, c);
        return p;
    }
    static Polynomial monomial(const Monomial& m, Domain dom = {}, OrderPtr order = MonomialOrder::grevlex()) {
        return term(m, dom.from_integer(1), dom, std::move(order));
    }
    static Polynomial variable(int nvars, int i, Domain dom = {}, OrderPtr order = MonomialOrder::grevlex()) {
        return monomial(Monomial::variable(nvars, i), dom, std::move(order));
    }
    /// Build from unsorted terms; merges duplicates and drops zeros.
    static Polynomial from_terms(int nvars, std::vector<Term> terms, Domain dom = {}, OrderPtr order = MonomialOrder::grevlex()) {
        Polynomial p(nvars, dom, std::move(order));
        p.terms_ = std::move(terms);
        p.canonicalize();
        return p;
    }

    int nvars() const { return n_; }
    const Domain& domain() const { return dom_; }
    const OrderPtr& order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
    const Monomial& lead_monomial() const { require_nonzero(); return terms_.front().first; }
    const K& lead_coeff() const { require_nonzero(); return terms_.front().second; }

    int total_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }
    int min_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = d < 0 ? m.degree() : std::min(d, m.degree());
        return d;
    }
    bool is_homogeneous() const {
        for (const auto& [m, c] : terms_)
            if (m.degree() != terms_.front().first.degree()) return false;
        return true;
    }

    K coeff(const Monomial& m) const {
        for (const auto& [mm, c] : terms_)
            if (mm == m) return c;
        return dom_.from_integer(0);
    }

    /// Same polynomial, terms re-sorted for another order.
    Polynomial with_order(OrderPtr order) const {
        Polynomial p = *this;
        p.order_ = std::move(order);
        p.sort_terms();
        return p;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        const K inv = K(dom_.from_integer(1)) / lead_coeff();
        return scaled(inv);
    }

    Polynomial scaled(const K& s) const {
        if (hilbcheck::is_zero(s)) return Polynomial(n_, dom_, order_);
        Polynomial p = *this;
        for (auto& t : p.terms_) t.second *= s;
        return p;
    }

    Polynomial times_term(const Monomial& m, const K& s) const {
        if (hilbcheck::is_zero(s)) return Polynomial(n_, dom_, order_);
        Polynomial p = *this;
        for (auto& t : p.terms_) {
            t.first = t.first * m;
            t.second *= s;
        }
        return p;  // multiplication by a monomial preserves any monomial order
    }

    /// Remove and return the leading term.
    Term pop_lead() {
        require_nonzero();
        Term t = std::move(terms_.front());
        terms_.erase(terms_.begin());
        return t;
    }
    /// Append a term that is smaller than every term present.
    void append_smaller(Term t) {
        if (!hilbcheck::is_zero(t.second)) terms_.push_back(std::move(t));
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = combine(*this, o, false); }
    Polynomial& operator-=(const Polynomial& o) { return *this = combine(*this, o, true); }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }
    friend Polynomial operator-(const Polynomial& a) { return a.scaled(K(a.dom_.from_integer(-1))); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.require_compatible(b);
        if (a.is_zero() || b.is_zero()) return Polynomial(a.n_, a.dom_, a.order_);
        std::unordered_map<Monomial, K, MonomialHash> acc;
        acc.reserve(a.size() * b.size());
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                auto [it, fresh] = acc.try_emplace(ma * mb, ca * cb);
                if (!fresh) it->second += ca * cb;
            }
        Polynomial p(a.n_, a.dom_, a.order_);
        p.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!hilbcheck::is_zero(c)) p.terms_.emplace_back(m, std::move(c));
        p.sort_terms();
        return p;
    }

    Polynomial pow(int e) const {
        Polynomial r = constant(n_, dom_.from_integer(1), dom_, order_);
        for (int i = 0; i < e; ++i) r *= *this;
        return r;
    }

    /// Terms of total degree exactly `deg`.
    Polynomial homogeneous_component(int deg) const {
        Polynomial p(n_, dom_, order_);
        for (const auto& t : terms_)
            if (t.first.degree() == deg) p.terms_.push_back(t);
        return p;
    }

    /// Terms of total degree < deg.
    Polynomial truncated_below(int deg) const {
        Polynomial p(n_, dom_, order_);
        for (const auto& t : terms_)
            if (t.first.degree() < deg) p.terms_.push_back(t);
        return p;
    }

    /// Partial derivative d/dx_i.
    Polynomial derivative(int i) const {
        Polynomial p(n_, dom_, order_);
        for (const auto& [m, c] : terms_) {
            const int e = m[i];
            if (e == 0) continue;
            K v = c * K(dom_.from_integer(e));
            if (hilbcheck::is_zero(v)) continue;
            Monomial mm = m;
            mm.set(i, e - 1);
            p.terms_.emplace_back(mm, std::move(v));
        }
        p.sort_terms();
        return p;
    }

    K evaluate(const std::vector<K>& point) const {
        if (static_cast<int>(point.size()) != n_) throw PreconditionError("evaluate: point has the wrong dimension");
        K s = dom_.from_integer(0);
        for (const auto& [m, c] : terms_) {
            K v = c;
            for (int i = 0; i < n_; ++i)
                for (int e = 0; e < m[i]; ++e) v *= point[static_cast<std::size_t>(i)];
            s += v;
        }
        return s;
    }

    /// Substitute x_i -> images[i] (all in the same ring as the images).
    Polynomial substitute(const std::vector<Polynomial>& images) const {
        if (static_cast<int>(images.size()) != n_) throw PreconditionError("substitute: wrong number of images");
        const int m = images.empty() ? n_ : images.front().nvars();
        const Domain dom = images.empty() ? dom_ : images.front().domain();
        const OrderPtr ord = images.empty() ? order_ : images.front().order();
        std::vector<std::vector<Polynomial>> powers(static_cast<std::size_t>(n_));
        Polynomial r(m, dom, ord);
        for (const auto& [mon, c] : terms_) {
            Polynomial t = constant(m, c, dom, ord);
            for (int i = 0; i < n_; ++i) {
                const int e = mon[i];
                if (e == 0) continue;
                auto& pw = powers[static_cast<std::size_t>(i)];
                if (pw.empty()) pw.push_back(constant(m, dom.from_integer(1), dom, ord));
                while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[static_cast<std::size_t>(i)]);
                t *= pw[static_cast<std::size_t>(e)];
            }
            r += t;
        }
        return r;
    }

    /// Sum of the terms of maximal w-weight.
    Polynomial weight_initial_form(const std::vector<long>& w) const {
        if (is_zero()) throw PreconditionError("initial form of the zero polynomial");
        if (static_cast<int>(w.size()) != n_) throw PreconditionError("weight vector has the wrong length");
        long best = terms_.front().first.dot(w);
        for (const auto& t : terms_) best = std::max(best, t.first.dot(w));
        Polynomial p(n_, dom_, order_);
        for (const auto& t : terms_)
            if (t.first.dot(w) == best) p.terms_.push_back(t);
        return p;
    }

    std::string to_string(const std::vector<std::string>& names) const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            const auto ct = detail::coeff_text(c);
            if (first) {
                if (ct.negative) os << "-";
            } else {
                os << (ct.negative ? " - " : " + ");
            }
            first = false;
            const bool unit = ct.atomic && ct.magnitude == "1";
            if (m.is_one()) {
                os << (ct.atomic ? ct.magnitude : "(" + ct.magnitude + ")");
                continue;
            }
            if (!unit) os << (ct.atomic ? ct.magnitude : "(" + ct.magnitude + ")") << "*";
            os << m.to_string(names);
        }
        return os.str();
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
        if (a.order_ == b.order_ || *a.order_ == *b.order_) return a.terms_ == b.terms_;
        return a.terms_ == b.with_order(a.order_).terms_;
    }

private:
    void require_nonzero() const {
        if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
    }
    void require_compatible(const Polynomial& o) const {
        if (n_ != o.n_) throw PreconditionError("polynomials live in rings with different numbers of variables");
    }

    void sort_terms() {
        const MonomialOrder& ord = *order_;
        std::sort(terms_.begin(), terms_.end(), [&](const Term& x, const Term& y) { return ord.greater(x.first, y.first); });
    }

    void canonicalize() {
        sort_terms();
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().first == t.first) out.back().second += t.second;
            else out.push_back(std::move(t));
            if (hilbcheck::is_zero(out.back().second)) out.pop_back();
        }
        terms_ = std::move(out);
    }

    static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
        a.require_compatible(b);
        const Polynomial& bb = (a.order_ == b.order_ || *a.order_ == *b.order_) ? b : b.with_order(a.order_);
        Polynomial r(a.n_, a.dom_, a.order_);
        r.terms_.reserve(a.terms_.size() + bb.terms_.size());
        const MonomialOrder& ord = *a.order_;
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < bb.terms_.size()) {
            if (j == bb.terms_.size()) {
                r.terms_.push_back(a.terms_[i++]);
                continue;
            }
            if (i == a.terms_.size()) {
                r.terms_.emplace_back(bb.terms_[j].first, subtract ? K(-bb.terms_[j].second) : bb.terms_[j].second);
                ++j;
                continue;
            }
            const Cmp c = ord.compare(a.terms_[i].first, bb.terms_[j].first);
            if (c == Cmp::GT) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c == Cmp::LT) {
                r.terms_.emplace_back(bb.terms_[j].first, subtract ? K(-bb.terms_[j].second) : bb.terms_[j].second);
                ++j;
            } else {
                K v = subtract ? K(a.terms_[i].second - bb.terms_[j].second) : K(a.terms_[i].second + bb.terms_[j].second);
                if (!hilbcheck::is_zero(v)) r.terms_.emplace_back(a.terms_[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        return r;
    }

    int n_ = 0;
    Domain dom_{};
    OrderPtr order_ = MonomialOrder::grevlex();
    std::vector<Term> terms_;
};

/// Sum of the terms of f of maximal w-weight.
template <class K>
Polynomial<K> weight_initial_form(const Polynomial<K>& f, const std::vector<long>& w) {
    return f.weight_initial_form(w);
}

}  // namespace hilbcheck
