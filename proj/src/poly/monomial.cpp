#include "hilbcheck/poly/monomial.hpp"

#include <algorithm>
#include <sstream>

#include "hilbcheck/kernel/errors.hpp"

namespace hilbcheck {

Monomial::Monomial(int nvars) : n_(nvars) {
    if (nvars < 0 || nvars > kMaxVars) throw PreconditionError("monomial: unsupported number of variables " + std::to_string(nvars));
}

Monomial::Monomial(std::initializer_list<int> exps) : Monomial(std::vector<int>(exps)) {}

Monomial::Monomial(const std::vector<int>& exps) : Monomial(static_cast<int>(exps.size())) {
    for (int i = 0; i < n_; ++i) set(i, exps[static_cast<std::size_t>(i)]);
}

Monomial Monomial::variable(int nvars, int i, int power) {
    Monomial m(nvars);
    m.set(i, power);
    return m;
}

void Monomial::set(int i, int v) {
    if (i < 0 || i >= n_) throw PreconditionError("monomial: variable index out of range");
    if (v < 0 || v > 0xFFFF) throw PreconditionError("monomial: exponent out of range");
    deg_ += v - e_[static_cast<std::size_t>(i)];
    e_[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(v);
}

bool Monomial::divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (int i = 0; i < n_; ++i)
        if (e_[static_cast<std::size_t>(i)] > o.e_[static_cast<std::size_t>(i)]) return false;
    return true;
}

long Monomial::dot(const std::vector<long>& w) const {
    long s = 0;
    for (int i = 0; i < n_; ++i) s += w[static_cast<std::size_t>(i)] * e_[static_cast<std::size_t>(i)];
    return s;
}

std::vector<int> Monomial::exponents() const { return {e_.begin(), e_.begin() + n_}; }

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < static_cast<std::size_t>(a.n_); ++i) {
        const int v = a.e_[i] + b.e_[i];
        if (v > 0xFFFF) throw PreconditionError("monomial: exponent overflow");
        r.e_[i] = static_cast<std::uint16_t>(v);
    }
    r.deg_ = a.deg_ + b.deg_;
    return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < static_cast<std::size_t>(a.n_); ++i) r.e_[i] = static_cast<std::uint16_t>(a.e_[i] - b.e_[i]);
    r.deg_ = a.deg_ - b.deg_;
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    r.deg_ = 0;
    for (std::size_t i = 0; i < static_cast<std::size_t>(a.n_); ++i) {
        r.e_[i] = std::max(a.e_[i], b.e_[i]);
        r.deg_ += r.e_[i];
    }
    return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < static_cast<std::size_t>(a.n_); ++i)
        if (a.e_[i] != 0 && b.e_[i] != 0) return false;
    return true;
}

std::size_t Monomial::hash() const {
    std::size_t h = static_cast<std::size_t>(n_);
    for (int i = 0; i < n_; ++i) h = h * 1000003u ^ e_[static_cast<std::size_t>(i)];
    return h;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
    if (deg_ == 0) return "1";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < n_; ++i) {
        const int e = e_[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        if (!first) os << "*";
        first = false;
        os << names[static_cast<std::size_t>(i)];
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

namespace {

Cmp grevlex_cmp(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? Cmp::GT : Cmp::LT;
    for (int i = a.nvars() - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i] ? Cmp::GT : Cmp::LT;
    return Cmp::EQ;
}

Cmp lex_cmp(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.nvars(); ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? Cmp::GT : Cmp::LT;
    return Cmp::EQ;
}

}  // namespace

OrderPtr MonomialOrder::grevlex() {
    static const OrderPtr o = std::make_shared<const MonomialOrder>();
    return o;
}

OrderPtr MonomialOrder::lex() {
    static const OrderPtr o = std::make_shared<const MonomialOrder>(MonomialOrder{OrderKind::Lex, {}, OrderKind::Lex});
    return o;
}

OrderPtr MonomialOrder::weighted(std::vector<long> w, OrderKind tiebreak) {
    if (tiebreak == OrderKind::Weight) throw PreconditionError("weight order tiebreak must be grevlex or lex");
    return std::make_shared<const MonomialOrder>(MonomialOrder{OrderKind::Weight, std::move(w), tiebreak});
}

Cmp MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
        case OrderKind::Grevlex: return grevlex_cmp(a, b);
        case OrderKind::Lex: return lex_cmp(a, b);
        case OrderKind::Weight: {
            const long wa = a.dot(weight), wb = b.dot(weight);
            if (wa != wb) return wa > wb ? Cmp::GT : Cmp::LT;
            return tiebreak == OrderKind::Lex ? lex_cmp(a, b) : grevlex_cmp(a, b);
        }
    }
    return Cmp::EQ;
}

bool MonomialOrder::is_global() const {
    if (kind != OrderKind::Weight) return true;
    return std::all_of(weight.begin(), weight.end(), [](long v) { return v >= 0; });
}

std::string MonomialOrder::describe() const {
    auto name = [](OrderKind k) { return k == OrderKind::Lex ? std::string("lex") : std::string("grevlex"); };
    if (kind != OrderKind::Weight) return name(kind);
    std::ostringstream os;
    os << "weight(";
    for (std::size_t i = 0; i < weight.size(); ++i) os << (i ? "," : "") << weight[i];
    os << ")+" << name(tiebreak);
    return os.str();
}

Cmp compare(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw PreconditionError("compare: monomials live in different rings");
    if (order.kind == OrderKind::Weight && static_cast<int>(order.weight.size()) != a.nvars())
        throw PreconditionError("compare: weight vector has the wrong length");
    return order.compare(a, b);
}

std::vector<Monomial> monomials_of_degree(int nvars, int deg) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (deg == 0) out.emplace_back(0);
        return out;
    }
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    // enumerate compositions; sort afterwards
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == nvars - 1) {
            e[static_cast<std::size_t>(i)] = left;
            out.emplace_back(e);
            return;
        }
        for (int v = left; v >= 0; --v) {
            e[static_cast<std::size_t>(i)] = v;
            rec(i + 1, left - v);
        }
    };
    rec(0, deg);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grevlex_cmp(a, b) == Cmp::GT; });
    return out;
}

}  // namespace hilbcheck
