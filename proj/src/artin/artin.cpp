#include "hilbcheck/artin/artin.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>

namespace hilbcheck {

std::string to_string(const HilbertFunction& h) {
    std::string s = "(";
    for (std::size_t i = 0; i < h.size(); ++i) s += (i ? "," : "") + std::to_string(h[i]);
    return s + ")";
}

template <class K>
LocalAlgebraModel<K> multiplication_operators(const GroebnerBasis<K>& G) {
    LocalAlgebraModel<K> A;
    A.basis = G;
    A.lambda = quotient_basis(G);
    const auto n = static_cast<Index>(A.lambda.size());
    std::unordered_map<Monomial, Index, MonomialHash> pos;
    for (Index j = 0; j < n; ++j) pos[A.lambda[static_cast<std::size_t>(j)]] = j;
    const K zero = G.dom.from_integer(0);
    for (int i = 0; i < G.nvars(); ++i) {
        Mat<K> X(n, n);
        X.setConstant(zero);
        for (Index j = 0; j < n; ++j) {
            const Monomial m = A.lambda[static_cast<std::size_t>(j)] * Monomial::variable(G.nvars(), i);
            const auto r = normal_form(Polynomial<K>::monomial(m, G.dom, G.order), G);
            for (const auto& [mm, c] : r.terms()) X(pos.at(mm), j) = c;
        }
        A.X.push_back(std::move(X));
    }
    bool nilpotent = true;
    for (const auto& X : A.X) {
        Mat<K> P = X;
        for (Index k = 1; k < n; ++k) P = mul(P, X);
        if (!is_zero_matrix(P)) nilpotent = false;
    }
    A.origin = nilpotent;
    return A;
}

template <class K>
std::vector<K> centroid(const LocalAlgebraModel<K>& A) {
    const auto n = static_cast<long>(A.size());
    const unsigned p = A.basis.dom.characteristic();
    if (p != 0 && n % static_cast<long>(p) == 0) throw PreconditionError("centroid: the characteristic divides the colength");
    const K inv = K(A.basis.dom.from_integer(1)) / A.basis.dom.from_integer(n);
    std::vector<K> c;
    for (const auto& X : A.X) {
        K tr = A.basis.dom.from_integer(0);
        for (Index i = 0; i < X.rows(); ++i) tr += X(i, i);
        c.push_back(tr * inv);
    }
    return c;
}

template <class K>
Ideal<K> translate_ideal(const Ideal<K>& I, const std::vector<K>& a) {
    if (static_cast<int>(a.size()) != I.nvars()) throw PreconditionError("translation vector has the wrong length");
    std::vector<Polynomial<K>> images;
    for (int i = 0; i < I.nvars(); ++i) images.push_back(I.var(i) + I.constant(a[static_cast<std::size_t>(i)]));
    std::vector<Polynomial<K>> gens;
    for (const auto& g : I.gens) gens.push_back(g.substitute(images));
    return I.with_generators(gens);
}

template <class K>
bool is_primary_at_origin(const Ideal<K>& I) {
    if (!has_finite_colength(buchberger(I))) throw DomainError("the ideal does not have finite colength");
    return maximal_ideal_power_in(I).has_value();
}

template <class K>
HilbertFunction graded_hilbert_function(const Ideal<K>& I) {
    for (const auto& g : I.gens)
        if (!g.is_homogeneous()) throw PreconditionError("graded Hilbert function of a non-homogeneous ideal");
    HilbertFunction h;
    for (const Monomial& m : quotient_basis(buchberger(I))) {
        const auto deg = static_cast<std::size_t>(m.degree());
        if (h.size() <= deg) h.resize(deg + 1, 0);
        ++h[deg];
    }
    return h;
}

template <class K>
HilbertFunction local_hilbert_function(const Ideal<K>& I) {
    if (!is_primary_at_origin(I)) throw PreconditionError("local Hilbert function: the ideal is not primary at the origin");
    return graded_hilbert_function(initial_ideal(I, std::vector<long>(static_cast<std::size_t>(I.nvars()), -1)));
}

template <class K>
Ideal<K> embedding_reduction(const Ideal<K>& I) {
    if (!is_primary_at_origin(I)) throw PreconditionError("embedding reduction: the ideal is not primary at the origin");
    const int d = I.nvars();
    Mat<K> lin = zeros<K>(static_cast<Index>(I.gens.size()), d);
    for (std::size_t r = 0; r < I.gens.size(); ++r)
        for (int j = 0; j < d; ++j) lin(static_cast<Index>(r), j) = I.gens[r].coeff(Monomial::variable(d, j));
    const auto e = reduced_row_echelon(lin);
    if (e.pivots.empty()) return I;
    std::vector<int> drop(e.pivots.begin(), e.pivots.end());
    return eliminate(I, drop);
}

namespace {

// Coefficients low to high; leading coefficient 1.
template <class K>
std::vector<K> minimal_polynomial(const Mat<K>& X, const typename K::Domain& dom) {
    const Index n = X.rows();
    const K one = dom.from_integer(1);
    std::vector<Mat<K>> powers{identity<K>(n)};
    powers[0] *= one;
    for (Index k = 1; k <= n; ++k) {
        powers.push_back(mul(powers.back(), X));
        Mat<K> A(n * n, k);
        Vec<K> b(n * n);
        for (Index j = 0; j < k; ++j)
            for (Index r = 0; r < n * n; ++r) A(r, j) = powers[static_cast<std::size_t>(j)](r % n, r / n);
        for (Index r = 0; r < n * n; ++r) b(r) = powers.back()(r % n, r / n);
        if (const auto c = solve(A, b)) {
            std::vector<K> poly;
            for (Index j = 0; j < k; ++j) poly.push_back(-(*c)(j));
            poly.push_back(one);
            return poly;
        }
    }
    throw std::logic_error("minimal polynomial: no relation found");
}

// Divide by (x - a) as often as possible; returns the multiplicity.
template <class K>
int deflate(std::vector<K>& f, const K& a) {
    int mult = 0;
    while (f.size() > 1) {
        std::vector<K> q(f.size() - 1, f.back() - f.back());
        K carry = f.back();
        for (std::size_t i = f.size() - 1; i-- > 0;) {
            q[i] = carry;
            carry = f[i] + carry * a;
        }
        if (!is_zero(carry)) break;
        f = std::move(q);
        ++mult;
    }
    return mult;
}

std::vector<mpz_class> divisors(mpz_class v) {
    if (v < 0) v = -v;
    std::vector<mpz_class> out;
    for (mpz_class k = 1; k * k <= v; ++k)
        if (v % k == 0) {
            out.push_back(k);
            if (k * k != v) out.push_back(v / k);
        }
    return out;
}

constexpr long kRootSearchLimit = 2'000'000;

// Roots in the base field of a monic polynomial, or nullopt when it does not
// split into linear factors over the base field (or the search is out of
// range).
std::optional<std::vector<Rational>> split_roots(std::vector<Rational> f, const Rational::Domain&) {
    std::vector<Rational> roots;
    if (deflate(f, Rational(0)) > 0) roots.push_back(Rational(0));
    if (f.size() == 1) return roots;
    mpz_class l = 1;
    for (const auto& c : f) l = lcm(l, c.denominator());
    std::vector<mpz_class> z;
    for (const auto& c : f) z.push_back(mpz_class(c.value() * l));
    if (abs(z.front()) > kRootSearchLimit * mpz_class(kRootSearchLimit) || abs(z.back()) > kRootSearchLimit * mpz_class(kRootSearchLimit))
        return std::nullopt;
    for (const auto& p : divisors(z.front()))
        for (const auto& q : divisors(z.back()))
            for (int s : {1, -1}) {
                if (f.size() == 1) break;
                const Rational a(mpz_class(s * p), q);
                if (deflate(f, a) > 0 && std::find(roots.begin(), roots.end(), a) == roots.end()) roots.push_back(a);
            }
    if (f.size() != 1) return std::nullopt;
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::optional<std::vector<Fp>> split_roots(std::vector<Fp> f, const Fp::Domain& dom) {
    if (dom.p > kRootSearchLimit) return std::nullopt;
    std::vector<Fp> roots;
    for (long v = 0; v < static_cast<long>(dom.p) && f.size() > 1; ++v)
        if (deflate(f, dom.from_integer(v)) > 0) roots.push_back(dom.from_integer(v));
    if (f.size() != 1) return std::nullopt;
    return roots;
}

// Over Q(t) only a single root is searched for: the one forced by the trace.
std::optional<std::vector<RatFunc>> split_roots(std::vector<RatFunc> f, const RatFunc::Domain&) {
    const auto k = static_cast<long>(f.size() - 1);
    const RatFunc a = -f[static_cast<std::size_t>(k - 1)] / RatFunc(k);
    if (deflate(f, a) != k) return std::nullopt;
    return std::vector<RatFunc>{a};
}

template <class K>
void split_along(const Ideal<K>& I, int var, std::vector<K> prefix, SupportSplit<K>& out) {
    const GroebnerBasis<K> G = buchberger(I);
    if (var == I.nvars()) {
        out.pieces.push_back({std::move(prefix), G.ideal()});
        return;
    }
    const auto A = multiplication_operators(G);
    const auto roots = split_roots(minimal_polynomial(A.X[static_cast<std::size_t>(var)], I.dom), I.dom);
    if (!roots) {
        out.indeterminate = "support not rational: x" + std::to_string(var + 1) + " has an eigenvalue outside " + I.dom.name();
        return;
    }
    if (roots->size() == 1) {
        prefix.push_back(roots->front());
        split_along(I, var + 1, std::move(prefix), out);
        return;
    }
    const auto n = static_cast<int>(A.size());
    for (const K& a : *roots) {
        auto gens = G.elements;
        gens.push_back((I.var(var) - I.constant(a)).pow(n));
        auto p = prefix;
        p.push_back(a);
        split_along(I.with_generators(gens), var + 1, std::move(p), out);
        if (!out.ok()) return;
    }
}

}  // namespace

template <class K>
SupportSplit<K> split_rational_support(const Ideal<K>& I) {
    const GroebnerBasis<K> G = buchberger(I);
    if (!has_finite_colength(G)) throw DomainError("the ideal does not have finite colength");
    SupportSplit<K> out;
    if (G.is_unit()) return out;
    split_along(I, 0, {}, out);
    if (!out.ok()) out.pieces.clear();
    return out;
}

std::set<HilbertFunction> enumerate_local_hfs(int d, int n) {
    if (d < 1 || d > 8 || n < 1 || n > 8) throw PreconditionError("census is limited to 1 <= d <= 8 and 1 <= n <= 8");
    // A staircase is a sorted list of exponent vectors packed base 16.
    using Code = std::uint32_t;
    auto exponent = [](Code c, int i) { return static_cast<int>((c >> (4 * i)) & 0xF); };
    std::set<std::vector<Code>> level{{0}};
    for (int size = 1; size < n; ++size) {
        std::set<std::vector<Code>> next;
        for (const auto& st : level)
            for (const Code c : st)
                for (int i = 0; i < d; ++i) {
                    const Code m = c + (Code{1} << (4 * i));
                    if (std::binary_search(st.begin(), st.end(), m)) continue;
                    bool closed = true;
                    for (int j = 0; j < d && closed; ++j)
                        if (exponent(m, j) > 0 && !std::binary_search(st.begin(), st.end(), m - (Code{1} << (4 * j)))) closed = false;
                    if (!closed) continue;
                    auto grown = st;
                    grown.insert(std::upper_bound(grown.begin(), grown.end(), m), m);
                    next.insert(std::move(grown));
                }
        level = std::move(next);
    }
    std::set<HilbertFunction> out;
    for (const auto& st : level) {
        HilbertFunction h;
        for (const Code c : st) {
            int deg = 0;
            for (int i = 0; i < d; ++i) deg += exponent(c, i);
            if (static_cast<int>(h.size()) <= deg) h.resize(static_cast<std::size_t>(deg) + 1, 0);
            ++h[static_cast<std::size_t>(deg)];
        }
        out.insert(h);
    }
    return out;
}

#define HILBCHECK_INSTANTIATE_ARTIN(K)                                                  \
    template LocalAlgebraModel<K> multiplication_operators<K>(const GroebnerBasis<K>&); \
    template std::vector<K> centroid<K>(const LocalAlgebraModel<K>&);                   \
    template Ideal<K> translate_ideal<K>(const Ideal<K>&, const std::vector<K>&);       \
    template bool is_primary_at_origin<K>(const Ideal<K>&);                             \
    template HilbertFunction graded_hilbert_function<K>(const Ideal<K>&);               \
    template HilbertFunction local_hilbert_function<K>(const Ideal<K>&);                \
    template Ideal<K> embedding_reduction<K>(const Ideal<K>&);                          \
    template SupportSplit<K> split_rational_support<K>(const Ideal<K>&);

HILBCHECK_INSTANTIATE_ARTIN(Rational)
HILBCHECK_INSTANTIATE_ARTIN(Fp)
HILBCHECK_INSTANTIATE_ARTIN(RatFunc)

}  // namespace hilbcheck
