#include "hilbcheck/apolarity/apolarity.hpp"

#include <algorithm>

namespace hilbcheck {

namespace {

long factorial_weight(const Monomial& m) {
    long f = 1;
    for (int i = 0; i < m.nvars(); ++i)
        for (int k = 2; k <= m[i]; ++k) f *= k;
    return f;
}

template <class K>
void guard_degree(const typename K::Domain& dom, int deg, const char* what) {
    const unsigned p = dom.characteristic();
    if (p != 0 && deg >= static_cast<int>(p))
        throw PreconditionError(std::string(what) + ": degree " + std::to_string(deg) + " is not below the characteristic " + std::to_string(p));
}

// Rows of the reduced echelon form of the given degree-j forms, as forms.
template <class K>
std::vector<Polynomial<K>> span_basis(const std::vector<Polynomial<K>>& forms, int n, int j, const typename K::Domain& dom) {
    const auto mons = monomials_of_degree(n, j);
    Mat<K> A = zeros<K>(static_cast<Index>(forms.size()), static_cast<Index>(mons.size()));
    for (std::size_t r = 0; r < forms.size(); ++r)
        for (std::size_t c = 0; c < mons.size(); ++c) A(static_cast<Index>(r), static_cast<Index>(c)) = forms[r].coeff(mons[c]);
    const auto e = reduced_row_echelon(A);
    std::vector<Polynomial<K>> out;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        std::vector<typename Polynomial<K>::Term> ts;
        for (std::size_t c = 0; c < mons.size(); ++c)
            if (!is_zero(e.rref(static_cast<Index>(r), static_cast<Index>(c)))) ts.emplace_back(mons[c], e.rref(static_cast<Index>(r), static_cast<Index>(c)));
        out.push_back(Polynomial<K>::from_terms(n, ts, dom));
    }
    return out;
}

// Forms of degree j given by the columns of `ker` over the monomial basis.
template <class K>
std::vector<Polynomial<K>> forms_from_columns(const Mat<K>& ker, const std::vector<Monomial>& mons, int n, const typename K::Domain& dom) {
    std::vector<Polynomial<K>> out;
    const K one = dom.from_integer(1);
    for (Index k = 0; k < ker.cols(); ++k) {
        std::vector<typename Polynomial<K>::Term> ts;
        for (std::size_t c = 0; c < mons.size(); ++c)
            if (!is_zero(ker(static_cast<Index>(c), k))) ts.emplace_back(mons[c], ker(static_cast<Index>(c), k) * one);
        out.push_back(Polynomial<K>::from_terms(n, ts, dom));
    }
    return out;
}

}  // namespace

template <class K>
Polynomial<K> apply_operator(const Polynomial<K>& f, const Polynomial<K>& g) {
    if (f.nvars() != g.nvars()) throw PreconditionError("apply_operator: rings of different dimension");
    const auto& dom = g.domain();
    if (!f.is_zero()) guard_degree<K>(dom, f.total_degree(), "apply_operator");
    if (!g.is_zero()) guard_degree<K>(dom, g.total_degree(), "apply_operator");
    const int n = g.nvars();
    std::vector<typename Polynomial<K>::Term> ts;
    for (const auto& [a, c] : f.terms())
        for (const auto& [b, d] : g.terms()) {
            if (!a.divides(b)) continue;
            long falling = 1;
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < a[i]; ++k) falling *= b[i] - k;
            ts.emplace_back(b / a, c * d * dom.from_integer(falling));
        }
    return Polynomial<K>::from_terms(n, ts, dom);
}

template <class K>
std::vector<Polynomial<K>> perp(const Ideal<K>& I, int j) {
    for (const auto& g : I.gens)
        if (!g.is_homogeneous()) throw PreconditionError("perp of a non-homogeneous ideal");
    if (j < 0) return {};
    guard_degree<K>(I.dom, j, "perp");
    const int n = I.nvars();
    std::vector<Polynomial<K>> Ij;
    for (const auto& g : buchberger(I).elements) {
        const int dg = g.total_degree();
        if (dg > j) continue;
        for (const Monomial& m : monomials_of_degree(n, j - dg)) Ij.push_back(g.times_term(m, I.dom.from_integer(1)));
    }
    const auto mons = monomials_of_degree(n, j);
    Mat<K> A = zeros<K>(static_cast<Index>(Ij.size()), static_cast<Index>(mons.size()));
    for (std::size_t r = 0; r < Ij.size(); ++r)
        for (std::size_t c = 0; c < mons.size(); ++c)
            A(static_cast<Index>(r), static_cast<Index>(c)) = Ij[r].coeff(mons[c]) * I.dom.from_integer(factorial_weight(mons[c]));
    return span_basis(forms_from_columns(kernel_basis(A), mons, n, I.dom), n, j, I.dom);
}

template <class K>
InverseSystem<K> inverse_system(const Ideal<K>& I) {
    InverseSystem<K> out{I.ctx.dual_context(), {}};
    for (int j = 0;; ++j) {
        auto c = perp(I, j);
        if (c.empty()) break;
        out.graded.push_back(std::move(c));
    }
    return out;
}

template <class K>
InverseSystem<K> differential_closure(const std::vector<Polynomial<K>>& gens, const VariableContext& dual_ctx) {
    const int n = dual_ctx.nvars();
    const auto dom = make_domain<K>(dual_ctx.field);
    int top = -1;
    for (const auto& g : gens) {
        if (g.nvars() != n) throw PreconditionError("dual form in a ring of the wrong dimension");
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) throw PreconditionError("inverse system generators must be homogeneous");
        guard_degree<K>(dom, g.total_degree(), "inverse system");
        top = std::max(top, g.total_degree());
    }
    InverseSystem<K> out{dual_ctx, std::vector<std::vector<Polynomial<K>>>(static_cast<std::size_t>(top + 1))};
    std::vector<std::vector<Polynomial<K>>> buckets(static_cast<std::size_t>(top + 1));
    for (const auto& g : gens)
        if (!g.is_zero()) buckets[static_cast<std::size_t>(g.total_degree())].push_back(g);
    for (int j = top; j >= 0; --j) {
        auto& comp = out.graded[static_cast<std::size_t>(j)];
        comp = span_basis(buckets[static_cast<std::size_t>(j)], n, j, dom);
        if (j == 0) break;
        for (const auto& b : comp)
            for (int i = 0; i < n; ++i) {
                auto db = b.derivative(i);
                if (!db.is_zero()) buckets[static_cast<std::size_t>(j - 1)].push_back(std::move(db));
            }
    }
    return out;
}

template <class K>
Ideal<K> ideal_from_inverse_system(const std::vector<Polynomial<K>>& gens, const VariableContext& ctx) {
    const auto sys = differential_closure(gens, ctx.dual_context());
    const int n = ctx.nvars();
    Ideal<K> I(ctx);
    const auto top = static_cast<int>(sys.graded.size()) - 1;
    for (int j = 0; j <= top; ++j) {
        const auto& comp = sys.graded[static_cast<std::size_t>(j)];
        const auto mons = monomials_of_degree(n, j);
        Mat<K> A = zeros<K>(static_cast<Index>(comp.size()), static_cast<Index>(mons.size()));
        for (std::size_t r = 0; r < comp.size(); ++r)
            for (std::size_t c = 0; c < mons.size(); ++c)
                A(static_cast<Index>(r), static_cast<Index>(c)) = comp[r].coeff(mons[c]) * I.dom.from_integer(factorial_weight(mons[c]));
        for (auto& f : forms_from_columns(kernel_basis(A), mons, n, I.dom)) I.gens.push_back(std::move(f));
    }
    for (const Monomial& m : monomials_of_degree(n, top + 1)) I.gens.push_back(Polynomial<K>::monomial(m, I.dom));
    return Ideal<K>(ctx, buchberger(I).elements);
}

#define HILBCHECK_INSTANTIATE_APOLARITY(K)                                                                               \
    template Polynomial<K> apply_operator<K>(const Polynomial<K>&, const Polynomial<K>&);                                \
    template std::vector<Polynomial<K>> perp<K>(const Ideal<K>&, int);                                                   \
    template InverseSystem<K> inverse_system<K>(const Ideal<K>&);                                                        \
    template InverseSystem<K> differential_closure<K>(const std::vector<Polynomial<K>>&, const VariableContext&);        \
    template Ideal<K> ideal_from_inverse_system<K>(const std::vector<Polynomial<K>>&, const VariableContext&);

HILBCHECK_INSTANTIATE_APOLARITY(Rational)
HILBCHECK_INSTANTIATE_APOLARITY(Fp)
HILBCHECK_INSTANTIATE_APOLARITY(RatFunc)

}  // namespace hilbcheck
