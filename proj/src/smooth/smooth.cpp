#include "hilbcheck/smooth/smooth.hpp"

#include <algorithm>

#include "hilbcheck/apolarity/apolarity.hpp"

namespace hilbcheck {

namespace {

template <class K>
void guard_characteristic(const typename K::Domain& dom) {
    const unsigned p = dom.characteristic();
    if (p == 2 || p == 3) throw PreconditionError("characteristic 2 and 3 are not supported");
}

template <class K>
std::string scalar_text(const K& v) {
    return v.to_string();
}

}  // namespace

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::Smoothable: return "Smoothable";
        case Outcome::NotSmoothable: return "NotSmoothable";
        case Outcome::Indeterminate: return "Indeterminate";
    }
    return "?";
}

template <class K>
Ideal<K> ideal_of_dual_quadrics(const std::vector<Polynomial<K>>& V, const VariableContext& ctx) {
    if (ctx.nvars() != 4) throw PreconditionError("Salmon-Turnbull Pfaffian: needs 4 variables");
    const auto dom = make_domain<K>(ctx.field);
    guard_characteristic<K>(dom);
    for (const auto& q : V)
        if (q.nvars() != 4 || (!q.is_zero() && (!q.is_homogeneous() || q.total_degree() != 2)))
            throw PreconditionError("Salmon-Turnbull Pfaffian: V must consist of dual quadrics in 4 variables");
    const auto mons = monomials_of_degree(4, 2);
    Mat<K> P = zeros<K>(static_cast<Index>(V.size()), 10);
    for (std::size_t r = 0; r < V.size(); ++r)
        for (std::size_t c = 0; c < mons.size(); ++c) {
            long w = 1;
            for (int i = 0; i < 4; ++i) w *= mons[c][i] == 2 ? 2 : 1;
            P(static_cast<Index>(r), static_cast<Index>(c)) = V[r].coeff(mons[c]) * dom.from_integer(w);
        }
    if (mat_rank(P) != 3) throw PreconditionError("Salmon-Turnbull Pfaffian: V must be 3-dimensional");
    const Mat<K> ker = kernel_basis(P);
    Ideal<K> I(ctx);
    for (Index k = 0; k < ker.cols(); ++k) {
        std::vector<typename Polynomial<K>::Term> ts;
        for (std::size_t c = 0; c < mons.size(); ++c)
            if (!is_zero(ker(static_cast<Index>(c), k))) ts.emplace_back(mons[c], ker(static_cast<Index>(c), k) * dom.from_integer(1));
        I.gens.push_back(Polynomial<K>::from_terms(4, ts, dom));
    }
    for (const Monomial& m : monomials_of_degree(4, 3)) I.gens.push_back(Polynomial<K>::monomial(m, dom));
    return Ideal<K>(ctx, buchberger(I).elements);
}

template <class K>
PfaffianReport<K> salmon_turnbull_pfaffian(const Ideal<K>& I) {
    if (I.nvars() != 4) throw PreconditionError("Salmon-Turnbull Pfaffian: needs 4 variables");
    guard_characteristic<K>(I.dom);
    for (const auto& g : I.gens)
        if (!g.is_homogeneous()) throw PreconditionError("Salmon-Turnbull Pfaffian: the ideal must be homogeneous");
    const GroebnerBasis<K> G = buchberger(I);
    if (!has_finite_colength(G)) throw PreconditionError("Salmon-Turnbull Pfaffian: Hilbert function is not (1,4,3)");
    const auto lambda = quotient_basis(G);
    std::vector<Monomial> cobasis;
    int linear = 0;
    for (const Monomial& m : lambda) {
        if (m.degree() == 1) ++linear;
        if (m.degree() == 2) cobasis.push_back(m);
        if (m.degree() > 2) throw PreconditionError("Salmon-Turnbull Pfaffian: Hilbert function is not (1,4,3)");
    }
    if (linear != 4 || cobasis.size() != 3) throw PreconditionError("Salmon-Turnbull Pfaffian: Hilbert function is not (1,4,3)");

    PfaffianReport<K> R;
    R.cobasis = cobasis;
    const auto dom = I.dom;
    const auto V = perp(I, 2);
    // Q_i in span(V) with <m_j, Q_i> = 2 delta_ij
    Mat<K> pairing(3, 3);
    for (Index j = 0; j < 3; ++j)
        for (Index v = 0; v < 3; ++v)
            pairing(j, v) = apply_operator(Polynomial<K>::monomial(cobasis[static_cast<std::size_t>(j)], dom), V[static_cast<std::size_t>(v)]).coeff(Monomial(4));
    for (Index i = 0; i < 3; ++i) {
        Vec<K> rhs(3);
        for (Index j = 0; j < 3; ++j) rhs(j) = dom.from_integer(i == j ? 2 : 0);
        const auto c = solve(pairing, rhs);
        if (!c) throw std::logic_error("Salmon-Turnbull Pfaffian: cobasis is not dual to I_2^perp");
        Polynomial<K> q(4, dom);
        for (Index v = 0; v < 3; ++v) q += V[static_cast<std::size_t>(v)].scaled((*c)(v));
        R.Q.push_back(q);
    }
    const K half = K(dom.from_integer(1)) / dom.from_integer(2);
    for (const auto& q : R.Q) {
        Mat<K> A = zeros<K>(4, 4);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                const K c = q.coeff(Monomial::variable(4, a) * Monomial::variable(4, b));
                A(a, b) = a == b ? c : c * half;
            }
        R.A.push_back(A);
    }
    R.block = zeros<K>(12, 12);
    const auto place = [&](int bi, int bj, const Mat<K>& M, int sign) {
        for (Index a = 0; a < 4; ++a)
            for (Index b = 0; b < 4; ++b) R.block(4 * bi + a, 4 * bj + b) = sign > 0 ? M(a, b) : K(-M(a, b));
    };
    place(0, 1, R.A[0], 1);
    place(0, 2, R.A[1], -1);
    place(1, 0, R.A[0], -1);
    place(1, 2, R.A[2], 1);
    place(2, 0, R.A[1], 1);
    place(2, 1, R.A[2], -1);

    // coordinates of x_j x_j' in S_2 / I_2 against m_1, m_2, m_3, via the pairing
    R.intrinsic = zeros<K>(12, 12);
    const int m_of_block[3] = {2, 1, 0};
    for (int bi = 0; bi < 3; ++bi)
        for (int bj = 0; bj < 3; ++bj) {
            const int i = m_of_block[bi], ip = m_of_block[bj];
            if (i == ip) continue;
            const int other = 3 - i - ip;
            // sign of (0,1,2) -> (other, i, ip)
            const int perm[3] = {other, i, ip};
            int inversions = 0;
            for (int u = 0; u < 3; ++u)
                for (int v = u + 1; v < 3; ++v) inversions += perm[u] > perm[v];
            const K sign = dom.from_integer(inversions % 2 ? -1 : 1);
            for (int j = 0; j < 4; ++j)
                for (int jp = 0; jp < 4; ++jp) {
                    const auto prod = Polynomial<K>::monomial(Monomial::variable(4, j) * Monomial::variable(4, jp), dom);
                    const K coord = apply_operator(prod, R.Q[static_cast<std::size_t>(other)]).coeff(Monomial(4)) * half;
                    R.intrinsic(4 * bi + j, 4 * bj + jp) = coord * sign;
                }
        }
    R.pfaffian_block = pfaffian(R.block);
    R.pfaffian_intrinsic = pfaffian(R.intrinsic);
    R.vanishes = is_zero(R.pfaffian_block);
    if (R.vanishes != is_zero(R.pfaffian_intrinsic)) throw std::logic_error("Salmon-Turnbull Pfaffian: presentations disagree");
    return R;
}

template <class K>
PfaffianReport<K> salmon_turnbull_pfaffian(const std::vector<Polynomial<K>>& V, const VariableContext& ctx) {
    return salmon_turnbull_pfaffian(ideal_of_dual_quadrics(V, ctx));
}

template <class K>
Ideal<K> project_to_graded(const Ideal<K>& I) {
    if (I.nvars() != 4) throw PreconditionError("project_to_graded: needs 4 variables");
    const auto A = multiplication_operators(buchberger(I));
    if (A.size() != 8) throw PreconditionError("project_to_graded: colength is not 8");
    const auto centred = translate_ideal(I, centroid(A));
    const auto P = initial_ideal(centred, {1, 1, 1, 1});
    if (graded_hilbert_function(P) != HilbertFunction{1, 4, 3}) throw PreconditionError("project_to_graded: Hilbert function is not (1,4,3)");
    return P;
}

template <class K>
Ideal<K> change_coordinates(const Ideal<K>& I, const Mat<K>& g) {
    const int d = I.nvars();
    if (g.rows() != d || g.cols() != d) throw PreconditionError("change_coordinates: matrix has the wrong size");
    if (is_zero(determinant(g))) throw PreconditionError("change_coordinates: matrix is singular");
    std::vector<Polynomial<K>> images;
    for (int i = 0; i < d; ++i) {
        Polynomial<K> f(d, I.dom);
        for (int j = 0; j < d; ++j)
            if (!is_zero(g(i, j))) f += I.var(j).scaled(g(i, j));
        images.push_back(f);
    }
    std::vector<Polynomial<K>> gens;
    for (const auto& p : I.gens) gens.push_back(p.substitute(images));
    return I.with_generators(gens);
}

template <class K>
SmoothabilityVerdict<K> classify_smoothable(const Ideal<K>& I) {
    guard_characteristic<K>(I.dom);
    const GroebnerBasis<K> G = buchberger(I);
    if (!has_finite_colength(G)) throw PreconditionError("classify_smoothable: the ideal does not have finite colength");
    const auto n = quotient_basis(G).size();
    if (n > 8) throw PreconditionError("classify_smoothable: colength " + std::to_string(n) + " is out of theorem range (at most 8)");
    SmoothabilityVerdict<K> v;
    v.evidence.push_back("colength " + std::to_string(n));
    const auto split = split_rational_support(I);
    if (!split.ok()) {
        v.outcome = Outcome::Indeterminate;
        v.reason = *split.indeterminate;
        v.evidence.push_back(v.reason);
        return v;
    }
    v.evidence.push_back("support: " + std::to_string(split.pieces.size()) + " rational point(s)");
    v.outcome = Outcome::Smoothable;
    for (const auto& piece : split.pieces) {
        const auto len = colength(piece.ideal);
        if (len <= 7) {
            v.evidence.push_back("local piece of colength " + std::to_string(len) + " <= 7: smoothable");
            continue;
        }
        const auto A = multiplication_operators(buchberger(piece.ideal));
        const auto local = translate_ideal(piece.ideal, centroid(A));
        v.evidence.push_back("local piece of colength 8 recentred at its centroid");
        const auto h = local_hilbert_function(local);
        v.hilbert_function = h;
        v.evidence.push_back("local Hilbert function " + to_string(h));
        if (h != HilbertFunction{1, 4, 3}) {
            v.evidence.push_back("Hilbert function is not (1,4,3): smoothable");
            continue;
        }
        Ideal<K> reduced = local;
        if (local.nvars() != 4) {
            reduced = embedding_reduction(local);
            v.evidence.push_back("embedding dimension reduced from " + std::to_string(local.nvars()) + " to 4 variables");
        }
        const auto graded = project_to_graded(reduced);
        const auto report = salmon_turnbull_pfaffian(graded);
        v.pfaffian = report.pfaffian_block;
        v.evidence.push_back("Salmon-Turnbull Pfaffian " + scalar_text(report.pfaffian_block));
        if (report.vanishes) {
            v.evidence.push_back("Pfaffian vanishes: smoothable");
        } else {
            v.outcome = Outcome::NotSmoothable;
            v.reason = "Pfaffian \u2260 0";
            v.evidence.push_back("Pfaffian does not vanish: not smoothable");
        }
    }
    return v;
}

#define HILBCHECK_INSTANTIATE_SMOOTH(K)                                                                              \
    template Ideal<K> ideal_of_dual_quadrics<K>(const std::vector<Polynomial<K>>&, const VariableContext&);          \
    template PfaffianReport<K> salmon_turnbull_pfaffian<K>(const Ideal<K>&);                                         \
    template PfaffianReport<K> salmon_turnbull_pfaffian<K>(const std::vector<Polynomial<K>>&, const VariableContext&); \
    template Ideal<K> project_to_graded<K>(const Ideal<K>&);                                                         \
    template Ideal<K> change_coordinates<K>(const Ideal<K>&, const Mat<K>&);                                          \
    template SmoothabilityVerdict<K> classify_smoothable<K>(const Ideal<K>&);

HILBCHECK_INSTANTIATE_SMOOTH(Rational)
HILBCHECK_INSTANTIATE_SMOOTH(Fp)
HILBCHECK_INSTANTIATE_SMOOTH(RatFunc)

}  // namespace hilbcheck
