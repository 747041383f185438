#include "hilbcheck/tangent/tangent.hpp"

#include <algorithm>
#include <unordered_map>

#include "hilbcheck/artin/artin.hpp"
#include "hilbcheck/poly/parser.hpp"

namespace hilbcheck {

namespace {

// Constraint matrix of Hom_S(I, S/I): unknowns phi(g_k) = sum_j u_kj lambda_j,
// one block row of n equations per Schreyer syzygy.
template <class K>
struct HomSystem {
    Mat<K> A;
    std::vector<int> column_degree;  // deg lambda_j - deg g_k, for homogeneous I
};

template <class K>
class OperatorCache {
public:
    explicit OperatorCache(const LocalAlgebraModel<K>& A) : A_(A) {}

    const Mat<K>& of(const Monomial& m) {
        if (auto it = cache_.find(m); it != cache_.end()) return it->second;
        Mat<K> r;
        if (m.is_one()) {
            r = identity<K>(static_cast<Index>(A_.size())) * K(A_.basis.dom.from_integer(1));
        } else {
            int i = 0;
            while (m[i] == 0) ++i;
            r = mul(A_.X[static_cast<std::size_t>(i)], of(m / Monomial::variable(m.nvars(), i)));
        }
        return cache_.emplace(m, std::move(r)).first->second;
    }

    Mat<K> of(const Polynomial<K>& f) {
        const auto n = static_cast<Index>(A_.size());
        Mat<K> r = zeros<K>(n, n);
        for (const auto& [m, c] : f.terms()) r += of(m) * c;
        return r;
    }

private:
    const LocalAlgebraModel<K>& A_;
    std::unordered_map<Monomial, Mat<K>, MonomialHash> cache_;
};

template <class K>
HomSystem<K> hom_system(const Ideal<K>& I) {
    const GroebnerBasis<K> G = buchberger(I);
    const auto A = multiplication_operators(G);
    const auto syz = schreyer_syzygies(G);
    const auto n = static_cast<Index>(A.size());
    const auto r = static_cast<Index>(G.elements.size());
    HomSystem<K> out;
    out.A = zeros<K>(static_cast<Index>(syz.size()) * n, r * n);
    OperatorCache<K> ops(A);
    for (std::size_t s = 0; s < syz.size(); ++s)
        for (Index k = 0; k < r; ++k) {
            const auto& a = syz.relations[s][static_cast<std::size_t>(k)];
            if (a.is_zero()) continue;
            out.A.block(static_cast<Index>(s) * n, k * n, n, n) = ops.of(a);
        }
    for (Index k = 0; k < r; ++k)
        for (Index j = 0; j < n; ++j)
            out.column_degree.push_back(A.lambda[static_cast<std::size_t>(j)].degree() - G.elements[static_cast<std::size_t>(k)].total_degree());
    return out;
}

template <class K>
void require_homogeneous(const Ideal<K>& I) {
    for (const auto& g : I.gens)
        if (!g.is_homogeneous()) throw PreconditionError("graded tangent dimension of a non-homogeneous ideal");
}

template <class K>
std::size_t restricted_kernel_dimension(const HomSystem<K>& h, int e) {
    std::vector<Index> cols;
    for (std::size_t c = 0; c < h.column_degree.size(); ++c)
        if (h.column_degree[c] == e) cols.push_back(static_cast<Index>(c));
    if (cols.empty()) return 0;
    Mat<K> B(h.A.rows(), static_cast<Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) B.col(static_cast<Index>(c)) = h.A.col(cols[c]);
    return cols.size() - static_cast<std::size_t>(mat_rank(B));
}

template <class K>
Mat<K> inverse(const Mat<K>& B, const typename K::Domain& dom) {
    const Index n = B.rows();
    Mat<K> aug(n, 2 * n);
    aug.leftCols(n) = B;
    aug.rightCols(n) = identity<K>(n) * K(dom.from_integer(1));
    const auto e = reduced_row_echelon(aug);
    if (static_cast<Index>(e.pivots.size()) < n || e.pivots[static_cast<std::size_t>(n - 1)] >= n) throw PreconditionError("matrix is singular");
    return e.rref.rightCols(n);
}

}  // namespace

template <class K>
std::size_t tangent_dimension(const Ideal<K>& I) {
    const GroebnerBasis<K> G = buchberger(I);
    if (!has_finite_colength(G)) throw DomainError("the ideal does not have finite colength");
    if (G.is_unit()) return 0;
    const auto h = hom_system(I);
    return static_cast<std::size_t>(h.A.cols() - mat_rank(h.A));
}

template <class K>
std::size_t graded_tangent_dimension(const Ideal<K>& I, int e) {
    require_homogeneous(I);
    if (!has_finite_colength(buchberger(I))) throw DomainError("the ideal does not have finite colength");
    return restricted_kernel_dimension(hom_system(I), e);
}

template <class K>
std::map<int, std::size_t> graded_tangent_dimensions(const Ideal<K>& I) {
    require_homogeneous(I);
    const GroebnerBasis<K> G = buchberger(I);
    if (!has_finite_colength(G)) throw DomainError("the ideal does not have finite colength");
    std::map<int, std::size_t> out;
    if (G.is_unit()) return out;
    const auto h = hom_system(I);
    const auto [lo, hi] = std::minmax_element(h.column_degree.begin(), h.column_degree.end());
    for (int e = *lo; e <= *hi; ++e)
        if (const auto dim = restricted_kernel_dimension(h, e)) out[e] = dim;
    return out;
}

template <class K>
TangentMachine143<K> build_tangent_machine(const VariableContext& ctx, const std::vector<Polynomial<K>>& quadrics,
                                           std::vector<std::vector<Polynomial<K>>> syzygies, std::vector<Monomial> cobasis) {
    if (ctx.nvars() != 4) throw PreconditionError("tangent machine: needs 4 variables");
    if (quadrics.size() != 7) throw PreconditionError("tangent machine: needs exactly 7 quadrics");
    const auto dom = make_domain<K>(ctx.field);
    const Ideal<K> I(ctx, quadrics);
    if (I.gens.size() != 7) throw PreconditionError("tangent machine: a quadric is zero");
    TangentMachine143<K> M;
    M.ctx = ctx;
    M.quadrics = quadrics;

    const GroebnerBasis<K> G = buchberger(I);
    if (!has_finite_colength(G) || quotient_basis(G).size() != 8) throw PreconditionError("tangent machine: requires cubic generator (the quadrics do not cut out a (1,4,3) ideal)");
    if (syzygies.empty()) syzygies = linear_syzygies(quadrics, ctx).relations;
    if (syzygies.size() != 8) throw PreconditionError("tangent machine: needs 8 linear syzygies");
    for (const auto& rel : syzygies) {
        Polynomial<K> sum(4, dom);
        for (std::size_t i = 0; i < 7; ++i) {
            if (!rel[i].is_zero() && (!rel[i].is_homogeneous() || rel[i].total_degree() != 1)) throw PreconditionError("tangent machine: syzygy entries must be linear forms");
            sum += rel[i] * quadrics[i];
        }
        if (!sum.is_zero()) throw PreconditionError("tangent machine: supplied relation is not a syzygy");
    }
    M.syzygies = syzygies;
    if (cobasis.empty())
        for (const Monomial& m : quotient_basis(G))
            if (m.degree() == 2) cobasis.push_back(m);
    if (cobasis.size() != 3) throw PreconditionError("tangent machine: cobasis must have 3 monomials");
    M.cobasis = cobasis;

    // coordinates of S_2 = I_2 + span(cobasis)
    const auto mons = monomials_of_degree(4, 2);
    std::unordered_map<Monomial, Index, MonomialHash> pos;
    for (std::size_t c = 0; c < mons.size(); ++c) pos[mons[c]] = static_cast<Index>(c);
    Mat<K> B = zeros<K>(10, 10);
    for (Index i = 0; i < 7; ++i)
        for (const auto& [m, c] : quadrics[static_cast<std::size_t>(i)].terms()) {
            if (m.degree() != 2) throw PreconditionError("tangent machine: inputs must be quadratic forms");
            B(pos.at(m), i) = c;
        }
    for (Index c = 0; c < 3; ++c) B(pos.at(cobasis[static_cast<std::size_t>(c)]), 7 + c) = dom.from_integer(1);
    const Mat<K> coords = inverse(B, dom).bottomRows(3);

    M.psi = zeros<K>(24, 28);
    for (Index j = 0; j < 8; ++j)
        for (Index i = 0; i < 7; ++i) {
            const auto& l = syzygies[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            if (l.is_zero()) continue;
            for (int a = 0; a < 4; ++a) {
                const auto prod = l * Polynomial<K>::variable(4, a, dom);
                for (const auto& [m, c] : prod.terms())
                    for (Index cb = 0; cb < 3; ++cb) M.psi(3 * j + cb, 4 * i + a) += coords(cb, pos.at(m)) * c;
            }
        }

    M.T = zeros<K>(28, 4);
    for (Index i = 0; i < 7; ++i)
        for (int a = 0; a < 4; ++a) {
            const auto dq = quadrics[static_cast<std::size_t>(i)].derivative(a);
            for (int b = 0; b < 4; ++b) M.T(4 * i + b, a) = dq.coeff(Monomial::variable(4, b));
        }
    if (!is_zero_matrix(mul(M.psi, M.T))) throw std::logic_error("tangent machine: the t_i are not in ker psi");

    const auto pivots = reduced_row_echelon(Mat<K>(M.T.transpose())).pivots;
    if (pivots.size() != 4) throw std::logic_error("tangent machine: t_1..t_4 are dependent");
    for (Index c = 0; c < 28; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) M.quotient_columns.push_back(c);
    M.hbar = Mat<K>(24, 24);
    for (std::size_t c = 0; c < M.quotient_columns.size(); ++c) M.hbar.col(static_cast<Index>(c)) = M.psi.col(M.quotient_columns[c]);
    M.hom_minus1 = 28 - static_cast<std::size_t>(mat_rank(M.psi));
    return M;
}

template <class K>
TangentMachine143<K> build_tangent_machine(const Ideal<K>& I) {
    if (I.nvars() != 4) throw PreconditionError("tangent machine: needs 4 variables");
    for (const auto& g : I.gens)
        if (!g.is_homogeneous()) throw PreconditionError("tangent machine: the ideal must be homogeneous");
    const GroebnerBasis<K> G = buchberger(I);
    if (!has_finite_colength(G) || quotient_basis(G).size() != 8) throw PreconditionError("tangent machine: Hilbert function is not (1,4,3)");
    std::vector<Polynomial<K>> quadrics;
    for (const auto& g : G.elements) {
        if (g.total_degree() < 2) throw PreconditionError("tangent machine: Hilbert function is not (1,4,3)");
        if (g.total_degree() == 2) quadrics.push_back(g);
    }
    if (quadrics.size() != 7) throw PreconditionError("tangent machine: Hilbert function is not (1,4,3)");
    if (!ideal_equal(I.with_generators(quadrics), I)) throw PreconditionError("tangent machine: requires cubic generator");
    return build_tangent_machine(I.ctx, quadrics);
}

Ideal<RatFunc> curve_ideal() {
    const auto ctx = VariableContext::standard(FieldSpec::function_field(), 4);
    Ideal<RatFunc> I(ctx);
    for (const char* q : {"x1^2", "x2^2", "x3^2", "x4^2", "x1*x2", "x2*x3 + t*x3*x4", "x1*x4 + t*x3*x4"})
        I.gens.push_back(parse_polynomial<RatFunc>(q, ctx));
    return I;
}

std::vector<std::vector<Polynomial<RatFunc>>> curve_syzygies() {
    const auto ctx = VariableContext::standard(FieldSpec::function_field(), 4);
    // coefficient of q_1..q_7 in sigma_1..sigma_8
    const std::vector<std::vector<std::string>> table = {
        {"x2", "0", "0", "0", "-x1", "0", "0"},
        {"x4", "0", "-t^2*x4", "0", "0", "0", "-x1 + t*x3"},
        {"0", "x1", "0", "0", "-x2", "0", "0"},
        {"0", "x3", "0", "-t^2*x3", "0", "-x2 + t*x4", "0"},
        {"0", "0", "x2 + t*x4", "0", "0", "-x3", "0"},
        {"0", "0", "0", "x1 + t*x3", "0", "0", "-x4"},
        {"0", "0", "-t^2*x4", "0", "x3", "-x1", "t*x3"},
        {"0", "0", "0", "-t^2*x3", "x4", "t*x4", "-x2"},
    };
    std::vector<std::vector<Polynomial<RatFunc>>> out;
    for (const auto& row : table) {
        std::vector<Polynomial<RatFunc>> rel;
        for (const auto& s : row) rel.push_back(parse_polynomial<RatFunc>(s, ctx));
        out.push_back(std::move(rel));
    }
    return out;
}

TangentMachine143<RatFunc> curve_machine() {
    const auto I = curve_ideal();
    return build_tangent_machine(I.ctx, I.gens, curve_syzygies(), {Monomial({1, 0, 1, 0}), Monomial({0, 1, 0, 1}), Monomial({0, 0, 1, 1})});
}

CurveMultiplicity minor_multiplicity(const Mat<RatFunc>& psi, int samples, std::uint64_t seed) {
    CurveMultiplicity out;
    out.samples = samples;
    out.seed = seed;
    out.valuation = t_adic_minor_valuation(psi);
    out.sampled_gcd = sampled_minor_gcd(clear_denominators(psi), samples, seed, &out.attempts);
    return out;
}

CurveMultiplicity curve_multiplicity(int samples, std::uint64_t seed) { return minor_multiplicity(curve_machine().psi, samples, seed); }

#define HILBCHECK_INSTANTIATE_TANGENT(K)                                                                                            \
    template std::size_t tangent_dimension<K>(const Ideal<K>&);                                                                     \
    template std::size_t graded_tangent_dimension<K>(const Ideal<K>&, int);                                                         \
    template std::map<int, std::size_t> graded_tangent_dimensions<K>(const Ideal<K>&);                                              \
    template TangentMachine143<K> build_tangent_machine<K>(const Ideal<K>&);                                                        \
    template TangentMachine143<K> build_tangent_machine<K>(const VariableContext&, const std::vector<Polynomial<K>>&,                \
                                                           std::vector<std::vector<Polynomial<K>>>, std::vector<Monomial>);

HILBCHECK_INSTANTIATE_TANGENT(Rational)
HILBCHECK_INSTANTIATE_TANGENT(Fp)
HILBCHECK_INSTANTIATE_TANGENT(RatFunc)

}  // namespace hilbcheck
