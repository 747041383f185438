#pragma once

#include <optional>
#include <vector>

#include "hilbcheck/kernel/dense.hpp"
#include "hilbcheck/poly/ideal.hpp"

namespace hilbcheck {

/// Reduced Groebner basis: monic, auto-reduced, sorted by increasing leading
/// monomial.
template <class K>
struct GroebnerBasis {
    VariableContext ctx;
    typename K::Domain dom{};
    OrderPtr order = MonomialOrder::grevlex();
    std::vector<Polynomial<K>> elements;

    int nvars() const { return ctx.nvars(); }
    bool is_unit() const { return elements.size() == 1 && elements[0].is_constant(); }
    Ideal<K> ideal() const { return Ideal<K>(ctx, elements); }
};

/// Relations sum_k relations[r][k] * basis[k] = 0.
template <class K>
struct SyzygyBasis {
    std::vector<std::vector<Polynomial<K>>> relations;
    std::size_t size() const { return relations.size(); }
};

template <class K>
GroebnerBasis<K> buchberger(const Ideal<K>& I, OrderPtr order = MonomialOrder::grevlex());

/// Fully reduced remainder of f modulo G.
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const GroebnerBasis<K>& G);

/// Division of f by G: f = sum q_k G_k + remainder.
template <class K>
struct Division {
    std::vector<Polynomial<K>> quotients;
    Polynomial<K> remainder;
};
template <class K>
Division<K> divide(const Polynomial<K>& f, const std::vector<Polynomial<K>>& basis);

template <class K>
bool has_finite_colength(const GroebnerBasis<K>& G);

/// Standard monomials, increasing in G's order. Throws DomainError for
/// infinite colength.
template <class K>
std::vector<Monomial> quotient_basis(const GroebnerBasis<K>& G);

template <class K>
std::size_t colength(const Ideal<K>& I);

template <class K>
bool ideal_contains(const GroebnerBasis<K>& G, const Polynomial<K>& f) {
    return normal_form(f, G).is_zero();
}

/// w-initial ideal. Nonnegative w: initial forms of a Groebner basis under the
/// w-refined grevlex order. Otherwise I must contain a power of the maximal
/// ideal and the computation is done by linear algebra in a truncation.
template <class K>
Ideal<K> initial_ideal(const Ideal<K>& I, const std::vector<long>& w);

/// Smallest D with m^D contained in I (m the ideal of the origin), or nullopt.
template <class K>
std::optional<int> maximal_ideal_power_in(const Ideal<K>& I);

template <class K>
Ideal<K> intersect(const Ideal<K>& I, const Ideal<K>& J);

/// Ideal in the variables not listed in `eliminate` (kept in their original
/// relative order), generated by I intersected with that subring.
template <class K>
Ideal<K> eliminate(const Ideal<K>& I, const std::vector<int>& vars);

template <class K>
bool ideal_equal(const Ideal<K>& I, const Ideal<K>& J);

template <class K>
SyzygyBasis<K> schreyer_syzygies(const GroebnerBasis<K>& G);

/// Linear syzygies of 7 quadrics in 4 variables whose ideal has Hilbert
/// function (1,4,3): the kernel of S_1^7 -> S_3, always 8-dimensional.
template <class K>
SyzygyBasis<K> linear_syzygies(const std::vector<Polynomial<K>>& quadrics, const VariableContext& ctx);

/// Vanishing ideal of distinct points by Buchberger-Moeller, reduced grevlex basis.
template <class K>
GroebnerBasis<K> points_ideal(const VariableContext& ctx, const std::vector<std::vector<K>>& points);

/// Evaluation matrix [lambda_j(q_i)] (rows: points).
template <class K>
Mat<K> evaluation_matrix(const std::vector<std::vector<K>>& points, const std::vector<Monomial>& lambda, typename K::Domain dom);

/// Chart coordinate c^m_{m'} = Delta_{lambda - m' + m} / Delta_lambda by Cramer's rule.
template <class K>
K delta_ratio(const std::vector<std::vector<K>>& points, const std::vector<Monomial>& lambda, const Monomial& m, const Monomial& mprime,
              typename K::Domain dom);

/// Embed f into a ring with more variables (new ones appended).
template <class K>
Polynomial<K> extend_variables(const Polynomial<K>& f, int nvars);

}  // namespace hilbcheck
