#pragma once

// Exact dense linear algebra on Eigen containers.

#include <Eigen/Core>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hilbcheck/kernel/errors.hpp"
#include "hilbcheck/kernel/scalar_traits.hpp"

namespace hilbcheck {

using Index = Eigen::Index;

template <class K>
using Mat = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;
template <class K>
using Vec = Eigen::Matrix<K, Eigen::Dynamic, 1>;

template <class K>
Mat<K> zeros(Index rows, Index cols) {
    Mat<K> m(rows, cols);
    m.setConstant(K(0));
    return m;
}

template <class K>
Mat<K> identity(Index n) {
    Mat<K> m = zeros<K>(n, n);
    for (Index i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
}

/// Exact product; avoids Eigen's blocked kernels, which assume cheap scalars.
template <class K>
Mat<K> mul(const Mat<K>& a, const Mat<K>& b) {
    if (a.cols() != b.rows()) throw PreconditionError("matrix product: inner dimensions differ");
    Mat<K> r = zeros<K>(a.rows(), b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index k = 0; k < a.cols(); ++k) {
            if (is_zero(a(i, k))) continue;
            for (Index j = 0; j < b.cols(); ++j)
                if (!is_zero(b(k, j))) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

template <class K>
bool is_zero_matrix(const Mat<K>& a) {
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            if (!is_zero(a(i, j))) return false;
    return true;
}

template <class K>
struct Echelon {
    Mat<K> rref;
    std::vector<Index> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form over a field.
template <class K>
Echelon<K> reduced_row_echelon(Mat<K> a) {
    static_assert(is_field_v<K>, "reduced_row_echelon needs a field");
    Echelon<K> out;
    Index row = 0;
    for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
        Index piv = -1;
        for (Index i = row; i < a.rows(); ++i)
            if (!is_zero(a(i, col))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row) a.row(piv).swap(a.row(row));
        const K inv = K(1) / a(row, col);
        for (Index j = col; j < a.cols(); ++j)
            if (!is_zero(a(row, j))) a(row, j) *= inv;
        for (Index i = 0; i < a.rows(); ++i) {
            if (i == row || is_zero(a(i, col))) continue;
            const K f = a(i, col);
            for (Index j = col; j < a.cols(); ++j)
                if (!is_zero(a(row, j))) a(i, j) -= f * a(row, j);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.rref = std::move(a);
    return out;
}

template <class K>
Index mat_rank(const Mat<K>& a) {
    return static_cast<Index>(reduced_row_echelon(a).pivots.size());
}

template <>
Index mat_rank<Rational>(const Mat<Rational>& a);

/// Columns form a basis of the right kernel {v : a v = 0}.
template <class K>
Mat<K> kernel_basis(const Mat<K>& a) {
    const auto e = reduced_row_echelon(a);
    std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
    for (Index c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<Index> free;
    for (Index c = 0; c < a.cols(); ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
    Mat<K> ker = zeros<K>(a.cols(), static_cast<Index>(free.size()));
    for (std::size_t k = 0; k < free.size(); ++k) {
        const Index f = free[k];
        ker(f, static_cast<Index>(k)) = K(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            ker(e.pivots[r], static_cast<Index>(k)) = -e.rref(static_cast<Index>(r), f);
    }
    return ker;
}

/// Some solution of a x = b, or nullopt if the system is inconsistent.
template <class K>
std::optional<Vec<K>> solve(const Mat<K>& a, const Vec<K>& b) {
    if (a.rows() != b.rows()) throw PreconditionError("solve: right-hand side has the wrong length");
    Mat<K> aug(a.rows(), a.cols() + 1);
    aug.leftCols(a.cols()) = a;
    aug.col(a.cols()) = b;
    const auto e = reduced_row_echelon(aug);
    Vec<K> x(a.cols());
    x.setConstant(K(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        const Index c = e.pivots[r];
        if (c == a.cols()) return std::nullopt;
        x(c) = e.rref(static_cast<Index>(r), a.cols());
    }
    return x;
}

/// Determinant by fraction-free (Bareiss) elimination; works over any ring
/// with exact division.
template <class K>
K determinant(Mat<K> a) {
    if (a.rows() != a.cols()) throw PreconditionError("determinant of a non-square matrix");
    const Index n = a.rows();
    if (n == 0) return K(1);
    K prev(1);
    bool negate = false;
    for (Index k = 0; k + 1 < n; ++k) {
        if (is_zero(a(k, k))) {
            Index piv = -1;
            for (Index i = k + 1; i < n; ++i)
                if (!is_zero(a(i, k))) {
                    piv = i;
                    break;
                }
            if (piv < 0) return K(0);
            a.row(piv).swap(a.row(k));
            negate = !negate;
        }
        for (Index i = k + 1; i < n; ++i)
            for (Index j = k + 1; j < n; ++j) a(i, j) = exact_div(K(a(i, j) * a(k, k) - a(i, k) * a(k, j)), prev);
        prev = a(k, k);
    }
    K d = a(n - 1, n - 1);
    return negate ? K(-d) : d;
}

/// Pfaffian of a skew-symmetric matrix over a field, normalized so that
/// pf([[0, a], [-a, 0]]) = a.
template <class K>
K pfaffian(Mat<K> a) {
    static_assert(is_field_v<K>, "pfaffian needs a field");
    if (a.rows() != a.cols()) throw PreconditionError("pfaffian of a non-square matrix");
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = i; j < a.cols(); ++j)
            if (!(a(i, j) == K(-a(j, i)))) throw PreconditionError("pfaffian of a matrix that is not skew-symmetric");
    Index n = a.rows();
    if (n % 2 == 1) return K(0);
    K result(1);
    while (n > 0) {
        Index piv = -1;
        for (Index j = 1; j < n; ++j)
            if (!is_zero(a(0, j))) {
                piv = j;
                break;
            }
        if (piv < 0) return K(0);
        if (piv != 1) {
            a.row(piv).swap(a.row(1));
            a.col(piv).swap(a.col(1));
            result = -result;
        }
        const K p = a(0, 1);
        result *= p;
        const Index m = n - 2;
        Mat<K> s(m, m);
        for (Index i = 0; i < m; ++i)
            for (Index k = 0; k < m; ++k) {
                K v = a(i + 2, k + 2);
                const K corr = a(i + 2, 0) * a(1, k + 2) - a(i + 2, 1) * a(0, k + 2);
                if (!is_zero(corr)) v += corr / p;
                s(i, k) = v;
            }
        a = std::move(s);
        n = m;
    }
    return result;
}

/// Valuation at t = 0 of the gcd of the maximal minors of a matrix over
/// Q(t) (the sum of its invariant-factor valuations over Q[t]_(t)).
/// nullopt when the matrix is rank deficient, i.e. all maximal minors vanish.
std::optional<int> t_adic_minor_valuation(const Mat<RatFunc>& a);

/// Valuation at t = 0 of sampled_minor_gcd; an upper bound for
/// t_adic_minor_valuation that is usually sharp. nullopt if every sampled
/// minor vanishes.
std::optional<int> sampled_minor_valuation(const Mat<UPoly>& a, int samples, std::uint64_t seed);

/// gcd (positive leading coefficient) of `samples` distinct random nonzero
/// maximal minors, drawing at most 256 * samples column sets; zero if every
/// draw vanished. `attempts` receives the number of draws.
UPoly sampled_minor_gcd(const Mat<UPoly>& a, int samples, std::uint64_t seed, int* attempts = nullptr);

/// Entrywise conversion of a Q(t) matrix with polynomial entries into Z[t]
/// after clearing denominators row by row (which does not change minor
/// valuations). Throws if an entry has a nonconstant denominator.
Mat<UPoly> clear_denominators(const Mat<RatFunc>& a);

}  // namespace hilbcheck
