#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hilbcheck/groebner/groebner.hpp"

namespace hilbcheck {

/// S/I for a zero-dimensional I, as commuting multiplication matrices in the
/// basis of standard monomials. X[i](:, j) holds x_i * lambda[j] mod I.
template <class K>
struct LocalAlgebraModel {
    GroebnerBasis<K> basis;
    std::vector<Monomial> lambda;
    std::vector<Mat<K>> X;
    bool origin = false;  // I is primary to the maximal ideal of 0

    std::size_t size() const { return lambda.size(); }
    int nvars() const { return static_cast<int>(X.size()); }
};

using HilbertFunction = std::vector<int>;

std::string to_string(const HilbertFunction& h);

template <class K>
LocalAlgebraModel<K> multiplication_operators(const GroebnerBasis<K>& G);

/// (tr X_1 / n, ..., tr X_d / n).
template <class K>
std::vector<K> centroid(const LocalAlgebraModel<K>& A);

/// Image of I under x_i -> x_i + a_i; the support moves by -a, so
/// translating by the centroid recenters.
template <class K>
Ideal<K> translate_ideal(const Ideal<K>& I, const std::vector<K>& a);

template <class K>
bool is_primary_at_origin(const Ideal<K>& I);

/// h_i = dim m^i / m^{i+1} of S/I for I primary at the origin.
template <class K>
HilbertFunction local_hilbert_function(const Ideal<K>& I);

/// Hilbert function of S/I for a homogeneous ideal of finite colength.
template <class K>
HilbertFunction graded_hilbert_function(const Ideal<K>& I);

/// Ideal in h_1 = dim m/m^2 of the original variables presenting the same
/// local algebra: variables that occur as pivots of linear parts of I are
/// eliminated.
template <class K>
Ideal<K> embedding_reduction(const Ideal<K>& I);

template <class K>
struct LocalPiece {
    std::vector<K> point;
    Ideal<K> ideal;  // primary to the maximal ideal of `point`
};

template <class K>
struct SupportSplit {
    std::vector<LocalPiece<K>> pieces;  // sorted by point
    std::optional<std::string> indeterminate;

    bool ok() const { return !indeterminate.has_value(); }
};

/// Primary decomposition of a zero-dimensional ideal whose support is
/// rational. Anything else (an eigenvalue outside the base field) comes back
/// as an indeterminate outcome.
template <class K>
SupportSplit<K> split_rational_support(const Ideal<K>& I);

/// Hilbert functions of all monomial ideals of colength n in d variables
/// that are primary at the origin.
std::set<HilbertFunction> enumerate_local_hfs(int d, int n);

}  // namespace hilbcheck
