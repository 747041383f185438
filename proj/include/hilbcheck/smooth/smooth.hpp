#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hilbcheck/artin/artin.hpp"

namespace hilbcheck {

/// Salmon-Turnbull data of a homogeneous (1,4,3) ideal in 4 variables.
///
/// cobasis m_1, m_2, m_3 are the grevlex standard monomials of degree 2 and
/// Q_1, Q_2, Q_3 the basis of I_2^perp with <m_j, Q_i> = 2 delta_ij, so that
/// Q_i = y^t A_i y. block = [[0, A1, -A2], [-A1, 0, A3], [A2, -A3, 0]];
/// intrinsic is <x_j (x) m_i, x_j' (x) m_i'> = (x_j x_j') ^ m_i ^ m_i' in the
/// basis x_1 (x) m_3, ..., x_4 (x) m_3, x_1 (x) m_2, ..., x_4 (x) m_1.
template <class K>
struct PfaffianReport {
    std::vector<Monomial> cobasis;
    std::vector<Polynomial<K>> Q;  // dual quadrics
    std::vector<Mat<K>> A;
    Mat<K> block;
    Mat<K> intrinsic;
    K pfaffian_block;
    K pfaffian_intrinsic;
    bool vanishes = false;
};

template <class K>
PfaffianReport<K> salmon_turnbull_pfaffian(const Ideal<K>& I);

/// From the 3-dimensional space V = I_2^perp spanned by `V` (dual quadrics);
/// `ctx` is the primal context.
template <class K>
PfaffianReport<K> salmon_turnbull_pfaffian(const std::vector<Polynomial<K>>& V, const VariableContext& ctx);

/// The homogeneous ideal generated by I_2 and S_3 for V = span(V).
template <class K>
Ideal<K> ideal_of_dual_quadrics(const std::vector<Polynomial<K>>& V, const VariableContext& ctx);

/// Recenter I at its centroid and take the (1,...,1)-initial ideal, checking
/// that the result has Hilbert function (1,4,3).
template <class K>
Ideal<K> project_to_graded(const Ideal<K>& I);

/// Image of I under x -> g x (x_i replaced by sum_j g_ij x_j).
template <class K>
Ideal<K> change_coordinates(const Ideal<K>& I, const Mat<K>& g);

enum class Outcome { Smoothable, NotSmoothable, Indeterminate };

std::string to_string(Outcome o);

template <class K>
struct SmoothabilityVerdict {
    Outcome outcome = Outcome::Indeterminate;
    std::string reason;
    std::vector<std::string> evidence;
    std::optional<HilbertFunction> hilbert_function;  // of the colength-8 local piece, if any
    std::optional<K> pfaffian;
};

/// Smoothability of a zero-dimensional ideal of colength at most 8.
template <class K>
SmoothabilityVerdict<K> classify_smoothable(const Ideal<K>& I);

}  // namespace hilbcheck
