#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hilbcheck/groebner/groebner.hpp"

namespace hilbcheck {

/// dim_k Hom_S(I, S/I).
template <class K>
std::size_t tangent_dimension(const Ideal<K>& I);

/// Degree-e part of Hom_S(I, S/I) for homogeneous I.
template <class K>
std::size_t graded_tangent_dimension(const Ideal<K>& I, int e);

/// All nonzero graded pieces of Hom_S(I, S/I) for homogeneous I.
template <class K>
std::map<int, std::size_t> graded_tangent_dimensions(const Ideal<K>& I);

/// Linear algebra of Hom(I, S/I)_{-1} for a homogeneous ideal in 4 variables
/// with Hilbert function (1,4,3) generated by its 7 quadrics.
///
/// psi has rows (syzygy j, cobasis c) -> 3j + c and columns
/// (quadric i, variable a) -> 4i + a; column 4i + a is the map q_i -> x_a.
/// Each t_a (q -> dq/dx_a) is a column of T and lies in ker psi; hbar is
/// psi restricted to 24 coordinate columns complementary to span(T).
template <class K>
struct TangentMachine143 {
    VariableContext ctx;
    std::vector<Polynomial<K>> quadrics;
    std::vector<std::vector<Polynomial<K>>> syzygies;  // 8 x 7 linear forms
    std::vector<Monomial> cobasis;                      // 3 monomials spanning S_2 / I_2
    Mat<K> psi;
    Mat<K> T;
    std::vector<Index> quotient_columns;
    Mat<K> hbar;
    std::size_t hom_minus1 = 0;

    std::size_t hbar_corank() const { return 24 - static_cast<std::size_t>(mat_rank(hbar)); }
    bool singular() const { return hom_minus1 >= 5; }
};

/// From an ideal: the quadrics are the degree-2 part of its reduced basis,
/// the syzygies come from linear_syzygies and the cobasis is the grevlex
/// standard monomials of degree 2.
template <class K>
TangentMachine143<K> build_tangent_machine(const Ideal<K>& I);

/// Explicit quadrics, syzygies (empty: computed) and cobasis (empty: grevlex
/// standard monomials).
template <class K>
TangentMachine143<K> build_tangent_machine(const VariableContext& ctx, const std::vector<Polynomial<K>>& quadrics,
                                           std::vector<std::vector<Polynomial<K>>> syzygies = {}, std::vector<Monomial> cobasis = {});

/// The rational curve I_t = (x1^2, x2^2, x3^2, x4^2, x1x2, x2x3 + t x3x4, x1x4 + t x3x4) over Q(t).
Ideal<RatFunc> curve_ideal();

/// The eight linear syzygies sigma_1..sigma_8 of I_t, valid for every finite t.
std::vector<std::vector<Polynomial<RatFunc>>> curve_syzygies();

/// The machine of I_t with the syzygies above and cobasis x1x3, x2x4, x3x4.
TangentMachine143<RatFunc> curve_machine();

struct CurveMultiplicity {
    std::optional<int> valuation;  // nullopt: maximal minors vanish identically
    UPoly sampled_gcd;
    int samples = 0;
    int attempts = 0;  // column sets drawn to find `samples` nonzero minors
    std::uint64_t seed = 0;

    std::optional<int> sampled_valuation() const {
        if (sampled_gcd.is_zero()) return std::nullopt;
        return sampled_gcd.order();
    }
};

inline constexpr std::uint64_t kDefaultMinorSeed = 20240601;

/// t-adic valuation of the ideal of maximal minors of psi, plus the gcd of a
/// seeded sample of maximal minors.
CurveMultiplicity minor_multiplicity(const Mat<RatFunc>& psi, int samples = 32, std::uint64_t seed = kDefaultMinorSeed);

/// minor_multiplicity of the curve machine's psi.
CurveMultiplicity curve_multiplicity(int samples = 32, std::uint64_t seed = kDefaultMinorSeed);

}  // namespace hilbcheck
