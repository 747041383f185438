#pragma once

#include "test_util.hpp"

namespace testutil {

template <class K = Rational>
Ideal<K> j_quadrics(int d, FieldSpec field = FieldSpec::rationals()) {
    std::vector<std::string> g = {"x1^2", "x1*x2", "x2^2", "x3^2", "x3*x4", "x4^2", "x1*x4+x2*x3"};
    for (int i = 5; i <= d; ++i) g.push_back("x" + std::to_string(i));
    return ideal<K>(VariableContext::standard(field, d), g);
}

inline Ideal<Rational> curve_i0() { return ideal(qx(4), {"x1^2", "x2^2", "x3^2", "x4^2", "x1*x2", "x2*x3", "x1*x4"}); }
inline Ideal<Rational> curve_i1() { return ideal(qx(4), {"x1^2", "x2^2", "x3^2", "x4^2", "x1*x2", "x2*x3+x3*x4", "x1*x4+x3*x4"}); }
inline Ideal<Rational> curve_iinf() { return ideal(qx(4), {"x1^2", "x2^2", "x3^2", "x4^2", "x1*x2", "x2*x3-x1*x4", "x3*x4"}); }
inline Ideal<Rational> quadric_monomial() { return ideal(qx(4), {"x1^2", "x1*x2", "x2^2", "x3^2", "x3*x4", "x4^2", "x1*x4"}); }

/// Three of the four first partials of a cubic in four dual variables.
inline std::vector<Polynomial<Rational>> salmon_partials() {
    const auto y = VariableContext::standard(FieldSpec::rationals(), 4, true);
    const auto C = parse_polynomial<Rational>("y1*y2*y3 + y4^3 + y1^2*y4 + y2*y4^2 - y3^3", y);
    return {C.derivative(0), C.derivative(1), C.derivative(2)};
}

/// Linear substitution x -> g x applied to every generator.
template <class K>
Ideal<K> substitute_linear(const Ideal<K>& I, const Mat<K>& g) {
    std::vector<Polynomial<K>> images;
    for (int i = 0; i < I.nvars(); ++i) {
        Polynomial<K> f(I.nvars(), I.dom);
        for (int j = 0; j < I.nvars(); ++j) f += I.var(j).scaled(g(i, j));
        images.push_back(f);
    }
    std::vector<Polynomial<K>> gens;
    for (const auto& p : I.gens) gens.push_back(p.substitute(images));
    return I.with_generators(gens);
}

inline Mat<Rational> random_invertible(std::mt19937_64& rng, int d) {
    while (true) {
        Mat<Rational> g(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) g(i, j) = Rational(static_cast<long>(rng() % 7) - 3);
        if (!is_zero(determinant(g))) return g;
    }
}

}  // namespace testutil
