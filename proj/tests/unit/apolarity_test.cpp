#include <gtest/gtest.h>

#include "hilbcheck/apolarity/apolarity.hpp"
#include "hilbcheck/artin/artin.hpp"
#include "test_util.hpp"

using namespace hilbcheck;
using namespace testutil;

namespace {

const VariableContext kY3 = VariableContext::standard(FieldSpec::rationals(), 3, true);
const VariableContext kY4 = VariableContext::standard(FieldSpec::rationals(), 4, true);

Polynomial<Rational> Y(const std::string& s, const VariableContext& ctx = kY3) { return parse_polynomial<Rational>(s, ctx); }
Polynomial<Rational> X(const std::string& s, int d = 3) { return parse_polynomial<Rational>(s, qx(d)); }

std::vector<Ideal<Rational>> homogeneous_fixtures() {
    const auto xyz = qvars({"x", "y", "z"});
    return {
        ideal(xyz, {"x^2", "y^2", "z^2"}),
        ideal(xyz, {"x^2", "y^2", "z^2", "x*y*z"}),
        ideal(xyz, {"x*y", "x*z", "y*z", "x^2-y^2", "x^2-z^2"}),
        ideal(qx(4), {"x1^2", "x1*x2", "x2^2", "x3^2", "x3*x4", "x4^2", "x1*x4+x2*x3"}),
        ideal(qx(4), {"x1^2", "x2^2", "x3^2", "x4^2", "x1*x2", "x2*x3+x3*x4", "x1*x4+x3*x4"}),
        ideal(qx(4), {"x1^2", "x1*x2", "x2^2", "x3^2", "x3*x4", "x4^2", "x1*x4"}),
        ideal(qx(4), {"x1^2", "x2^2", "x3^2", "x4^2", "x1*x2", "x2*x3", "x1*x4"}),
    };
}

// random quadrics plus all cubics
Ideal<Rational> random_homogeneous(std::mt19937_64& rng, int d, int nquadrics) {
    Ideal<Rational> I(qx(d));
    for (int k = 0; k < nquadrics; ++k) {
        Polynomial<Rational> f(d);
        for (const Monomial& m : monomials_of_degree(d, 2))
            if (rng() % 2) f += Polynomial<Rational>::term(m, Rational(static_cast<long>(rng() % 7) - 3));
        if (!f.is_zero()) I.gens.push_back(f);
    }
    for (const Monomial& m : monomials_of_degree(d, 3)) I.gens.push_back(Polynomial<Rational>::monomial(m));
    return I;
}

}  // namespace

TEST(ApplyOperator, Examples) {
    const auto xy = qvars({"x"});
    const auto yctx = xy.dual_context();
    EXPECT_EQ(apply_operator(parse_polynomial<Rational>("x", xy), parse_polynomial<Rational>("y^2", yctx)), parse_polynomial<Rational>("2*y", yctx));
    EXPECT_TRUE(apply_operator(X("x1"), Y("y2")).is_zero());
    EXPECT_EQ(apply_operator(X("x1^2*x2^3"), Y("y1^2*y2^3")), Polynomial<Rational>::constant(3, Rational(12)));
    EXPECT_EQ(apply_operator(X("x1 + x2*x3"), Y("y1^2 + y2*y3^2")), Y("2*y1 + 2*y3"));
}

TEST(ApplyOperator, CharacteristicGuard) {
    const auto f5 = VariableContext::standard(FieldSpec::prime(5), 2);
    const auto y5 = f5.dual_context();
    EXPECT_EQ(apply_operator(parse_polynomial<Fp>("x1", f5), parse_polynomial<Fp>("y1^4", y5)), parse_polynomial<Fp>("4*y1^3", y5));
    EXPECT_THROW(apply_operator(parse_polynomial<Fp>("x1", f5), parse_polynomial<Fp>("y1^5", y5)), PreconditionError);
    EXPECT_THROW(perp(ideal<Fp>(f5, {"x1^6", "x2"}), 5), PreconditionError);
}

TEST(Perp, Examples) {
    const auto unit = ideal(qx(3), {"1"});
    for (int j = 0; j < 4; ++j) EXPECT_TRUE(perp(unit, j).empty());
    const auto I = homogeneous_fixtures()[3];
    EXPECT_EQ(perp(I, 2).size(), 3u);
    EXPECT_EQ(perp(I, 1).size(), 4u);
    EXPECT_TRUE(perp(I, 3).empty());
    // each element of perp is killed by every generator
    for (const auto& phi : perp(I, 2))
        for (const auto& g : I.gens) EXPECT_TRUE(apply_operator(g, phi).is_zero());
    EXPECT_THROW(perp(ideal(qx(2), {"x1-x2^2"}), 1), PreconditionError);
}

TEST(Perp, DimensionsMatchLocalHilbertFunction) {
    std::mt19937_64 rng(71);
    int checked = 0;
    while (checked < 10) {
        const int d = 3 + static_cast<int>(rng() % 2);
        const auto I = random_homogeneous(rng, d, 2 + static_cast<int>(rng() % 5));
        EXPECT_EQ(inverse_system(I).dimensions(), local_hilbert_function(I));
        ++checked;
    }
    for (const auto& I : homogeneous_fixtures()) EXPECT_EQ(inverse_system(I).dimensions(), local_hilbert_function(I));
}

TEST(InverseSystem, Examples) {
    // l^3 for a dual linear form l
    const auto A = ideal_from_inverse_system<Rational>({Y("(y1 + 2*y2 - y3)^3")}, qx(3));
    EXPECT_EQ(local_hilbert_function(A), (HilbertFunction{1, 1, 1, 1}));
    const auto B = ideal_from_inverse_system<Rational>({Y("y1*y2*y3")}, qx(3));
    EXPECT_EQ(local_hilbert_function(B), (HilbertFunction{1, 3, 3, 1}));
    EXPECT_TRUE(ideal_equal(B, ideal(qx(3), {"x1^2", "x2^2", "x3^2"})));
    // three of the four first partials of one cubic
    const auto C = Y("y1*y2*y3 + y4^3 + y1^2*y4", kY4);
    std::vector<Polynomial<Rational>> partials;
    for (int i = 0; i < 3; ++i) partials.push_back(C.derivative(i));
    const auto D = ideal_from_inverse_system(partials, qx(4));
    EXPECT_EQ(local_hilbert_function(D), (HilbertFunction{1, 4, 3}));
    EXPECT_TRUE(ideal_from_inverse_system<Rational>({}, qx(2)).gens.front().is_constant());
    EXPECT_THROW(ideal_from_inverse_system<Rational>({Y("y1^2 + y2")}, qx(3)), PreconditionError);
}

TEST(InverseSystem, DoublePerpIdentity) {
    for (const auto& I : homogeneous_fixtures()) {
        std::vector<Polynomial<Rational>> gens;
        for (const auto& comp : inverse_system(I).graded)
            for (const auto& phi : comp) gens.push_back(phi);
        EXPECT_TRUE(ideal_equal(ideal_from_inverse_system(gens, I.ctx), I)) << I.to_string();
    }
}

TEST(InverseSystem, ClosedUnderDifferentiation) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Polynomial<Rational>> gens;
        for (int k = 0; k < 2; ++k) {
            Polynomial<Rational> f(4);
            for (const Monomial& m : monomials_of_degree(4, 3))
                if (rng() % 4 == 0) f += Polynomial<Rational>::term(m, Rational(static_cast<long>(rng() % 5) - 2));
            gens.push_back(f);
        }
        const auto sys = differential_closure(gens, kY4);
        for (std::size_t j = 1; j < sys.graded.size(); ++j) {
            const auto& lower = sys.graded[j - 1];
            for (const auto& phi : sys.graded[j])
                for (int i = 0; i < 4; ++i) {
                    auto span = lower;
                    const auto before = span.size();
                    span.push_back(phi.derivative(i));
                    Mat<Rational> A = zeros<Rational>(static_cast<Index>(span.size()), 20);
                    const auto mons = monomials_of_degree(4, static_cast<int>(j) - 1);
                    for (std::size_t r = 0; r < span.size(); ++r)
                        for (std::size_t c = 0; c < mons.size(); ++c) A(static_cast<Index>(r), static_cast<Index>(c)) = span[r].coeff(mons[c]);
                    EXPECT_EQ(static_cast<std::size_t>(mat_rank(A)), before);
                }
        }
    }
}

TEST(InverseSystem, PairingGramMatrixIsFactorialDiagonal) {
    for (int j = 0; j <= 4; ++j) {
        const auto mons = monomials_of_degree(3, j);
        for (const auto& a : mons)
            for (const auto& b : mons) {
                const auto v = apply_operator(Polynomial<Rational>::monomial(a), Polynomial<Rational>::monomial(b));
                if (a == b) {
                    long f = 1;
                    for (int i = 0; i < 3; ++i)
                        for (int k = 2; k <= a[i]; ++k) f *= k;
                    EXPECT_EQ(v, Polynomial<Rational>::constant(3, Rational(f)));
                } else {
                    EXPECT_TRUE(v.is_zero());
                }
            }
    }
}
