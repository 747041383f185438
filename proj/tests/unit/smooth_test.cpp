#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hilbcheck/smooth/smooth.hpp"
#include "hilbcheck/tangent/tangent.hpp"

using namespace hilbcheck;
using namespace testutil;

namespace {

Ideal<Rational> random_eight_points(std::mt19937_64& rng) {
    return points_ideal(qx(4), random_points(rng, 8, 4)).ideal();
}

}  // namespace

TEST(Pfaffian, QuadricIdealDoesNotVanish) {
    const auto R = salmon_turnbull_pfaffian(j_quadrics(4));
    EXPECT_FALSE(R.vanishes);
    EXPECT_EQ(R.cobasis.size(), 3u);
    EXPECT_EQ(R.block.rows(), 12);
    EXPECT_EQ(R.block.transpose(), Mat<Rational>(-R.block));
    EXPECT_EQ(R.intrinsic.transpose(), Mat<Rational>(-R.intrinsic));
}

TEST(Pfaffian, QuadricIdealOverPrimeFields) {
    for (unsigned p : {5u, 7u, 101u}) EXPECT_FALSE(salmon_turnbull_pfaffian(j_quadrics<Fp>(4, FieldSpec::prime(p))).vanishes);
}

TEST(Pfaffian, PartialsOfACubicVanish) {
    const auto R = salmon_turnbull_pfaffian(salmon_partials(), qx(4));
    EXPECT_TRUE(R.vanishes);
    EXPECT_TRUE(is_zero(R.pfaffian_intrinsic));
}

TEST(Pfaffian, DualQuadricsAreDualToCobasis) {
    const auto R = salmon_turnbull_pfaffian(curve_i1());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            long w = 1;
            for (int a = 0; a < 4; ++a) w *= R.cobasis[j][a] == 2 ? 2 : 1;
            EXPECT_EQ(R.Q[i].coeff(R.cobasis[j]) * Rational(w), Rational(i == j ? 2 : 0));
        }
}

TEST(Pfaffian, BlockAndIntrinsicDifferByAFixedSign) {
    std::mt19937_64 rng(41);
    std::vector<Ideal<Rational>> fixtures = {j_quadrics(4), curve_i0(), curve_i1(), curve_iinf(), quadric_monomial()};
    for (int k = 0; k < 4; ++k) fixtures.push_back(substitute_linear(j_quadrics(4), random_invertible(rng, 4)));
    std::optional<Rational> ratio;
    for (const auto& I : fixtures) {
        const auto R = salmon_turnbull_pfaffian(I);
        ASSERT_EQ(is_zero(R.pfaffian_block), is_zero(R.pfaffian_intrinsic));
        if (R.vanishes) continue;
        const Rational r = R.pfaffian_intrinsic / R.pfaffian_block;
        if (ratio) EXPECT_EQ(r, *ratio);
        ratio = r;
        EXPECT_TRUE(r == Rational(1) || r == Rational(-1));
    }
    EXPECT_TRUE(ratio.has_value());
}

TEST(Pfaffian, VanishingIsCoordinateIndependent) {
    std::mt19937_64 rng(50);
    const std::vector<Ideal<Rational>> fixtures = {j_quadrics(4), ideal_of_dual_quadrics(salmon_partials(), qx(4)), curve_i1()};
    std::vector<bool> expected;
    for (const auto& I : fixtures) expected.push_back(salmon_turnbull_pfaffian(I).vanishes);
    EXPECT_EQ(expected, (std::vector<bool>{false, true, false}));
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t k = static_cast<std::size_t>(trial) % fixtures.size();
        const auto moved = change_coordinates(fixtures[k], random_invertible(rng, 4));
        EXPECT_EQ(salmon_turnbull_pfaffian(moved).vanishes, expected[k]) << "trial " << trial;
    }
}

TEST(ChangeCoordinates, MatchesDirectSubstitution) {
    std::mt19937_64 rng(3);
    const auto I = curve_iinf();
    const auto g = random_invertible(rng, 4);
    EXPECT_TRUE(ideal_equal(change_coordinates(I, g), substitute_linear(I, g)));
    EXPECT_THROW(change_coordinates(I, Mat<Rational>(zeros<Rational>(4, 4))), PreconditionError);
    EXPECT_THROW(change_coordinates(I, Mat<Rational>(zeros<Rational>(3, 3))), PreconditionError);
}

TEST(Pfaffian, RejectsWrongShape) {
    EXPECT_THROW(salmon_turnbull_pfaffian(ideal(qx(3), {"x1^2", "x2^2", "x3^2"})), PreconditionError);
    EXPECT_THROW(salmon_turnbull_pfaffian(ideal(qx(4), {"x1^2", "x2^2", "x3^2", "x4^2"})), PreconditionError);
    EXPECT_THROW(salmon_turnbull_pfaffian(ideal(qx(4), {"x1^2-x2", "x2^2", "x3^2", "x4^2"})), PreconditionError);
    const auto partials = salmon_partials();
    EXPECT_THROW(salmon_turnbull_pfaffian(std::vector<Polynomial<Rational>>{partials[0], partials[1]}, qx(4)), PreconditionError);
}

TEST(ProjectToGraded, RandomEightPointsHaveVanishingPfaffian) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        const auto P = project_to_graded(random_eight_points(rng));
        EXPECT_EQ(graded_hilbert_function(P), (HilbertFunction{1, 4, 3}));
        EXPECT_TRUE(salmon_turnbull_pfaffian(P).vanishes) << "trial " << trial;
    }
}

TEST(ProjectToGraded, FixesHomogeneousIdeals) {
    EXPECT_TRUE(ideal_equal(project_to_graded(j_quadrics(4)), j_quadrics(4)));
    EXPECT_THROW(project_to_graded(ideal(qx(4), {"x1^8", "x2", "x3", "x4"})), PreconditionError);
    EXPECT_THROW(project_to_graded(ideal(qx(4), {"x1^2", "x2", "x3", "x4"})), PreconditionError);
}

TEST(ProjectToGraded, TranslatedQuadricIdeal) {
    const auto I = translate_ideal(j_quadrics(4), {Rational(1), Rational(-2), Rational(0), Rational(3)});
    EXPECT_TRUE(ideal_equal(project_to_graded(I), j_quadrics(4)));
}

TEST(Classify, SmallColengthIsSmoothable) {
    const auto v = classify_smoothable(ideal(qx(3), {"x1^2", "x2^2", "x3"}));
    EXPECT_EQ(v.outcome, Outcome::Smoothable);
    EXPECT_FALSE(v.pfaffian.has_value());
}

TEST(Classify, QuadricIdealIsNotSmoothable) {
    for (int d = 4; d <= 5; ++d) {
        const auto v = classify_smoothable(j_quadrics(d));
        EXPECT_EQ(v.outcome, Outcome::NotSmoothable);
        ASSERT_TRUE(v.pfaffian.has_value());
        EXPECT_FALSE(is_zero(*v.pfaffian));
        EXPECT_EQ(v.hilbert_function, (HilbertFunction{1, 4, 3}));
    }
    const auto moved = translate_ideal(j_quadrics(4), {Rational(2), Rational(0), Rational(-1), Rational(5)});
    EXPECT_EQ(classify_smoothable(moved).outcome, Outcome::NotSmoothable);
}

TEST(Classify, QuadricIdealOverPrimeField) {
    EXPECT_EQ(classify_smoothable(j_quadrics<Fp>(4, FieldSpec::prime(7))).outcome, Outcome::NotSmoothable);
    EXPECT_THROW(classify_smoothable(j_quadrics<Fp>(4, FieldSpec::prime(3))), PreconditionError);
}

TEST(Classify, CubicPartialsAreSmoothable) {
    const auto v = classify_smoothable(ideal_of_dual_quadrics(salmon_partials(), qx(4)));
    EXPECT_EQ(v.outcome, Outcome::Smoothable);
    ASSERT_TRUE(v.pfaffian.has_value());
    EXPECT_TRUE(is_zero(*v.pfaffian));
}

TEST(Classify, OtherLocalHilbertFunctionsAreSmoothable) {
    const auto v = classify_smoothable(ideal(qx(3), {"x1^2", "x2^2", "x3^2"}));
    EXPECT_EQ(v.outcome, Outcome::Smoothable);
    EXPECT_EQ(v.hilbert_function, (HilbertFunction{1, 3, 3, 1}));
}

TEST(Classify, EightPointsAreSmoothable) {
    std::mt19937_64 rng(9);
    EXPECT_EQ(classify_smoothable(random_eight_points(rng)).outcome, Outcome::Smoothable);
}

TEST(Classify, IrrationalSupportIsIndeterminate) {
    const auto v = classify_smoothable(ideal(qx(2), {"x1^2-2", "x2"}));
    EXPECT_EQ(v.outcome, Outcome::Indeterminate);
    EXPECT_FALSE(v.reason.empty());
}

TEST(Classify, RejectsLargeColength) {
    EXPECT_THROW(classify_smoothable(ideal(qx(2), {"x1^3", "x2^3"})), PreconditionError);
    EXPECT_THROW(classify_smoothable(ideal(qx(2), {"x1"})), PreconditionError);
}

TEST(Pfaffian, CubicInThreeDualVariablesVanishes) {
    const auto y = VariableContext::standard(FieldSpec::rationals(), 4, true);
    const auto C = parse_polynomial<Rational>("y1^3 + 2*y1*y2*y3 - y2^2*y3 + 5*y3^3 + y1^2*y2", y);
    const auto R = salmon_turnbull_pfaffian(std::vector<Polynomial<Rational>>{C.derivative(0), C.derivative(1), C.derivative(2)}, qx(4));
    EXPECT_TRUE(R.vanishes);
}

TEST(Pfaffian, CurveFamilyOverRationalFunctions) {
    EXPECT_FALSE(salmon_turnbull_pfaffian(curve_ideal()).vanishes);
}

TEST(ChangeCoordinates, IdentityAndSignFlip) {
    const Mat<Rational> id = Mat<Rational>::Identity(4, 4);
    EXPECT_TRUE(ideal_equal(change_coordinates(curve_i1(), id), curve_i1()));
    Mat<Rational> flip = id;
    flip(0, 0) = Rational(-1);
    EXPECT_TRUE(ideal_equal(change_coordinates(curve_iinf(), flip), j_quadrics(4)));
}

TEST(Classify, MonomialIdealsAreSmoothable) {
    EXPECT_EQ(classify_smoothable(ideal(qvars({"x", "y", "z"}), {"x^2", "y^2", "z^2", "x*y*z"})).outcome, Outcome::Smoothable);
    const auto v = classify_smoothable(quadric_monomial());
    EXPECT_EQ(v.outcome, Outcome::Smoothable);
    ASSERT_TRUE(v.pfaffian.has_value());
    EXPECT_TRUE(is_zero(*v.pfaffian));
}

TEST(Classify, InvariantUnderCoordinateChange) {
    std::mt19937_64 rng(77);
    const std::vector<Ideal<Rational>> fixtures = {j_quadrics(4), quadric_monomial(), curve_i0(), curve_i1()};
    for (const auto& I : fixtures) {
        const auto expected = classify_smoothable(I).outcome;
        for (int trial = 0; trial < 3; ++trial)
            EXPECT_EQ(classify_smoothable(change_coordinates(I, random_invertible(rng, 4))).outcome, expected);
    }
}

TEST(Classify, NotSmoothableHasSmallTangentSpace) {
    for (const auto& I : {j_quadrics(4), curve_i1(), curve_iinf()}) {
        ASSERT_EQ(classify_smoothable(I).outcome, Outcome::NotSmoothable);
        EXPECT_LT(tangent_dimension(I), 32u);
    }
}
