#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace hilbcheck;
using namespace testutil;

namespace {

const VariableContext kXYZ = qvars({"x", "y", "z"});

Ideal<Rational> two_point_J() { return ideal(kXYZ, {"y^2+z^2", "x+x^2+z^2", "z^3", "y*z^2", "x*z^2", "x*y*z"}); }

Ideal<Rational> quadric_J(int d) {
    std::vector<std::string> g = {"x1^2", "x1*x2", "x2^2", "x3^2", "x3*x4", "x4^2", "x1*x4+x2*x3"};
    for (int i = 5; i <= d; ++i) g.push_back("x" + std::to_string(i));
    return ideal(qx(d), g);
}

// count monomials outside a monomial ideal by brute force over a box
std::size_t brute_colength(const std::vector<Monomial>& gens, int n, int box) {
    std::size_t count = 0;
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    while (true) {
        const Monomial m(e);
        if (std::none_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); })) ++count;
        int i = 0;
        while (i < n && ++e[static_cast<std::size_t>(i)] > box) e[static_cast<std::size_t>(i++)] = 0;
        if (i == n) break;
    }
    return count;
}

}  // namespace

TEST(Buchberger, Trivial) {
    const auto ctx = qvars({"x"});
    const auto G = buchberger(ideal(ctx, {"x-1"}));
    ASSERT_EQ(G.elements.size(), 1u);
    EXPECT_EQ(G.elements[0], parse_polynomial<Rational>("x-1", ctx));
    const auto xy = qvars({"x", "y"});
    const auto H = buchberger(ideal(xy, {"x^2", "x*y", "y^2"}));
    EXPECT_EQ(H.elements.size(), 3u);
    EXPECT_TRUE(buchberger(ideal(xy, {"x+1", "x"})).is_unit());
}

TEST(Buchberger, TwoPointColength) {
    const auto G = buchberger(two_point_J());
    EXPECT_EQ(quotient_basis(G).size(), 8u);
}

TEST(Buchberger, AllSPairsReduceToZero) {
    for (const auto& I : {two_point_J(), quadric_J(4), ideal(kXYZ, {"x^2-y*z+3", "y^3-x*z", "x*y*z-z^2+y"})}) {
        for (const auto& order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::weighted({3, 1, 2})}) {
            if (I.nvars() != 3 && order->kind == OrderKind::Weight) continue;
            const auto G = buchberger(I, order);
            for (std::size_t i = 0; i < G.elements.size(); ++i) {
                EXPECT_TRUE(G.elements[i].lead_coeff() == Rational(1));
                for (std::size_t j = 0; j < i; ++j) {
                    const auto& a = G.elements[i];
                    const auto& b = G.elements[j];
                    const Monomial l = lcm(a.lead_monomial(), b.lead_monomial());
                    const auto s = a.times_term(l / a.lead_monomial(), 1) - b.times_term(l / b.lead_monomial(), 1);
                    EXPECT_TRUE(normal_form(s, G).is_zero());
                }
            }
            // generators belong to the ideal of the basis and vice versa
            for (const auto& g : I.gens) EXPECT_TRUE(normal_form(g, G).is_zero());
        }
    }
}

TEST(Buchberger, MembershipProperty) {
    std::mt19937_64 rng(3);
    const auto I = two_point_J();
    const auto G = buchberger(I);
    const auto lambda = quotient_basis(G);
    for (int trial = 0; trial < 30; ++trial) {
        Polynomial<Rational> f(3);
        for (const auto& g : I.gens) {
            const Monomial m({static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), static_cast<int>(rng() % 2)});
            f += g.times_term(m, Rational(static_cast<long>(rng() % 7) - 3));
        }
        EXPECT_TRUE(normal_form(f, G).is_zero());
        const auto std_mon = lambda[rng() % lambda.size()];
        EXPECT_FALSE(normal_form(f + Polynomial<Rational>::monomial(std_mon), G).is_zero());
    }
}

TEST(QuotientBasis, Examples) {
    const auto xy = qvars({"x", "y"});
    EXPECT_EQ(quotient_basis(buchberger(ideal(xy, {"x", "y"}))), std::vector<Monomial>{Monomial({0, 0})});
    const auto q = quotient_basis(buchberger(ideal(xy, {"x^2", "y^2"})));
    EXPECT_EQ(q.size(), 4u);
    EXPECT_EQ(quotient_basis(buchberger(quadric_J(4))).size(), 8u);
    EXPECT_THROW(quotient_basis(buchberger(ideal(xy, {"x^2"}))), DomainError);
}

TEST(QuotientBasis, MonomialIdealsMatchBruteForce) {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Monomial> gens;
        Ideal<Rational> I(kXYZ);
        for (int i = 0; i < 3; ++i) gens.push_back(Monomial::variable(3, i, 1 + static_cast<int>(rng() % 4)));
        for (int k = 0; k < 3; ++k) gens.push_back(Monomial({static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)}));
        for (const auto& m : gens) I.gens.push_back(Polynomial<Rational>::monomial(m));
        if (std::any_of(gens.begin(), gens.end(), [](const Monomial& m) { return m.is_one(); })) continue;
        EXPECT_EQ(colength(I), brute_colength(gens, 3, 5));
    }
}

TEST(InitialIdeal, StandardWeightOfTwoPointIdeal) {
    const auto I = ideal(kXYZ, {"y^2+z^2", "x^2+z^2", "z^3", "y*z^2", "x*z^2", "x*y*z"});
    EXPECT_TRUE(ideal_equal(initial_ideal(two_point_J(), {1, 1, 1}), I));
}

TEST(InitialIdeal, MonomialIdealIsFixed) {
    const auto M = ideal(kXYZ, {"x^2", "x*y", "y^3", "z^2", "x*z"});
    for (const std::vector<long>& w : {std::vector<long>{1, 1, 1}, {3, 0, 2}, {0, 0, 0}, {-1, -1, -1}, {-2, 1, -3}})
        EXPECT_TRUE(ideal_equal(initial_ideal(M, w), M));
}

TEST(InitialIdeal, FirstCoordinateWeight) {
    const auto J = intersect(ideal(kXYZ, {"x+1", "y", "z"}), ideal(kXYZ, {"x", "y*z", "z^3-y^4"}));
    EXPECT_TRUE(ideal_equal(initial_ideal(J, {1, 0, 0}), ideal(kXYZ, {"x^2", "x*y", "x*z", "y*z", "z^3-y^4"})));
}

TEST(InitialIdeal, UnequalWeights) {
    const auto Q = ideal(kXYZ, {"x^2", "x*y-z^3", "y^2-x*z", "y*z"});
    const auto U = ideal(kXYZ, {"x^2", "x*y-z^4", "y^2-x*z", "y*z"});
    // With the extra point at (0,0,-1) the degeneration lands exactly on U.
    EXPECT_TRUE(ideal_equal(initial_ideal(intersect(ideal(kXYZ, {"x", "y", "z+1"}), Q), {7, 5, 3}), U));
    // With the point at (0,0,1) it lands on the isomorphic ideal with xy + z^4
    // ((z-1)(xy-z^3) - xyz has initial form -(xy + z^4)).
    const auto literal = initial_ideal(intersect(ideal(kXYZ, {"x", "y", "z-1"}), Q), {7, 5, 3});
    EXPECT_FALSE(ideal_equal(literal, U));
    EXPECT_TRUE(ideal_equal(literal, ideal(kXYZ, {"x^2", "x*y+z^4", "y^2-x*z", "y*z"})));
}

TEST(InitialIdeal, NegativeWeightsGiveAssociatedGraded) {
    // x - y^2 is a local change of coordinates away from <x, y^3>: in_{-1} picks lowest-degree forms
    const auto xy = qvars({"x", "y"});
    const auto I = ideal(xy, {"x-y^2", "y^3"});
    EXPECT_TRUE(ideal_equal(initial_ideal(I, {-1, -1}), ideal(xy, {"x", "y^3"})));
    EXPECT_THROW(initial_ideal(ideal(xy, {"x-1", "y"}), {-1, -1}), PreconditionError);
}

TEST(Intersect, Basics) {
    const auto xy = qvars({"x", "y"});
    EXPECT_TRUE(ideal_equal(intersect(ideal(xy, {"x"}), ideal(xy, {"y"})), ideal(xy, {"x*y"})));
    const auto I = two_point_J();
    EXPECT_TRUE(ideal_equal(intersect(I, I), I));
}

TEST(Intersect, TwoPointDecomposition) {
    const auto J = intersect(ideal(kXYZ, {"x+1", "y^2", "y*z", "z^2"}), ideal(kXYZ, {"x+z^2", "y^2+z^2", "z^3", "y*z^2"}));
    EXPECT_TRUE(ideal_equal(J, two_point_J()));
}

TEST(Intersect, ContainmentAndColengthProperty) {
    std::mt19937_64 rng(99);
    const auto ctx = qx(2);
    for (int trial = 0; trial < 10; ++trial) {
        const auto pts = random_points(rng, 5, 2);
        const std::vector<std::vector<Rational>> a(pts.begin(), pts.begin() + 2), b(pts.begin() + 2, pts.end());
        const auto I = points_ideal(ctx, a).ideal();
        const auto J = points_ideal(ctx, b).ideal();
        const auto IJ = intersect(I, J);
        const auto GI = buchberger(I), GJ = buchberger(J);
        for (const auto& g : IJ.gens) {
            EXPECT_TRUE(normal_form(g, GI).is_zero());
            EXPECT_TRUE(normal_form(g, GJ).is_zero());
        }
        EXPECT_EQ(colength(IJ), colength(I) + colength(J));
        EXPECT_TRUE(ideal_equal(IJ, points_ideal(ctx, pts).ideal()));
    }
}

TEST(IdealEqual, Basics) {
    const auto xy = qvars({"x", "y"});
    EXPECT_TRUE(ideal_equal(ideal(xy, {"x^2", "y-x"}), ideal(xy, {"y-x", "x^2"})));
    EXPECT_FALSE(ideal_equal(ideal(xy, {"x"}), ideal(xy, {"x^2"})));
}

TEST(Eliminate, DropsVariable) {
    const auto xyz = kXYZ;
    const auto E = eliminate(ideal(xyz, {"x-y^2", "z-y^3"}), {1});
    EXPECT_EQ(E.ctx.names, (std::vector<std::string>{"x", "z"}));
    EXPECT_TRUE(ideal_equal(E, ideal(E.ctx, {"z^2-x^3"})));
}

TEST(Syzygies, Schreyer) {
    const auto xy = qvars({"x", "y"});
    EXPECT_EQ(schreyer_syzygies(buchberger(ideal(xy, {"x^2+y"}))).size(), 0u);
    const auto G = buchberger(ideal(xy, {"x", "y"}));
    const auto S = schreyer_syzygies(G);
    ASSERT_EQ(S.size(), 1u);
    // Koszul relation up to sign: (y, -x) against (y, x) ordering of the basis
    const auto& r = S.relations[0];
    EXPECT_TRUE((r[0] * G.elements[0] + r[1] * G.elements[1]).is_zero());
    EXPECT_EQ(r[0].total_degree(), 1);
    for (const auto& I : {two_point_J(), quadric_J(5)}) {
        const auto GI = buchberger(I);
        for (const auto& rel : schreyer_syzygies(GI).relations) {
            Polynomial<Rational> s(I.nvars());
            for (std::size_t k = 0; k < rel.size(); ++k) s += rel[k] * GI.elements[k];
            EXPECT_TRUE(s.is_zero());
        }
    }
}

TEST(Syzygies, LinearSyzygiesOfCurveFiberAndMonomialQuadrics) {
    const auto ctx = qx(4);
    const std::vector<std::string> i1 = {"x1^2", "x2^2", "x3^2", "x4^2", "x1*x2", "x2*x3+x3*x4", "x1*x4+x3*x4"};
    const std::vector<std::string> l56 = {"x1^2", "x1*x2", "x2^2", "x3^2", "x3*x4", "x4^2", "x1*x4"};
    for (const auto& gens : {i1, l56}) {
        const auto I = ideal(ctx, gens);
        const auto S = linear_syzygies(I.gens, ctx);
        EXPECT_EQ(S.size(), 8u);
        for (const auto& rel : S.relations) {
            Polynomial<Rational> s(4);
            for (std::size_t k = 0; k < 7; ++k) s += rel[k] * I.gens[k];
            EXPECT_TRUE(s.is_zero());
        }
    }
    // sigma_1 = x2 q1 - x1 q5 lies in the span for I_1
    const auto I = ideal(ctx, i1);
    const auto S = linear_syzygies(I.gens, ctx);
    Mat<Rational> span = zeros<Rational>(28, 9);
    for (Index k = 0; k < 8; ++k)
        for (int i = 0; i < 7; ++i)
            for (int a = 0; a < 4; ++a) span(i * 4 + a, k) = S.relations[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)].coeff(Monomial::variable(4, a));
    span(0 * 4 + 1, 8) = 1;
    span(4 * 4 + 0, 8) = -1;
    EXPECT_EQ(mat_rank(span), 8);
}

TEST(Syzygies, LinearSyzygiesPreconditions) {
    const auto ctx = qx(4);
    EXPECT_THROW(linear_syzygies(ideal(ctx, {"x1^2", "x1^2", "x3^2", "x4^2", "x1*x2", "x2*x3", "x1*x4"}).gens, ctx), PreconditionError);
    // 7 quadrics not spanning S_3
    EXPECT_THROW(linear_syzygies(ideal(ctx, {"x1^2", "x1*x2", "x1*x3", "x1*x4", "x2^2", "x2*x3", "x2*x4"}).gens, ctx), PreconditionError);
}

TEST(PointsIdeal, Examples) {
    const auto ctx = qx(3);
    const auto G = points_ideal<Rational>(ctx, {{0, 0, 0}});
    EXPECT_TRUE(ideal_equal(G.ideal(), ideal(ctx, {"x1", "x2", "x3"})));
    const auto line = qvars({"x"});
    const auto H = points_ideal<Rational>(line, {{0}, {1}});
    ASSERT_EQ(H.elements.size(), 1u);
    EXPECT_EQ(H.elements[0], parse_polynomial<Rational>("x^2-x", line));
    EXPECT_THROW(points_ideal<Rational>(line, {{1}, {1}}), PreconditionError);
}

TEST(PointsIdeal, RandomPointsAreReducedAndVanish) {
    std::mt19937_64 rng(17);
    const auto ctx = qx(4);
    for (int trial = 0; trial < 10; ++trial) {
        const auto pts = random_points(rng, 8, 4);
        const auto G = points_ideal(ctx, pts);
        EXPECT_EQ(quotient_basis(G).size(), 8u);
        for (const auto& g : G.elements)
            for (const auto& p : pts) EXPECT_TRUE(g.evaluate(p).is_zero());
        // already a reduced Groebner basis
        EXPECT_EQ(buchberger(G.ideal()).elements, G.elements);
    }
}

TEST(DeltaRatio, SmallCases) {
    const auto line = qvars({"x"});
    const std::vector<std::vector<Rational>> one = {{Rational(5)}};
    EXPECT_EQ(delta_ratio(one, {Monomial({0})}, Monomial({3}), Monomial({0}), Rational::Domain{}), Rational(125));
    const std::vector<std::vector<Rational>> two = {{Rational(0)}, {Rational(1)}};
    // x^2 = x on {0,1}
    EXPECT_EQ(delta_ratio(two, {Monomial({0}), Monomial({1})}, Monomial({2}), Monomial({1}), Rational::Domain{}), Rational(1));
    EXPECT_EQ(delta_ratio(two, {Monomial({0}), Monomial({1})}, Monomial({2}), Monomial({0}), Rational::Domain{}), Rational(0));
    const std::vector<std::vector<Rational>> dup = {{Rational(2)}, {Rational(2)}};
    EXPECT_THROW(delta_ratio(dup, {Monomial({0}), Monomial({1})}, Monomial({2}), Monomial({0}), Rational::Domain{}), PreconditionError);
}

TEST(DeltaRatio, MatchesBuchbergerMoellerCoefficients) {
    std::mt19937_64 rng(2718);
    const auto ctx = qx(4);
    for (int trial = 0; trial < 20; ++trial) {
        const auto pts = random_points(rng, 8, 4);
        const auto G = points_ideal(ctx, pts);
        const auto lambda = quotient_basis(G);
        for (const auto& g : G.elements) {
            const Monomial m = g.lead_monomial();
            for (const auto& mp : lambda)
                EXPECT_EQ(delta_ratio(pts, lambda, m, mp, Rational::Domain{}), -g.coeff(mp));
        }
    }
}

TEST(PrimeField, BuchbergerOverF7) {
    const auto ctx = VariableContext::standard(FieldSpec::prime(7), 4);
    const auto J = ideal<Fp>(ctx, {"x1^2", "x1*x2", "x2^2", "x3^2", "x3*x4", "x4^2", "x1*x4+x2*x3"});
    EXPECT_EQ(colength(J), 8u);
    const auto K = ideal<Fp>(ctx, {"2*x1 - 3", "x2", "x3 + 5", "x4"});
    const auto G = buchberger(K);
    EXPECT_EQ(G.elements[0].lead_coeff().value(), 1);
    EXPECT_EQ(colength(K), 1u);
}
