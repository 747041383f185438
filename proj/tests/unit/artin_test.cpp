#include <gtest/gtest.h>

#include <functional>

#include "hilbcheck/artin/artin.hpp"
#include "test_util.hpp"

using namespace hilbcheck;
using namespace testutil;

namespace {

const VariableContext kXYZ = qvars({"x", "y", "z"});

Ideal<Rational> j_quadrics(int d) {
    std::vector<std::string> g = {"x1^2", "x1*x2", "x2^2", "x3^2", "x3*x4", "x4^2", "x1*x4+x2*x3"};
    for (int i = 5; i <= d; ++i) g.push_back("x" + std::to_string(i));
    return ideal(qx(d), g);
}

Ideal<Rational> curve_fiber(int t) {
    const std::string s = std::to_string(t);
    return ideal(qx(4), {"x1^2", "x2^2", "x3^2", "x4^2", "x1*x2", "x2*x3+" + s + "*x3*x4", "x1*x4+" + s + "*x3*x4"});
}

template <class K>
void expect_commuting(const LocalAlgebraModel<K>& A) {
    for (std::size_t i = 0; i < A.X.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) EXPECT_EQ(mul(A.X[i], A.X[j]), mul(A.X[j], A.X[i]));
}

}  // namespace

TEST(MultiplicationOperators, Examples) {
    const auto x = qvars({"x"});
    const auto A = multiplication_operators(buchberger(ideal(x, {"x^2"})));
    ASSERT_EQ(A.size(), 2u);
    Mat<Rational> jordan = zeros<Rational>(2, 2);
    jordan(1, 0) = 1;
    EXPECT_EQ(A.X[0], jordan);
    EXPECT_TRUE(A.origin);
    const auto B = multiplication_operators(buchberger(ideal(x, {"x-5/2"})));
    EXPECT_EQ(B.X[0](0, 0), Rational(5, 2));
    EXPECT_FALSE(B.origin);
}

TEST(MultiplicationOperators, QuadricIdealIsNilpotentAndCommuting) {
    const auto A = multiplication_operators(buchberger(j_quadrics(4)));
    ASSERT_EQ(A.size(), 8u);
    expect_commuting(A);
    for (const auto& X : A.X) EXPECT_TRUE(is_zero_matrix(mul(mul(X, X), X)));
    EXPECT_TRUE(A.origin);
}

TEST(MultiplicationOperators, ColumnOfOneIsTheVariable) {
    std::mt19937_64 rng(4);
    const auto G = points_ideal(qx(3), random_points(rng, 6, 3));
    const auto A = multiplication_operators(G);
    expect_commuting(A);
    for (int i = 0; i < 3; ++i) {
        const auto r = normal_form(Polynomial<Rational>::variable(3, i), G);
        for (std::size_t k = 0; k < A.size(); ++k) EXPECT_EQ(A.X[static_cast<std::size_t>(i)](static_cast<Index>(k), 0), r.coeff(A.lambda[k]));
    }
}

TEST(Centroid, MeanOfPoints) {
    const auto xy = qvars({"x", "y"});
    const std::vector<std::vector<Rational>> two = {{0, 0}, {2, 4}};
    EXPECT_EQ(centroid(multiplication_operators(points_ideal(xy, two))), (std::vector<Rational>{1, 2}));
    EXPECT_EQ(centroid(multiplication_operators(buchberger(j_quadrics(4)))), std::vector<Rational>(4, Rational(0)));

    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 5; ++trial) {
        const auto pts = random_points(rng, 8, 4);
        std::vector<Rational> mean(4, Rational(0));
        for (const auto& p : pts)
            for (int i = 0; i < 4; ++i) mean[static_cast<std::size_t>(i)] += p[static_cast<std::size_t>(i)] / Rational(8);
        EXPECT_EQ(centroid(multiplication_operators(points_ideal(qx(4), pts))), mean);
    }

    const auto f7 = VariableContext::standard(FieldSpec::prime(7), 1);
    const auto A = multiplication_operators(buchberger(ideal<Fp>(f7, {"x1^7"})));
    EXPECT_THROW(centroid(A), PreconditionError);
}

TEST(Translate, RoundTripAndRecentering) {
    const auto x = qvars({"x"});
    EXPECT_TRUE(ideal_equal(translate_ideal(ideal(x, {"x-1"}), {Rational(1)}), ideal(x, {"x"})));
    const auto J = j_quadrics(4);
    EXPECT_TRUE(ideal_equal(translate_ideal(J, std::vector<Rational>(4, Rational(0))), J));

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        const auto I = points_ideal(qx(3), random_points(rng, 5, 3)).ideal();
        const std::vector<Rational> a = {Rational(1, 2), Rational(-3), Rational(2, 7)};
        const std::vector<Rational> minus_a = {-a[0], -a[1], -a[2]};
        EXPECT_TRUE(ideal_equal(translate_ideal(translate_ideal(I, a), minus_a), I));

        // substituting x -> x + c moves the support by -c
        const auto c = centroid(multiplication_operators(buchberger(I)));
        const auto R = multiplication_operators(buchberger(translate_ideal(I, c)));
        for (const auto& X : R.X) EXPECT_EQ(X.trace(), Rational(0));
    }
}

TEST(PrimaryAtOrigin, Examples) {
    const auto xy = qvars({"x", "y"});
    EXPECT_TRUE(is_primary_at_origin(ideal(xy, {"x^2", "y^2"})));
    EXPECT_FALSE(is_primary_at_origin(ideal(qvars({"x"}), {"x^2-x"})));
    EXPECT_TRUE(is_primary_at_origin(j_quadrics(4)));
    EXPECT_THROW(is_primary_at_origin(ideal(xy, {"x^2"})), DomainError);
}

TEST(LocalHilbertFunction, Examples) {
    EXPECT_EQ(local_hilbert_function(ideal(kXYZ, {"x^2", "y^2", "z^2"})), (HilbertFunction{1, 3, 3, 1}));
    EXPECT_EQ(local_hilbert_function(ideal(kXYZ, {"x^2", "x*y-z^4", "y^2-x*z", "y*z"})), (HilbertFunction{1, 3, 2, 1, 1}));
    EXPECT_EQ(local_hilbert_function(curve_fiber(1)), (HilbertFunction{1, 4, 3}));
    // not homogeneous: the local and the graded (grevlex) pictures differ
    const auto xy = qvars({"x", "y"});
    EXPECT_EQ(local_hilbert_function(ideal(xy, {"x-y^2", "y^3"})), (HilbertFunction{1, 1, 1}));
    EXPECT_THROW(local_hilbert_function(ideal(qvars({"x"}), {"x^2-x"})), PreconditionError);
    EXPECT_EQ(to_string(HilbertFunction{1, 4, 3}), "(1,4,3)");
}

TEST(LocalHilbertFunction, SumsToColength) {
    std::mt19937_64 rng(17);
    const auto ctx = qx(3);
    for (int trial = 0; trial < 15; ++trial) {
        // random polynomial perturbations of a monomial ideal containing m^4
        std::vector<Polynomial<Rational>> gens;
        for (const Monomial& m : monomials_of_degree(3, 4)) gens.push_back(Polynomial<Rational>::monomial(m));
        for (int k = 0; k < 3; ++k) {
            Polynomial<Rational> f(3);
            const int lo = 1 + static_cast<int>(rng() % 2);
            for (int deg = lo; deg < 4; ++deg)
                for (const Monomial& m : monomials_of_degree(3, deg))
                    if (rng() % 3 == 0) f += Polynomial<Rational>::term(m, Rational(static_cast<long>(rng() % 5) - 2));
            if (!f.is_zero()) gens.push_back(f);
        }
        const Ideal<Rational> I(ctx, gens);
        const auto h = local_hilbert_function(I);
        int total = 0;
        for (int v : h) total += v;
        EXPECT_EQ(static_cast<std::size_t>(total), colength(I));
        EXPECT_EQ(h.front(), 1);
    }
}

TEST(EmbeddingReduction, Examples) {
    const auto xy = qvars({"x", "y"});
    const auto r = embedding_reduction(ideal(xy, {"x", "y^2"}));
    EXPECT_EQ(r.ctx.names, std::vector<std::string>{"y"});
    EXPECT_TRUE(ideal_equal(r, ideal(qvars({"y"}), {"y^2"})));

    const auto J5 = embedding_reduction(j_quadrics(5));
    EXPECT_EQ(J5.nvars(), 4);
    EXPECT_TRUE(ideal_equal(J5, j_quadrics(4)));
    EXPECT_TRUE(ideal_equal(embedding_reduction(j_quadrics(4)), j_quadrics(4)));

    // x - y^2 - z^3 lets x be eliminated: S/I = k[y,z]/(y^2 + z^3, ...)
    const auto I = ideal(kXYZ, {"x-y^2-z^3", "x*y", "z^4", "y^3"});
    const auto R = embedding_reduction(I);
    EXPECT_EQ(R.nvars(), 2);
    EXPECT_EQ(colength(R), colength(I));
    EXPECT_EQ(local_hilbert_function(R), local_hilbert_function(I));
}

TEST(SplitSupport, Examples) {
    const auto x = qvars({"x"});
    const auto s = split_rational_support(ideal(x, {"x^2-x"}));
    ASSERT_TRUE(s.ok());
    ASSERT_EQ(s.pieces.size(), 2u);
    EXPECT_EQ(s.pieces[0].point, std::vector<Rational>{0});
    EXPECT_EQ(s.pieces[1].point, std::vector<Rational>{1});
    EXPECT_EQ(colength(s.pieces[1].ideal), 1u);

    const auto single = split_rational_support(j_quadrics(4));
    ASSERT_TRUE(single.ok());
    EXPECT_EQ(single.pieces.size(), 1u);

    const auto irr = split_rational_support(ideal(x, {"x^2-2"}));
    EXPECT_FALSE(irr.ok());
    EXPECT_TRUE(irr.pieces.empty());
}

TEST(SplitSupport, OnePointAwayFromTheOrigin) {
    // J = J1 cap J2 with J2 primary at the origin, J1 the reduced point (-1, 0, 0)
    const auto ctx = qx(3);
    const auto J1 = ideal(ctx, {"x1+1", "x2", "x3"});
    const auto J2 = ideal(ctx, {"x1-x3^3", "x2^2-x3^3", "x3^4", "x1*x2", "x1*x3", "x2*x3"});
    const auto J = intersect(J1, J2);
    const auto s = split_rational_support(J);
    ASSERT_TRUE(s.ok());
    ASSERT_EQ(s.pieces.size(), 2u);
    EXPECT_EQ(s.pieces[0].point, (std::vector<Rational>{-1, 0, 0}));
    EXPECT_TRUE(ideal_equal(s.pieces[0].ideal, J1));
    EXPECT_TRUE(ideal_equal(s.pieces[1].ideal, J2));
    EXPECT_EQ(colength(J), colength(J1) + colength(J2));
}

TEST(SplitSupport, PiecesAreCoprimeAndIntersectToI) {
    std::mt19937_64 rng(33);
    const auto ctx = qx(2);
    for (int trial = 0; trial < 6; ++trial) {
        const auto pts = random_points(rng, 3, 2, 3);
        // fat point at pts[0], reduced points elsewhere
        Ideal<Rational> I = translate_ideal(ideal(ctx, {"x1^2", "x1*x2", "x2^3"}), {-pts[0][0], -pts[0][1]});
        I = intersect(I, points_ideal(ctx, std::vector<std::vector<Rational>>(pts.begin() + 1, pts.end())).ideal());
        const auto s = split_rational_support(I);
        ASSERT_TRUE(s.ok());
        ASSERT_EQ(s.pieces.size(), 3u);
        std::size_t total = 0;
        Ideal<Rational> meet = s.pieces[0].ideal;
        for (std::size_t i = 0; i < s.pieces.size(); ++i) {
            total += colength(s.pieces[i].ideal);
            if (i) meet = intersect(meet, s.pieces[i].ideal);
            for (std::size_t j = 0; j < i; ++j) {
                auto gens = s.pieces[i].ideal.gens;
                for (const auto& g : s.pieces[j].ideal.gens) gens.push_back(g);
                EXPECT_TRUE(buchberger(I.with_generators(gens)).is_unit());
            }
        }
        EXPECT_EQ(total, colength(I));
        EXPECT_TRUE(ideal_equal(meet, I));
    }
}

TEST(SplitSupport, PrimeField) {
    const auto f7 = VariableContext::standard(FieldSpec::prime(7), 1);
    const auto s = split_rational_support(ideal<Fp>(f7, {"x1^3-x1"}));
    ASSERT_TRUE(s.ok());
    ASSERT_EQ(s.pieces.size(), 3u);
    EXPECT_EQ(s.pieces[2].point[0].value(), 6);
    EXPECT_FALSE(split_rational_support(ideal<Fp>(f7, {"x1^2+1"})).ok());
}

TEST(Census, SmallCases) {
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(enumerate_local_hfs(1, n), (std::set<HilbertFunction>{HilbertFunction(static_cast<std::size_t>(n), 1)}));
    EXPECT_EQ(enumerate_local_hfs(2, 4), (std::set<HilbertFunction>{{1, 1, 1, 1}, {1, 2, 1}}));
    const auto c48 = enumerate_local_hfs(4, 8);
    EXPECT_TRUE(c48.count({1, 4, 3}));
    EXPECT_FALSE(c48.count({1, 5, 2}));
    EXPECT_THROW(enumerate_local_hfs(2, 9), PreconditionError);
}

TEST(Census, MatchesBruteForceInTwoVariables) {
    // every order ideal in 2 variables is a partition; compare Hilbert functions
    for (int n = 1; n <= 8; ++n) {
        std::set<HilbertFunction> brute;
        std::function<void(int, int, std::vector<int>&)> parts = [&](int left, int maxpart, std::vector<int>& cur) {
            if (left == 0) {
                HilbertFunction h;
                for (std::size_t row = 0; row < cur.size(); ++row)
                    for (int col = 0; col < cur[row]; ++col) {
                        const std::size_t deg = row + static_cast<std::size_t>(col);
                        if (h.size() <= deg) h.resize(deg + 1, 0);
                        ++h[deg];
                    }
                brute.insert(h);
                return;
            }
            for (int p = std::min(left, maxpart); p >= 1; --p) {
                cur.push_back(p);
                parts(left - p, p, cur);
                cur.pop_back();
            }
        };
        std::vector<int> cur;
        parts(n, n, cur);
        EXPECT_EQ(enumerate_local_hfs(2, n), brute) << n;
    }
}
