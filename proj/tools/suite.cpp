#include "suite.hpp"

#include <atomic>
#include <chrono>
#include <iomanip>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "hilbcheck/apolarity/apolarity.hpp"
#include "hilbcheck/smooth/smooth.hpp"
#include "hilbcheck/tangent/tangent.hpp"
#include "json.hpp"
#include "support.hpp"

namespace hilbcheck::tools {

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Indeterminate: return "INDETERMINATE";
    }
    return "?";
}

void CaseResult::expect(const std::string& key, const std::string& got, const std::string& want) {
    if (got == want) {
        value(key, got);
    } else {
        value(key, got + " (expected " + want + ")");
        status = Status::Fail;
    }
}

void CaseResult::expect(const std::string& key, bool ok, const std::string& shown) {
    value(key, ok ? shown : shown + " (check failed)");
    if (!ok) status = Status::Fail;
}

namespace {

using Q = Rational;
using hilbcheck::to_string;

std::string str(std::size_t v) { return std::to_string(v); }

std::string x(int i) { return "x" + std::to_string(i); }

std::string pw(const std::string& v, int e) { return e == 1 ? v : v + "^" + std::to_string(e); }

std::string weights(const std::vector<long>& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

std::vector<std::string> all_products(int d, int from = 1) {
    std::vector<std::string> g;
    for (int i = from; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) g.push_back(x(i) + "*" + x(j));
    return g;
}

Ideal<Q> xyz(const std::vector<std::string>& gens) { return make_ideal(VariableContext(FieldSpec::rationals(), {"x", "y", "z"}), gens); }

Ideal<Q> qx(int d, const std::vector<std::string>& gens) { return make_ideal(VariableContext::standard(FieldSpec::rationals(), d), gens); }

Ideal<Q> point_at_minus_one(int d) {
    std::vector<std::string> g = {"x1 + 1"};
    for (int i = 2; i <= d; ++i) g.push_back(x(i));
    return qx(d, g);
}

template <class K = Q>
Ideal<K> fixture(const std::string& name) {
    return std::get<Ideal<K>>(load_ideal(name));
}

Ideal<Q> quadrics_j(int d) {
    std::vector<std::string> g = {"x1^2", "x1*x2", "x2^2", "x3^2", "x3*x4", "x4^2", "x1*x4 + x2*x3"};
    for (int i = 5; i <= d; ++i) g.push_back(x(i));
    return qx(d, g);
}

template <class K>
Ideal<K> quadrics_j_over(unsigned p) {
    const auto ctx = VariableContext::standard(FieldSpec::prime(p), 4);
    return make_ideal<K>(ctx, {"x1^2", "x1*x2", "x2^2", "x3^2", "x3*x4", "x4^2", "x1*x4 + x2*x3"});
}

std::vector<Ideal<Q>> degree_zero_fixtures() {
    return {quadrics_j(4), fixture("curve_t0.ideal"), fixture("curve_t1.ideal"), fixture("curve_tinf.ideal"), fixture("monomial_quadrics.ideal")};
}

std::vector<Polynomial<Q>> cubic_partials(const std::string& cubic) {
    const auto y = VariableContext::standard(FieldSpec::rationals(), 4, true);
    const auto C = parse_polynomial<Q>(cubic, y);
    return {C.derivative(0), C.derivative(1), C.derivative(2)};
}

const char* const kSalmonCubic = "y1*y2*y3 + y4^3 + y1^2*y4 + y2*y4^2 - y3^3";

// a degeneration in_w(J) = I together with the Hilbert function of I
struct Degeneration {
    Ideal<Q> I;
    HilbertFunction h;
    std::vector<long> w;
    Ideal<Q> A, B;  // J = A cap B
};

void check_degeneration(const Degeneration& g, CaseResult& r) {
    r.expect("local HF of I", to_string(local_hilbert_function(g.I)), to_string(g.h));
    const auto J = intersect(g.A, g.B);
    r.expect("in_" + weights(g.w) + "(J) = I", ideal_equal(initial_ideal(J, g.w), g.I), "holds");
}

// x_i^2 - x_d^m, x_d^{m+1}, x_i x_j against the point (-1, 0, ..., 0)
Degeneration family_1d1(int d, int m) {
    std::vector<std::string> I, B;
    const std::string top = pw(x(d), m);
    for (int i = 1; i < d; ++i) I.push_back(x(i) + "^2 - " + top);
    I.push_back(pw(x(d), m + 1));
    B = I;
    B[0] = "x1 - " + top;
    for (const auto& s : all_products(d)) {
        I.push_back(s);
        B.push_back(s);
    }
    HilbertFunction h = {1, d};
    for (int k = 2; k <= m; ++k) h.push_back(1);
    std::vector<long> w(static_cast<std::size_t>(d), m);
    w.back() = 2;
    return {qx(d, I), h, w, point_at_minus_one(d), qx(d, B)};
}

Degeneration family_1d2(int d) {
    std::vector<std::string> I = all_products(d), A = all_products(d);
    const std::string y = x(d - 1), z = x(d);
    for (int i = 1; i <= d - 2; ++i) {
        const std::string a = std::to_string(i + 1), b = std::to_string(2 * i + 1);
        I.push_back(x(i) + "^2 - " + a + "*" + y + "^2 - " + b + "*" + z + "^2");
        A.push_back(i == 1 ? "x1 + " + a + "*" + y + "^2 + " + b + "*" + z + "^2" : I.back());
    }
    std::vector<std::string> pt = {"x1 - 1"};
    for (int i = 2; i <= d; ++i) pt.push_back(x(i));
    return {qx(d, I), {1, d, 2}, std::vector<long>(static_cast<std::size_t>(d), 1), qx(d, A), qx(d, pt)};
}

Degeneration family_p(int d) {
    std::vector<std::string> I = all_products(d), B = all_products(d);
    for (int l = 3; l <= d; ++l) {
        I.push_back(x(l) + "^2 + x1^3");
        B.push_back(x(l) + "^2 + x1^2");
    }
    I.push_back("x1^3 - x2^3");
    B.push_back("x1^2 - x2^3");
    std::vector<long> w(static_cast<std::size_t>(d), 3);
    w[0] = w[1] = 2;
    return {qx(d, I), {1, d, 2, 1}, w, point_at_minus_one(d), qx(d, B)};
}

Degeneration family_q(int d) {
    std::vector<std::string> I, A;
    for (int l = 2; l <= d; ++l) {
        I.push_back("x1*" + x(l));
        A.push_back(I.back());
    }
    for (int i = 2; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) {
            const std::string b = std::to_string(i + j);
            I.push_back(x(i) + "*" + x(j) + " + " + b + "*x1^3");
            A.push_back(x(i) + "*" + x(j) + " + " + b + "*x1^2");
        }
    for (int k = 2; k < d; ++k) {
        const std::string b = std::to_string(k);
        I.push_back(x(k) + "^2 - " + x(k + 1) + "^2 + " + b + "*x1^3");
        A.push_back(x(k) + "^2 - " + x(k + 1) + "^2 + " + b + "*x1^2");
    }
    std::vector<long> w(static_cast<std::size_t>(d), 3);
    w[0] = 2;
    return {qx(d, I), {1, d, 2, 1}, w, qx(d, A), point_at_minus_one(d)};
}

Degeneration family_1d22(int d) {
    std::vector<std::string> I = all_products(d), A = all_products(d);
    for (int l = 3; l <= d; ++l) {
        const std::string a = std::to_string(l), b = std::to_string(l + 1);
        I.push_back(x(l) + "^2 - " + a + "*x1^3 - " + b + "*x2^3");
        A.push_back(x(l) + "^2 - " + a + "*x1^2 - " + b + "*x2^3");
    }
    I.insert(I.end(), {"x1^4", "x2^4"});
    A.insert(A.end(), {"x1^3", "x2^4"});
    std::vector<long> w(static_cast<std::size_t>(d), 3);
    w[0] = w[1] = 2;
    return {qx(d, I), {1, d, 2, 2}, w, qx(d, A), point_at_minus_one(d)};
}

// component dimensions per local Hilbert function: standard graded scheme,
// then the local punctual scheme
struct TableRow {
    HilbertFunction h;
    std::vector<long> graded, local;
};

const std::vector<TableRow>& table_one() {
    static const std::vector<TableRow> rows = {
        {{1, 3}, {0}, {0}},
        {{1, 3, 1}, {5}, {5}},
        {{1, 4}, {0}, {0}},
        {{1, 3, 1, 1}, {2}, {7}},
        {{1, 4, 1}, {9}, {9}},
        {{1, 5}, {0}, {0}},
        {{1, 3, 1, 1, 1}, {2}, {9}},
        {{1, 3, 2, 1}, {5, 6}, {9, 10}},
        {{1, 3, 3}, {9}, {9}},
        {{1, 4, 1, 1}, {3}, {12}},
        {{1, 4, 2}, {16}, {16}},
        {{1, 5, 1}, {14}, {14}},
        {{1, 6}, {0}, {0}},
        {{1, 3, 1, 1, 1, 1}, {2}, {11}},
        {{1, 3, 2, 1, 1}, {6}, {11, 12}},
        {{1, 3, 2, 2}, {4}, {12}},
        {{1, 3, 3, 1}, {9}, {12}},
        {{1, 3, 4}, {8}, {8}},
        {{1, 4, 1, 1, 1}, {3}, {15}},
        {{1, 4, 2, 1}, {7, 11}, {15, 19}},
        {{1, 4, 3}, {21}, {21}},
        {{1, 5, 2}, {26}, {26}},
        {{1, 5, 1, 1}, {4}, {18}},
        {{1, 6, 1}, {20}, {20}},
        {{1, 7}, {0}, {0}},
    };
    return rows;
}

long quadrics(long d) { return (d + 1) * d / 2; }

// component dimensions from the formulas, sorted ascending
std::optional<std::pair<std::vector<long>, std::vector<long>>> formula_dimensions(const HilbertFunction& h) {
    const long d = h[1], N = quadrics(d);
    const auto sorted = [](std::vector<long> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    if (h.size() == 2) return std::pair{std::vector<long>{0}, std::vector<long>{0}};
    if (h.size() == 3) {
        const long e = h[2], g = (N - e) * e;
        return std::pair{std::vector<long>{g}, std::vector<long>{g}};
    }
    const bool tail_of_ones = std::all_of(h.begin() + 2, h.end(), [](int v) { return v == 1; });
    if (tail_of_ones) {
        const long m = static_cast<long>(h.size()) - 1;
        return std::pair{std::vector<long>{d - 1}, std::vector<long>{(d + 2 * m - 2) * (d - 1) / 2}};
    }
    if (h.size() == 4) {
        // fibres of dimension (N - e) f over the graded components
        const long e = h[2], f = h[3], fibre = (N - e) * f;
        std::vector<long> graded;
        if (e == 2 && f == 1)
            graded = {(d * d + 3 * d - 6) / 2, 2 * d - 1};
        else if (e == 2 && f == 2)
            graded = {2 * d - 2};
        else if (d == 3 && e == 3 && f == 1)
            graded = {9};
        else
            return std::nullopt;
        std::vector<long> local;
        for (long g : graded) local.push_back(g + fibre);
        return std::pair{sorted(graded), sorted(local)};
    }
    if (h.size() == 5 && h[3] == 1 && h[4] == 1 && d == 3 && h[2] == 2) {
        const long e = h[2], graded = d - 1 + (N - e) * (e - 1);
        // a 4-dimensional closed stratum with 7-dimensional fibres, and its
        // complement with 6-dimensional fibres
        return std::pair{std::vector<long>{graded}, sorted({4 + 7, graded + 6})};
    }
    return std::nullopt;
}

std::string list(const std::vector<long>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s;
}

bool commuting(const LocalAlgebraModel<Q>& A) {
    for (const auto& X : A.X)
        for (const auto& Y : A.X)
            if (mul(X, Y) != mul(Y, X)) return false;
    return true;
}

// local Hilbert functions in at most two variables: h_i = i + 1 up to the
// order, then nonincreasing
void extend_plane(HilbertFunction& h, int left, bool dropped, std::set<HilbertFunction>& out) {
    if (left == 0) {
        out.insert(h);
        return;
    }
    const int i = static_cast<int>(h.size());
    const int cap = std::min({left, i + 1, dropped ? h.back() : i + 1});
    for (int v = 1; v <= cap; ++v) {
        h.push_back(v);
        extend_plane(h, left - v, dropped || v < i + 1, out);
        h.pop_back();
    }
}

std::set<HilbertFunction> plane_functions(int max_n) {
    std::set<HilbertFunction> out;
    for (int n = 1; n <= max_n; ++n) {
        HilbertFunction h = {1};
        extend_plane(h, n - 1, false, out);
    }
    return out;
}

Mat<Q> random_skew(std::mt19937_64& rng, Index n) {
    Mat<Q> a = zeros<Q>(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) {
            a(i, j) = Q(draw(rng, -4, 4));
            a(j, i) = -a(i, j);
        }
    return a;
}

std::vector<Case> build_cases() {
    std::vector<Case> cs;
    const auto add = [&](std::string name, int criterion, std::string title, std::function<void(const CaseContext&, CaseResult&)> f) {
        cs.push_back({std::move(name), criterion, std::move(title), std::move(f)});
    };

    // 1: tangent dimension 8d - 7 of the quadric ideal
    add("tangent-j-q", 1, "dim Hom(J, S/J) = 8d-7 over Q", [](const CaseContext&, CaseResult& r) {
        for (int d = 4; d <= 6; ++d) r.expect("d=" + std::to_string(d), str(tangent_dimension(quadrics_j(d))), str(8 * d - 7));
    });
    for (unsigned p : {5u, 7u})
        add("tangent-j-f" + std::to_string(p), 1, "dim Hom(J, S/J) = 8d-7 over F_" + std::to_string(p), [p](const CaseContext&, CaseResult& r) {
            for (int d = 4; d <= 6; ++d) {
                auto I = quadrics_j_over<Fp>(p);
                const auto ctx = VariableContext::standard(FieldSpec::prime(p), d);
                std::vector<Polynomial<Fp>> g;
                for (const auto& q : I.gens) g.push_back(extend_variables(q, d));
                for (int i = 4; i < d; ++i) g.push_back(Polynomial<Fp>::variable(d, i, I.dom));
                r.expect("d=" + std::to_string(d), str(tangent_dimension(Ideal<Fp>(ctx, g))), str(8 * d - 7));
            }
        });

    // 2: further tangent dimensions
    add("tangent-133", 2, "dim Hom = 21 for <x^2,y^2,z^2,xyz>", [](const CaseContext&, CaseResult& r) {
        r.expect("dim", str(tangent_dimension(fixture("x2y2z2xyz.ideal"))), "21");
    });
    add("tangent-u", 2, "dim Hom = 24 for <x^2, xy-z^4, y^2-xz, yz>", [](const CaseContext&, CaseResult& r) {
        r.expect("dim", str(tangent_dimension(fixture("u_locus.ideal"))), "24");
    });
    add("tangent-monomial-quadrics", 2, "dim Hom = 33 for the monomial (1,4,3) ideal", [](const CaseContext&, CaseResult& r) {
        r.expect("dim", str(tangent_dimension(fixture("monomial_quadrics.ideal"))), "33");
    });
    add("tangent-smooth-points", 2, "smooth points of H^3_8 have a 24-dimensional tangent space", [](const CaseContext&, CaseResult& r) {
        r.expect("<x^2,xy,xz,yz,z^3-y^4>", str(tangent_dimension(fixture("z_locus.ideal"))), "24");
        r.expect("<x^2,y^2,z^2>", str(tangent_dimension(fixture("x2y2z2.ideal"))), "24");
    });

    // 3: Groebner degenerations
    add("degeneration-134", 3, "in_(1,1,1) of a colength 3 + colength 5 scheme", [](const CaseContext&, CaseResult& r) {
        const auto I = xyz({"y^2+z^2", "x^2+z^2", "z^3", "y*z^2", "x*z^2", "x*y*z"});
        const auto J = fixture("two_points.ideal");
        r.expect("J = <x+1,y^2,yz,z^2> cap <x+z^2,y^2+z^2,z^3,yz^2>",
                 ideal_equal(J, intersect(xyz({"x+1", "y^2", "y*z", "z^2"}), xyz({"x+z^2", "y^2+z^2", "z^3", "y*z^2"}))), "holds");
        r.expect("local HF of I", to_string(local_hilbert_function(I)), "(1,3,4)");
        r.expect("in_(1,1,1)(J) = I", ideal_equal(initial_ideal(J, {1, 1, 1}), I), "holds");
    });
    add("degeneration-z", 3, "in_(1,0,0)(<x+1,y,z> cap <x,yz,z^3-y^4>)", [](const CaseContext&, CaseResult& r) {
        check_degeneration({fixture("z_locus.ideal"), {1, 3, 2, 1, 1}, {1, 0, 0}, xyz({"x+1", "y", "z"}), xyz({"x", "y*z", "z^3-y^4"})}, r);
    });
    add("degeneration-u", 3, "in_(7,5,3) onto <x^2, xy-z^4, y^2-xz, yz>", [](const CaseContext&, CaseResult& r) {
        const auto U = fixture("u_locus.ideal");
        const auto Qd = xyz({"x^2", "x*y-z^3", "y^2-x*z", "y*z"});
        check_degeneration({U, {1, 3, 2, 1, 1}, {7, 5, 3}, xyz({"x", "y", "z+1"}), Qd}, r);
        // with the point at (0,0,1) the limit is the image of U under y -> -y
        const auto literal = initial_ideal(intersect(xyz({"x", "y", "z-1"}), Qd), {7, 5, 3});
        r.expect("point (0,0,1): limit is <x^2, xy+z^4, y^2-xz, yz>", ideal_equal(literal, xyz({"x^2", "x*y+z^4", "y^2-x*z", "y*z"})), "holds");
        r.notes.push_back("the extra point must sit at z = -1 for the limit to be U itself; at z = 1 the limit is isomorphic to U");
    });
    for (const auto& [d, m] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {3, 4}})
        add("degeneration-1d1-d" + std::to_string(d) + "-m" + std::to_string(m), 3, "in_(m,...,m,2) onto (1,d,1,...,1)", [d = d, m = m](const CaseContext&, CaseResult& r) {
            const auto g = family_1d1(d, m);
            check_degeneration(g, r);
            r.expect("colength", str(colength(g.I)), str(static_cast<std::size_t>(d + m)));
        });
    for (int d : {3, 4}) {
        const auto ds = std::to_string(d);
        add("degeneration-1d2-d" + ds, 3, "in_(1,...,1) onto (1,d,2)", [d](const CaseContext&, CaseResult& r) { check_degeneration(family_1d2(d), r); });
        add("degeneration-p-d" + ds, 3, "in_(2,2,3,...,3) onto (1,d,2,1), derivatives of rank 2", [d](const CaseContext&, CaseResult& r) {
            const auto g = family_p(d);
            check_degeneration(g, r);
            r.expect("local HF of the second ideal", to_string(local_hilbert_function(g.B)), to_string(HilbertFunction{1, d, 1, 1}));
        });
        add("degeneration-q-d" + ds, 3, "in_(2,3,...,3) onto (1,d,2,1), derivatives of rank 1", [d](const CaseContext&, CaseResult& r) {
            const auto g = family_q(d);
            check_degeneration(g, r);
            r.expect("local HF of the first ideal", to_string(local_hilbert_function(g.A)), to_string(HilbertFunction{1, d, 2}));
        });
        add("degeneration-1d22-d" + ds, 3, "in_(2,2,3,...,3) onto (1,d,2,2)", [d](const CaseContext&, CaseResult& r) {
            const auto g = family_1d22(d);
            check_degeneration(g, r);
            r.expect("local HF of the first ideal", to_string(local_hilbert_function(g.A)), to_string(HilbertFunction{1, d, 2, 1}));
        });
    }

    // 4: curve multiplicity
    add("curve16", 4, "multiplicity of the curve I_t at t = 0 is 16", [](const CaseContext&, CaseResult& r) {
        const auto m = curve_multiplicity();
        r.expect("t-adic valuation of maximal minors", m.valuation ? std::to_string(*m.valuation) : "none", "16");
        const auto& g = m.sampled_gcd;
        const bool monomial = !g.is_zero() && g.order() == g.degree();
        r.expect("gcd of sampled minors", monomial ? "c*t^" + std::to_string(g.degree()) : g.to_string(), "c*t^16");
        r.value("samples", std::to_string(m.samples) + " nonzero of " + std::to_string(m.attempts) + " drawn, seed " + std::to_string(m.seed));
    });

    // 5: Pfaffian
    add("pfaffian-j", 5, "Salmon-Turnbull Pfaffian of J is nonzero", [](const CaseContext&, CaseResult& r) {
        const auto R = salmon_turnbull_pfaffian(quadrics_j(4));
        r.expect("vanishes", R.vanishes ? "yes" : "no", "no");
        r.value("block", R.pfaffian_block.to_string());
        r.value("intrinsic", R.pfaffian_intrinsic.to_string());
    });
    add("pfaffian-cubic-partials", 5, "Pfaffian vanishes on the partials of a cubic", [](const CaseContext&, CaseResult& r) {
        const auto R = salmon_turnbull_pfaffian(cubic_partials(kSalmonCubic), VariableContext::standard(FieldSpec::rationals(), 4));
        r.expect("block", R.pfaffian_block.to_string(), "0");
        r.expect("intrinsic", R.pfaffian_intrinsic.to_string(), "0");
    });
    add("pfaffian-three-variables", 5, "Pfaffian vanishes on partials of a cubic in three dual variables", [](const CaseContext&, CaseResult& r) {
        const auto R = salmon_turnbull_pfaffian(cubic_partials("y1^3 + 2*y1*y2*y3 - y2^2*y3 + 5*y3^3 + y1^2*y2"), VariableContext::standard(FieldSpec::rationals(), 4));
        r.expect("block", R.pfaffian_block.to_string(), "0");
    });
    add("pfaffian-points", 5, "Pfaffian vanishes on projections of 20 random 8-point ideals", [](const CaseContext& c, CaseResult& r) {
        std::mt19937_64 rng(c.seed);
        int vanishing = 0;
        for (int k = 0; k < 20; ++k) {
            const auto I = points_ideal(VariableContext::standard(FieldSpec::rationals(), 4), random_points(rng, 8, 4)).ideal();
            if (salmon_turnbull_pfaffian(project_to_graded(I)).vanishes) ++vanishing;
        }
        r.expect("vanishing", std::to_string(vanishing) + "/20", "20/20");
    });
    add("pfaffian-ratio", 5, "block and intrinsic Pfaffians agree up to a fixed scalar", [](const CaseContext& c, CaseResult& r) {
        std::mt19937_64 rng(c.seed ^ 0x5eedULL);
        std::vector<Ideal<Q>> fixtures = degree_zero_fixtures();
        fixtures.push_back(fixture("cubic_partials.ideal"));
        for (int k = 0; k < 4; ++k) fixtures.push_back(change_coordinates(quadrics_j(4), random_invertible(rng, 4)));
        std::set<std::string> ratios;
        bool together = true;
        for (const auto& I : fixtures) {
            const auto R = salmon_turnbull_pfaffian(I);
            together = together && (is_zero(R.pfaffian_block) == is_zero(R.pfaffian_intrinsic));
            if (!R.vanishes) ratios.insert((R.pfaffian_intrinsic / R.pfaffian_block).to_string());
        }
        r.expect("vanish together", together, "on " + str(fixtures.size()) + " ideals");
        std::string shown;
        for (const auto& s : ratios) shown += (shown.empty() ? "" : ", ") + s;
        r.expect("distinct ratios", ratios.size() == 1, shown);
    });

    // 6: graded tangent spaces
    add("hom0", 6, "Hom_0 = 21 on degree-zero fixtures", [](const CaseContext&, CaseResult& r) {
        int k = 0;
        for (const auto& I : degree_zero_fixtures()) r.expect("fixture " + std::to_string(++k), str(graded_tangent_dimension(I, 0)), "21");
    });
    add("hom-minus2", 6, "Hom_-2 vanishes at t = 0, 1, infinity", [](const CaseContext&, CaseResult& r) {
        for (const char* n : {"curve_t0.ideal", "curve_t1.ideal", "curve_tinf.ideal"}) r.expect(n, str(graded_tangent_dimension(fixture(n), -2)), "0");
    });
    add("hom-minus1", 6, "Hom_-1 >= 4 on degree-zero fixtures", [](const CaseContext&, CaseResult& r) {
        int k = 0;
        for (const auto& I : degree_zero_fixtures()) {
            const auto v = graded_tangent_dimension(I, -1);
            r.expect("fixture " + std::to_string(++k), v >= 4, str(v));
        }
    });
    add("corank-smoothable", 6, "corank of hbar >= 8 at a smoothable (1,4,3) point", [](const CaseContext&, CaseResult& r) {
        const auto M = build_tangent_machine(fixture("cubic_partials.ideal"));
        r.expect("corank", M.hbar_corank() >= 8, str(M.hbar_corank()));
        r.expect("Hom_-1", M.singular(), str(M.hom_minus1));
        const auto C = build_tangent_machine(fixture("curve_tinf.ideal"));
        r.expect("corank at a non-smoothable point", str(C.hbar_corank()), "0");
    });

    // 7: classification
    add("smoothable-j", 7, "J is not smoothable for d = 4, 5", [](const CaseContext&, CaseResult& r) {
        for (int d : {4, 5}) {
            const auto v = classify_smoothable(quadrics_j(d));
            r.expect("d=" + std::to_string(d), to_string(v.outcome), "NotSmoothable");
        }
        r.expect("F_7", to_string(classify_smoothable(fixture<Fp>("quadrics_d4_f7.ideal")).outcome), "NotSmoothable");
    });
    add("smoothable-monomial", 7, "monomial ideals of colength <= 8 are smoothable", [](const CaseContext&, CaseResult& r) {
        for (const char* n : {"x2y2z2.ideal", "x2y2z2xyz.ideal", "monomial_quadrics.ideal", "curve_t0.ideal", "maximal_square_d3.ideal",
                              "maximal_square_d7.ideal", "line8.ideal", "staircase.ideal", "hook.ideal"})
            r.expect(n, to_string(classify_smoothable(fixture(n)).outcome), "Smoothable");
    });
    add("smoothable-points", 7, "ideals of 8 random points are smoothable", [](const CaseContext& c, CaseResult& r) {
        std::mt19937_64 rng(c.seed + 1);
        int ok = 0;
        for (int k = 0; k < 5; ++k) {
            const auto I = points_ideal(VariableContext::standard(FieldSpec::rationals(), 4), random_points(rng, 8, 4)).ideal();
            const auto v = classify_smoothable(translate_ideal(I, {Q(1), Q(0), Q(-2), Q(1)}));
            ok += v.outcome == Outcome::Smoothable;
        }
        r.expect("smoothable", std::to_string(ok) + "/5", "5/5");
    });
    add("smoothable-fixtures", 7, "every degeneration fixture of colength <= 8 is smoothable", [](const CaseContext&, CaseResult& r) {
        std::vector<std::pair<std::string, Ideal<Q>>> fs = {
            {"two_points", fixture("two_points.ideal")}, {"z_locus", fixture("z_locus.ideal")}, {"u_locus", fixture("u_locus.ideal")},
            {"cubic_partials", fixture("cubic_partials.ideal")}};
        for (const auto& [d, m] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {3, 4}}) {
            const auto g = family_1d1(d, m);
            fs.emplace_back("1d1 d=" + std::to_string(d) + " m=" + std::to_string(m), g.I);
        }
        fs.emplace_back("1d2 d=3", family_1d2(3).I);
        fs.emplace_back("1d2 d=4", family_1d2(4).I);
        fs.emplace_back("P d=3", family_p(3).I);
        fs.emplace_back("P d=4", family_p(4).I);
        fs.emplace_back("Q d=3", family_q(3).I);
        fs.emplace_back("Q d=4", family_q(4).I);
        fs.emplace_back("1d22 d=3", family_1d22(3).I);
        for (const auto& [name, I] : fs) r.expect(name, to_string(classify_smoothable(I).outcome), "Smoothable");
    });
    add("smoothable-invariance", 7, "verdicts are invariant under 50 random coordinate changes", [](const CaseContext& c, CaseResult& r) {
        std::mt19937_64 rng(c.seed + 2);
        const std::vector<Ideal<Q>> fs = {quadrics_j(4), fixture("monomial_quadrics.ideal"), fixture("cubic_partials.ideal"), fixture("curve_t1.ideal"),
                                          fixture("curve_t0.ideal")};
        std::vector<Outcome> base;
        for (const auto& I : fs) base.push_back(classify_smoothable(I).outcome);
        int agree = 0;
        for (int k = 0; k < 50; ++k) {
            const auto i = static_cast<std::size_t>(k) % fs.size();
            agree += classify_smoothable(change_coordinates(fs[i], random_invertible(rng, 4))).outcome == base[i];
        }
        r.expect("agreeing verdicts", std::to_string(agree) + "/50", "50/50");
    });

    // 8: census and dimensions
    add("table1", 8, "Hilbert functions of local algebras of colength <= 8", [](const CaseContext&, CaseResult& r) {
        std::set<HilbertFunction> table, found;
        for (const auto& row : table_one()) table.insert(row.h);
        for (int n = 4; n <= 8; ++n)
            for (const auto& h : enumerate_local_hfs(n - 1, n))
                if (h.size() > 1 && h[1] >= 3) found.insert(h);
        std::size_t missing = 0;
        for (const auto& h : table) missing += !found.count(h);
        r.expect("table rows found by the census", str(table.size() - missing) + "/" + str(table.size()), str(table.size()) + "/" + str(table.size()));
        // functions the census finds that the table leaves out, each with a
        // monomial ideal realising it
        const std::map<HilbertFunction, Ideal<Q>> omitted = {{{1, 3, 2}, xyz({"x^2", "x*y", "x*z", "y*z", "y^3", "z^3"})}};
        for (const auto& h : found) {
            if (table.count(h)) continue;
            const auto it = omitted.find(h);
            if (it == omitted.end()) {
                r.expect("function missing from the table", to_string(h), "none");
                continue;
            }
            r.expect("realised by a monomial ideal: " + to_string(h), to_string(local_hilbert_function(it->second)), to_string(h));
            r.notes.push_back("the table has no row for " + to_string(h) + " (colength " + std::to_string(std::accumulate(h.begin(), h.end(), 0)) +
                              "), although it is a local Hilbert function of a monomial ideal");
        }
        std::size_t small_d = 0;
        for (int d = 3; d <= 4; ++d)
            for (int n = 1; n <= 8; ++n)
                for (const auto& h : enumerate_local_hfs(d, n)) small_d += h.size() > 1 && h[1] >= 3 && !found.count(h);
        r.expect("functions in d <= 4 outside the d = n - 1 census", str(small_d), "0");
        std::set<HilbertFunction> plane;
        for (int n = 1; n <= 8; ++n)
            for (int d = 1; d <= 2; ++d)
                for (const auto& h : enumerate_local_hfs(d, n)) plane.insert(h);
        r.expect("functions with d <= 2", plane == plane_functions(8), str(plane.size()));
        r.notes.push_back("(1,d,e) rows: the dimension column is (N-e)e, the dimension of Gr(N-e, S_2); the text's (N-e)N does not match the table");
    });
    add("dimension-formulas", 8, "component dimensions from the dimension formulas", [](const CaseContext&, CaseResult& r) {
        int matched = 0;
        for (const auto& row : table_one()) {
            const auto f = formula_dimensions(row.h);
            auto g = row.graded, l = row.local;
            std::sort(g.begin(), g.end());
            std::sort(l.begin(), l.end());
            if (!f || f->first != g || f->second != l)
                r.expect(to_string(row.h), f ? list(f->first) + " / " + list(f->second) : "no formula", list(g) + " / " + list(l));
            else
                ++matched;
        }
        r.expect("rows matched", std::to_string(matched), str(table_one().size()));
        r.expect("dim Q_d = (d^2+3d-6)/2 for d = 3, 4", std::to_string((9 + 9 - 6) / 2) + ", " + std::to_string((16 + 12 - 6) / 2), "6, 11");
        r.expect("dim P_d = 2d-1 for d = 3, 4", "5, 7", "5, 7");
        r.notes.push_back("(1,d,e): the Grassmannian Gr(N-e, S_2) has dimension (N-e)e, which is what the table lists; the text's (N-e)N does not match any row");
        r.notes.push_back("(1,3,2,1,1): the table marks 11 with '(?)' because it is unknown whether that set lies in the closure of the other");
    });

    // 9: properties
    add("pfaffian-squared", 9, "pf^2 = det on 100 random skew matrices", [](const CaseContext& c, CaseResult& r) {
        std::mt19937_64 rng(c.seed + 3);
        int ok = 0;
        for (int k = 0; k < 100; ++k) {
            const auto a = random_skew(rng, 2 * (1 + k % 6));
            const auto p = pfaffian(a);
            ok += p * p == determinant(a);
        }
        r.expect("agree", std::to_string(ok) + "/100", "100/100");
    });
    add("delta-ratio", 9, "chart coordinates by Cramer's rule equal Buchberger-Moeller coefficients", [](const CaseContext& c, CaseResult& r) {
        std::mt19937_64 rng(c.seed + 4);
        int ok = 0;
        const auto ctx = VariableContext::standard(FieldSpec::rationals(), 3);
        for (int k = 0; k < 20; ++k) {
            const auto pts = random_points(rng, 4 + k % 5, 3);
            const auto G = points_ideal(ctx, pts);
            const auto lambda = quotient_basis(G);
            bool all = true;
            for (const auto& g : G.elements)
                for (const auto& mp : lambda) all = all && delta_ratio(pts, lambda, g.lead_monomial(), mp, Q::Domain{}) == -g.coeff(mp);
            ok += all;
        }
        r.expect("point sets", std::to_string(ok) + "/20", "20/20");
    });
    add("double-perp", 9, "(I^perp)^perp = I on homogeneous fixtures", [](const CaseContext&, CaseResult& r) {
        for (const char* n : {"x2y2z2.ideal", "x2y2z2xyz.ideal", "quadrics_d4.ideal", "monomial_quadrics.ideal", "curve_t0.ideal", "curve_t1.ideal",
                              "curve_tinf.ideal", "cubic_partials.ideal", "maximal_square_d3.ideal"}) {
            const auto I = fixture(n);
            std::vector<Polynomial<Q>> gens;
            for (const auto& comp : inverse_system(I).graded) gens.insert(gens.end(), comp.begin(), comp.end());
            r.expect(n, ideal_equal(ideal_from_inverse_system(gens, I.ctx), I), "holds");
        }
    });
    add("multiplication-operators", 9, "operators commute and recentred traces vanish", [](const CaseContext& c, CaseResult& r) {
        std::vector<std::pair<std::string, Ideal<Q>>> fs;
        for (const char* n : {"x2y2z2.ideal", "x2y2z2xyz.ideal", "quadrics_d4.ideal", "monomial_quadrics.ideal", "u_locus.ideal", "z_locus.ideal",
                              "two_points.ideal", "curve_t1.ideal", "cubic_partials.ideal", "staircase.ideal"})
            fs.emplace_back(n, fixture(n));
        std::mt19937_64 rng(c.seed + 5);
        fs.emplace_back("8 random points", points_ideal(VariableContext::standard(FieldSpec::rationals(), 4), random_points(rng, 8, 4)).ideal());
        fs.emplace_back("translated quadrics", translate_ideal(quadrics_j(4), {Q(3), Q(-1), Q(2), Q(5)}));
        for (const auto& [name, I] : fs) {
            const auto A = multiplication_operators(buchberger(I));
            const auto centred = multiplication_operators(buchberger(translate_ideal(I, centroid(A))));
            bool traceless = true;
            for (const auto& X : centred.X) traceless = traceless && is_zero(X.trace());
            r.expect(name, commuting(A) && traceless, "commuting, trace zero");
        }
    });
    return cs;
}

}  // namespace

const std::vector<Case>& verification_cases() {
    static const std::vector<Case> cases = build_cases();
    return cases;
}

std::vector<CaseReport> run_cases(const std::vector<const Case*>& cases, std::uint64_t seed, unsigned jobs) {
    std::vector<CaseReport> out(cases.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i; (i = next++) < cases.size();) {
            CaseReport& rep = out[i];
            rep.c = cases[i];
            const auto t0 = std::chrono::steady_clock::now();
            try {
                rep.c->run(CaseContext{seed}, rep.result);
            } catch (const std::exception& e) {
                rep.result.status = Status::Fail;
                rep.result.value("error", e.what());
            }
            rep.result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(cases.size())));
    std::vector<std::jthread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    return out;
}

std::string format_text_report(const std::vector<CaseReport>& reports, std::uint64_t seed, bool timing) {
    std::ostringstream os;
    os << "seed: " << seed << "\n";
    std::size_t pass = 0;
    for (const auto& rep : reports) {
        pass += rep.result.status == Status::Pass;
        os << to_string(rep.result.status) << "  " << rep.c->name << "  " << rep.c->title;
        if (timing) os << "  [" << std::fixed << std::setprecision(2) << rep.result.seconds << " s]";
        os << "\n";
        for (const auto& [k, v] : rep.result.values) os << "    " << k << ": " << v << "\n";
        for (const auto& n : rep.result.notes) os << "    note: " << n << "\n";
    }
    os << pass << "/" << reports.size() << " cases passed\n";
    return os.str();
}

std::string format_json_report(const std::vector<CaseReport>& reports, std::uint64_t seed, bool timing) {
    nlohmann::ordered_json j;
    j["command"] = "verify-paper";
    j["seed"] = seed;
    j["cases"] = nlohmann::ordered_json::array();
    std::size_t pass = 0;
    for (const auto& rep : reports) {
        pass += rep.result.status == Status::Pass;
        nlohmann::ordered_json c;
        c["name"] = rep.c->name;
        c["criterion"] = rep.c->criterion;
        c["title"] = rep.c->title;
        c["status"] = to_string(rep.result.status);
        c["values"] = nlohmann::ordered_json::array();
        for (const auto& [k, v] : rep.result.values) c["values"].push_back({{"key", k}, {"value", v}});
        c["notes"] = rep.result.notes;
        if (timing) c["seconds"] = rep.result.seconds;
        j["cases"].push_back(std::move(c));
    }
    j["passed"] = pass;
    j["total"] = reports.size();
    return j.dump(2) + "\n";
}

}  // namespace hilbcheck::tools
