#include "hilbcheck/kernel/dense.hpp"

#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace hilbcheck {

namespace {

void make_primitive(std::vector<mpz_class>& v) {
    mpz_class g = 0;
    for (const auto& x : v)
        if (x != 0) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            if (g == 1) return;
        }
    if (g > 1)
        for (auto& x : v)
            if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

template <>
Index mat_rank<Rational>(const Mat<Rational>& a) {
    // Fraction-free: rows become primitive integer vectors and are reduced
    // against the echelon rows found so far.
    std::map<Index, std::vector<mpz_class>> echelon;
    const auto cols = static_cast<std::size_t>(a.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        mpz_class l = 1;
        for (Index j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).value().get_den_mpz_t());
        std::vector<mpz_class> v(cols, 0);
        bool any = false;
        for (Index j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero()) {
                v[static_cast<std::size_t>(j)] = a(i, j).value().get_num() * (l / a(i, j).value().get_den());
                any = true;
            }
        if (!any) continue;
        make_primitive(v);
        for (std::size_t c = 0; c < cols; ++c) {
            if (v[c] == 0) continue;
            const auto it = echelon.find(static_cast<Index>(c));
            if (it == echelon.end()) {
                echelon.emplace(static_cast<Index>(c), std::move(v));
                break;
            }
            const auto& e = it->second;
            mpz_class g = gcd(e[c], v[c]);
            const mpz_class fe = v[c] / g, fv = e[c] / g;
            for (std::size_t k = c; k < cols; ++k) v[k] = v[k] * fv - e[k] * fe;
            make_primitive(v);
        }
    }
    return static_cast<Index>(echelon.size());
}

std::optional<int> t_adic_minor_valuation(const Mat<RatFunc>& input) {
    Mat<RatFunc> a = input;
    const Index r = std::min(a.rows(), a.cols());
    int total = 0;
    for (Index k = 0; k < r; ++k) {
        Index pi = -1, pj = -1;
        int best = std::numeric_limits<int>::max();
        for (Index i = k; i < a.rows(); ++i)
            for (Index j = k; j < a.cols(); ++j) {
                if (a(i, j).is_zero()) continue;
                const int v = a(i, j).valuation();
                if (v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) return std::nullopt;
        a.row(pi).swap(a.row(k));
        a.col(pj).swap(a.col(k));
        total += best;
        const RatFunc inv = a(k, k).inverse();
        for (Index i = k + 1; i < a.rows(); ++i) {
            if (a(i, k).is_zero()) continue;
            const RatFunc f = a(i, k) * inv;
            for (Index j = k + 1; j < a.cols(); ++j)
                if (!a(k, j).is_zero()) a(i, j) -= f * a(k, j);
            a(i, k) = RatFunc(0);
        }
    }
    return total;
}

UPoly sampled_minor_gcd(const Mat<UPoly>& a, int samples, std::uint64_t seed, int* attempts) {
    if (a.rows() > a.cols()) return sampled_minor_gcd(Mat<UPoly>(a.transpose()), samples, seed, attempts);
    const Index m = a.rows();
    std::mt19937_64 rng(seed);
    std::vector<Index> cols(static_cast<std::size_t>(a.cols()));
    std::iota(cols.begin(), cols.end(), Index{0});
    std::set<std::vector<Index>> seen;
    UPoly g;
    int found = 0, tries = 0;
    const int budget = 256 * samples;
    while (found < samples && tries < budget) {
        ++tries;
        std::shuffle(cols.begin(), cols.end(), rng);
        std::vector<Index> pick(cols.begin(), cols.begin() + m);
        std::sort(pick.begin(), pick.end());
        if (!seen.insert(pick).second) continue;
        Mat<UPoly> sub(m, m);
        for (Index j = 0; j < m; ++j) sub.col(j) = a.col(pick[static_cast<std::size_t>(j)]);
        const UPoly d = determinant(sub);
        if (d.is_zero()) continue;
        g = gcd(g, d);
        ++found;
    }
    if (attempts) *attempts = tries;
    return g;
}

std::optional<int> sampled_minor_valuation(const Mat<UPoly>& a, int samples, std::uint64_t seed) {
    const UPoly g = sampled_minor_gcd(a, samples, seed, nullptr);
    if (g.is_zero()) return std::nullopt;
    return g.order();
}

Mat<UPoly> clear_denominators(const Mat<RatFunc>& a) {
    Mat<UPoly> out(a.rows(), a.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        mpz_class l = 1;
        for (Index j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            if (!a(i, j).is_polynomial()) throw PreconditionError("clear_denominators: entry is not a polynomial in t");
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).scalar().denominator().get_mpz_t());
        }
        for (Index j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) {
                out(i, j) = UPoly();
                continue;
            }
            UPoly p = a(i, j).num();
            p *= mpz_class(a(i, j).scalar().numerator() * (l / a(i, j).scalar().denominator()));
            out(i, j) = p;
        }
    }
    return out;
}

}  // namespace hilbcheck
