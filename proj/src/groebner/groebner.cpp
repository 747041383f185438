#include "hilbcheck/groebner/groebner.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace hilbcheck {

namespace {

template <class K>
void check_order(const OrderPtr& order, int nvars) {
    if (!order->is_global()) throw PreconditionError("Buchberger needs a global order; got " + order->describe());
    if (order->kind == OrderKind::Weight && static_cast<int>(order->weight.size()) != nvars)
        throw PreconditionError("weight vector has the wrong length");
}

/// Interreduce a Groebner basis into reduced form.
template <class K>
std::vector<Polynomial<K>> reduce_basis(std::vector<Polynomial<K>> G) {
    std::vector<Polynomial<K>> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& li = G[i].lead_monomial();
            const Monomial& lj = G[j].lead_monomial();
            if (lj.divides(li) && (lj != li || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(G[i]);
    }
    std::vector<Polynomial<K>> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial<K>> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        out.push_back(divide(minimal[i], others).remainder.monic());
    }
    const MonomialOrder& ord = *out.front().order();
    std::sort(out.begin(), out.end(), [&](const Polynomial<K>& a, const Polynomial<K>& b) { return ord.greater(b.lead_monomial(), a.lead_monomial()); });
    return out;
}

template <class K>
Polynomial<K> remap(const Polynomial<K>& f, int nvars, const std::vector<int>& target, OrderPtr order) {
    std::vector<typename Polynomial<K>::Term> ts;
    for (const auto& [m, c] : f.terms()) {
        Monomial mm(nvars);
        for (int i = 0; i < f.nvars(); ++i) {
            const int t = target[static_cast<std::size_t>(i)];
            if (t >= 0) mm.set(t, m[i]);
            else if (m[i] != 0) throw std::logic_error("remap: dropping a variable that occurs");
        }
        ts.emplace_back(mm, c);
    }
    return Polynomial<K>::from_terms(nvars, ts, f.domain(), std::move(order));
}

}  // namespace

template <class K>
Division<K> divide(const Polynomial<K>& f, const std::vector<Polynomial<K>>& basis) {
    const OrderPtr order = basis.empty() ? f.order() : basis.front().order();
    Division<K> d;
    for (std::size_t k = 0; k < basis.size(); ++k) d.quotients.emplace_back(f.nvars(), f.domain(), order);
    d.remainder = Polynomial<K>(f.nvars(), f.domain(), order);
    Polynomial<K> p = f.with_order(order);
    while (!p.is_zero()) {
        const Monomial lt = p.lead_monomial();
        bool reduced = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const auto& g = basis[k];
            if (!g.lead_monomial().divides(lt)) continue;
            const Monomial q = lt / g.lead_monomial();
            const K c = p.lead_coeff() / g.lead_coeff();
            p -= g.times_term(q, c);
            d.quotients[k] += Polynomial<K>::term(q, c, f.domain(), order);
            reduced = true;
            break;
        }
        if (!reduced) d.remainder.append_smaller(p.pop_lead());
    }
    return d;
}

template <class K>
GroebnerBasis<K> buchberger(const Ideal<K>& I, OrderPtr order) {
    const int n = I.nvars();
    check_order<K>(order, n);
    GroebnerBasis<K> out;
    out.ctx = I.ctx;
    out.dom = I.dom;
    out.order = order;

    std::vector<Polynomial<K>> G;
    std::set<std::pair<std::size_t, std::size_t>> pending;
    auto add = [&](Polynomial<K> h) {
        h = h.monic();
        const std::size_t k = G.size();
        G.push_back(std::move(h));
        for (std::size_t i = 0; i < k; ++i) pending.insert({i, k});
    };
    for (const auto& g : I.gens) {
        Polynomial<K> p = divide(g.with_order(order), G).remainder;
        if (!p.is_zero()) add(std::move(p));
    }

    while (!pending.empty()) {
        // normal strategy: least lcm degree, ties by generator index
        auto best = pending.begin();
        int best_deg = lcm(G[best->first].lead_monomial(), G[best->second].lead_monomial()).degree();
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            const int deg = lcm(G[it->first].lead_monomial(), G[it->second].lead_monomial()).degree();
            if (deg < best_deg) {
                best = it;
                best_deg = deg;
            }
        }
        const auto [i, j] = *best;
        pending.erase(best);
        const Monomial& li = G[i].lead_monomial();
        const Monomial& lj = G[j].lead_monomial();
        if (coprime(li, lj)) continue;
        const Monomial l = lcm(li, lj);
        bool chain = false;
        for (std::size_t k = 0; k < G.size() && !chain; ++k) {
            if (k == i || k == j || !G[k].lead_monomial().divides(l)) continue;
            const auto ik = std::minmax(i, k);
            const auto jk = std::minmax(j, k);
            if (!pending.count({ik.first, ik.second}) && !pending.count({jk.first, jk.second})) chain = true;
        }
        if (chain) continue;
        const K one = I.dom.from_integer(1);
        Polynomial<K> s = G[i].times_term(l / li, one) - G[j].times_term(l / lj, one);
        Polynomial<K> r = divide(s, G).remainder;
        if (r.is_zero()) continue;
        if (r.is_constant()) {
            G.assign(1, Polynomial<K>::constant(n, one, I.dom, order));
            pending.clear();
            break;
        }
        add(std::move(r));
    }
    if (G.empty()) return out;
    out.elements = reduce_basis(std::move(G));
    return out;
}

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const GroebnerBasis<K>& G) {
    if (G.elements.empty()) return f.with_order(G.order);
    return divide(f, G.elements).remainder;
}

template <class K>
bool has_finite_colength(const GroebnerBasis<K>& G) {
    if (G.elements.empty()) return false;
    for (int i = 0; i < G.nvars(); ++i) {
        bool found = false;
        for (const auto& g : G.elements) {
            const Monomial& m = g.lead_monomial();
            if (m.degree() == m[i]) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

template <class K>
std::vector<Monomial> quotient_basis(const GroebnerBasis<K>& G) {
    if (!has_finite_colength(G)) throw DomainError("the ideal does not have finite colength");
    std::vector<Monomial> leads;
    for (const auto& g : G.elements) leads.push_back(g.lead_monomial());
    auto standard = [&](const Monomial& m) {
        return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
    };
    std::vector<Monomial> out;
    std::unordered_set<Monomial, MonomialHash> seen;
    std::deque<Monomial> queue;
    const Monomial one(G.nvars());
    if (standard(one)) {
        queue.push_back(one);
        seen.insert(one);
    }
    while (!queue.empty()) {
        const Monomial m = queue.front();
        queue.pop_front();
        out.push_back(m);
        for (int i = 0; i < G.nvars(); ++i) {
            const Monomial mm = m * Monomial::variable(G.nvars(), i);
            if (seen.count(mm) || !standard(mm)) continue;
            seen.insert(mm);
            queue.push_back(mm);
        }
    }
    const MonomialOrder& ord = *G.order;
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ord.greater(b, a); });
    return out;
}

template <class K>
std::size_t colength(const Ideal<K>& I) {
    return quotient_basis(buchberger(I)).size();
}

template <class K>
std::optional<int> maximal_ideal_power_in(const Ideal<K>& I) {
    const GroebnerBasis<K> G = buchberger(I);
    if (!has_finite_colength(G)) return std::nullopt;
    const auto n = static_cast<int>(quotient_basis(G).size());
    for (int D = 0; D <= n; ++D) {
        bool all = true;
        for (const Monomial& m : monomials_of_degree(I.nvars(), D)) {
            if (!normal_form(Polynomial<K>::monomial(m, I.dom), G).is_zero()) {
                all = false;
                break;
            }
        }
        if (all) return D;
    }
    return std::nullopt;
}

namespace {

// in_w(I) for I containing m^D, by echelon form of (I + m^D)/m^D with
// columns sorted by decreasing weight.
template <class K>
Ideal<K> truncated_initial_ideal(const Ideal<K>& I, const std::vector<long>& w, int D) {
    const int n = I.nvars();
    std::vector<Monomial> cols;
    for (int e = 0; e < D; ++e)
        for (const Monomial& m : monomials_of_degree(n, e)) cols.push_back(m);
    std::stable_sort(cols.begin(), cols.end(), [&](const Monomial& a, const Monomial& b) { return a.dot(w) > b.dot(w); });
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    for (std::size_t c = 0; c < cols.size(); ++c) index[cols[c]] = c;

    const std::size_t target = cols.size() - colength(I);
    std::vector<std::vector<K>> rows;   // echelon rows, zero before their pivot
    std::vector<std::size_t> pivots;
    std::vector<long> pivot_of_col(cols.size(), -1);
    const K zero = I.dom.from_integer(0);

    auto insert = [&](const Polynomial<K>& f) {
        std::vector<K> v(cols.size(), zero);
        bool any = false;
        for (const auto& [m, c] : f.terms()) {
            if (m.degree() >= D) continue;
            v[index.at(m)] = c;
            any = true;
        }
        if (!any) return;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (is_zero(v[c])) continue;
            const long r = pivot_of_col[c];
            if (r < 0) {
                const K inv = K(I.dom.from_integer(1)) / v[c];
                for (std::size_t k = c; k < cols.size(); ++k)
                    if (!is_zero(v[k])) v[k] *= inv;
                pivot_of_col[c] = static_cast<long>(rows.size());
                pivots.push_back(c);
                rows.push_back(std::move(v));
                return;
            }
            const K f0 = v[c];
            const auto& row = rows[static_cast<std::size_t>(r)];
            for (std::size_t k = c; k < cols.size(); ++k)
                if (!is_zero(row[k])) v[k] -= f0 * row[k];
        }
    };

    for (int e = 0; e < D && rows.size() < target; ++e)
        for (const Monomial& m : monomials_of_degree(n, e)) {
            for (const auto& g : I.gens) {
                insert(g.times_term(m, I.dom.from_integer(1)));
                if (rows.size() == target) break;
            }
            if (rows.size() == target) break;
        }
    if (rows.size() != target) throw std::logic_error("truncated initial ideal: rank deficit");

    std::vector<Polynomial<K>> gens;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const long wt = cols[pivots[r]].dot(w);
        std::vector<typename Polynomial<K>::Term> ts;
        for (std::size_t c = pivots[r]; c < cols.size() && cols[c].dot(w) == wt; ++c)
            if (!is_zero(rows[r][c])) ts.emplace_back(cols[c], rows[r][c]);
        gens.push_back(Polynomial<K>::from_terms(n, ts, I.dom));
    }
    for (const Monomial& m : monomials_of_degree(n, D)) gens.push_back(Polynomial<K>::monomial(m, I.dom));
    return Ideal<K>(I.ctx, buchberger(I.with_generators(gens)).elements);
}

}  // namespace

template <class K>
Ideal<K> initial_ideal(const Ideal<K>& I, const std::vector<long>& w) {
    if (static_cast<int>(w.size()) != I.nvars()) throw PreconditionError("weight vector has the wrong length");
    if (std::all_of(w.begin(), w.end(), [](long v) { return v >= 0; })) {
        const GroebnerBasis<K> G = buchberger(I, MonomialOrder::weighted(w));
        std::vector<Polynomial<K>> gens;
        for (const auto& g : G.elements) gens.push_back(g.weight_initial_form(w).with_order(MonomialOrder::grevlex()));
        return Ideal<K>(I.ctx, buchberger(I.with_generators(gens)).elements);
    }
    const auto D = maximal_ideal_power_in(I);
    if (!D) throw PreconditionError("initial ideal for a weight with negative entries needs an ideal containing a power of the maximal ideal");
    return truncated_initial_ideal(I, w, *D);
}

template <class K>
Polynomial<K> extend_variables(const Polynomial<K>& f, int nvars) {
    std::vector<int> target(static_cast<std::size_t>(f.nvars()));
    for (int i = 0; i < f.nvars(); ++i) target[static_cast<std::size_t>(i)] = i;
    return remap(f, nvars, target, MonomialOrder::grevlex());
}

template <class K>
Ideal<K> eliminate(const Ideal<K>& I, const std::vector<int>& vars) {
    const int n = I.nvars();
    std::vector<long> w(static_cast<std::size_t>(n), 0);
    for (int v : vars) {
        if (v < 0 || v >= n) throw PreconditionError("eliminate: variable index out of range");
        w[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<int> target(static_cast<std::size_t>(n), -1);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        if (w[static_cast<std::size_t>(i)] == 0) {
            target[static_cast<std::size_t>(i)] = static_cast<int>(names.size());
            names.push_back(I.ctx.names[static_cast<std::size_t>(i)]);
        }
    if (names.empty()) throw PreconditionError("eliminate: cannot eliminate every variable");
    const GroebnerBasis<K> G = buchberger(I, MonomialOrder::weighted(w));
    VariableContext ctx(I.ctx.field, names, I.ctx.dual);
    std::vector<Polynomial<K>> kept;
    for (const auto& g : G.elements) {
        if (g.lead_monomial().dot(w) != 0) continue;
        kept.push_back(remap(g, static_cast<int>(names.size()), target, MonomialOrder::grevlex()));
    }
    Ideal<K> J(ctx, kept);
    return Ideal<K>(ctx, buchberger(J).elements);
}

template <class K>
Ideal<K> intersect(const Ideal<K>& I, const Ideal<K>& J) {
    if (I.nvars() != J.nvars()) throw PreconditionError("intersect: ideals live in different rings");
    const int n = I.nvars();
    std::vector<std::string> names = I.ctx.names;
    std::string aux = "_T";
    while (I.ctx.index_of(aux)) aux += "_";
    names.push_back(aux);
    VariableContext big(I.ctx.field, names, I.ctx.dual);
    Ideal<K> H(big);
    const auto T = Polynomial<K>::variable(n + 1, n, I.dom);
    const auto one = Polynomial<K>::constant(n + 1, I.dom.from_integer(1), I.dom);
    for (const auto& f : I.gens) H.gens.push_back(T * extend_variables(f, n + 1));
    for (const auto& g : J.gens) H.gens.push_back((one - T) * extend_variables(g, n + 1));
    Ideal<K> E = eliminate(H, {n});
    E.ctx = I.ctx;
    return E;
}

template <class K>
bool ideal_equal(const Ideal<K>& I, const Ideal<K>& J) {
    if (I.nvars() != J.nvars()) return false;
    return buchberger(I).elements == buchberger(J).elements;
}

template <class K>
SyzygyBasis<K> schreyer_syzygies(const GroebnerBasis<K>& G) {
    SyzygyBasis<K> out;
    const auto& B = G.elements;
    const K one = G.dom.from_integer(1);
    for (std::size_t j = 0; j < B.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) {
            const Monomial l = lcm(B[i].lead_monomial(), B[j].lead_monomial());
            const Monomial mi = l / B[i].lead_monomial();
            const Monomial mj = l / B[j].lead_monomial();
            const K ci = one / B[i].lead_coeff();
            const K cj = one / B[j].lead_coeff();
            const Polynomial<K> s = B[i].times_term(mi, ci) - B[j].times_term(mj, cj);
            Division<K> d = divide(s, B);
            if (!d.remainder.is_zero()) throw std::logic_error("schreyer_syzygies: input is not a Groebner basis");
            std::vector<Polynomial<K>> rel;
            for (std::size_t k = 0; k < B.size(); ++k) {
                Polynomial<K> e = -d.quotients[k];
                if (k == i) e += Polynomial<K>::term(mi, ci, G.dom, G.order);
                if (k == j) e -= Polynomial<K>::term(mj, cj, G.dom, G.order);
                rel.push_back(std::move(e));
            }
            out.relations.push_back(std::move(rel));
        }
    return out;
}

template <class K>
SyzygyBasis<K> linear_syzygies(const std::vector<Polynomial<K>>& quadrics, const VariableContext& ctx) {
    if (ctx.nvars() != 4) throw PreconditionError("linear_syzygies: needs 4 variables");
    if (quadrics.size() != 7) throw PreconditionError("linear_syzygies: needs exactly 7 quadrics");
    const auto dom = make_domain<K>(ctx.field);
    const auto deg2 = monomials_of_degree(4, 2);
    const auto deg3 = monomials_of_degree(4, 3);
    Mat<K> c2 = zeros<K>(10, 7);
    for (std::size_t i = 0; i < 7; ++i) {
        const auto& q = quadrics[i];
        if (q.is_zero() || !q.is_homogeneous() || q.total_degree() != 2) throw PreconditionError("linear_syzygies: inputs must be quadratic forms");
        for (std::size_t r = 0; r < 10; ++r) c2(static_cast<Index>(r), static_cast<Index>(i)) = q.coeff(deg2[r]);
    }
    if (mat_rank(c2) != 7) throw PreconditionError("linear_syzygies: quadrics are linearly dependent");
    Mat<K> mult = zeros<K>(20, 28);
    std::unordered_map<Monomial, Index, MonomialHash> row;
    for (std::size_t r = 0; r < 20; ++r) row[deg3[r]] = static_cast<Index>(r);
    for (int i = 0; i < 7; ++i)
        for (int a = 0; a < 4; ++a) {
            const auto p = quadrics[static_cast<std::size_t>(i)].times_term(Monomial::variable(4, a), dom.from_integer(1));
            for (const auto& [m, c] : p.terms()) mult(row.at(m), i * 4 + a) = c;
        }
    if (mat_rank(mult) != 20) throw PreconditionError("linear_syzygies: Hilbert function is not (1,4,3) (degree-3 span deficient)");
    const Mat<K> ker = kernel_basis(mult);
    SyzygyBasis<K> out;
    for (Index k = 0; k < ker.cols(); ++k) {
        std::vector<Polynomial<K>> rel;
        for (int i = 0; i < 7; ++i) {
            Polynomial<K> l(4, dom);
            for (int a = 0; a < 4; ++a) l += Polynomial<K>::term(Monomial::variable(4, a), ker(i * 4 + a, k), dom);
            rel.push_back(std::move(l));
        }
        out.relations.push_back(std::move(rel));
    }
    return out;
}

template <class K>
Mat<K> evaluation_matrix(const std::vector<std::vector<K>>& points, const std::vector<Monomial>& lambda, typename K::Domain dom) {
    Mat<K> e(static_cast<Index>(points.size()), static_cast<Index>(lambda.size()));
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < lambda.size(); ++j) {
            K v = dom.from_integer(1);
            for (int k = 0; k < lambda[j].nvars(); ++k)
                for (int p = 0; p < lambda[j][k]; ++p) v *= points[i][static_cast<std::size_t>(k)];
            e(static_cast<Index>(i), static_cast<Index>(j)) = v;
        }
    return e;
}

template <class K>
GroebnerBasis<K> points_ideal(const VariableContext& ctx, const std::vector<std::vector<K>>& points) {
    const int n = ctx.nvars();
    const auto dom = make_domain<K>(ctx.field);
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != n) throw PreconditionError("points_ideal: point has the wrong dimension");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (points[i] == points[j]) throw PreconditionError("points_ideal: duplicate point");
    if (points.empty()) throw PreconditionError("points_ideal: no points");

    const OrderPtr order = MonomialOrder::grevlex();
    const std::size_t npts = points.size();
    const K zero = dom.from_integer(0), one = dom.from_integer(1);

    std::vector<Monomial> lambda;
    std::vector<std::vector<K>> basis;   // reduced evaluation vectors
    std::vector<std::vector<K>> combo;   // basis[k] = sum combo[k][j] * eval(lambda[j])
    std::vector<std::size_t> pivot;
    std::vector<Polynomial<K>> G;
    std::vector<Monomial> leads;

    auto cmp = [&](const Monomial& a, const Monomial& b) { return order->greater(b, a); };
    std::set<Monomial, decltype(cmp)> candidates(cmp);
    candidates.insert(Monomial(n));
    while (!candidates.empty()) {
        const Monomial m = *candidates.begin();
        candidates.erase(candidates.begin());
        if (std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); })) continue;
        std::vector<K> v(npts, zero);
        const Mat<K> e = evaluation_matrix(points, {m}, dom);
        for (std::size_t i = 0; i < npts; ++i) v[i] = e(static_cast<Index>(i), 0);
        std::vector<K> c(lambda.size(), zero);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const K f = v[pivot[k]];
            if (is_zero(f)) continue;
            for (std::size_t i = 0; i < npts; ++i)
                if (!is_zero(basis[k][i])) v[i] -= f * basis[k][i];
            for (std::size_t j = 0; j < combo[k].size(); ++j)
                if (!is_zero(combo[k][j])) c[j] -= f * combo[k][j];
        }
        std::size_t piv = npts;
        for (std::size_t i = 0; i < npts; ++i)
            if (!is_zero(v[i])) {
                piv = i;
                break;
            }
        if (piv == npts) {
            // m + sum c_j lambda_j vanishes on the points
            std::vector<typename Polynomial<K>::Term> ts;
            ts.emplace_back(m, one);
            for (std::size_t j = 0; j < lambda.size(); ++j) ts.emplace_back(lambda[j], c[j]);
            G.push_back(Polynomial<K>::from_terms(n, ts, dom, order));
            leads.push_back(m);
            continue;
        }
        const K inv = one / v[piv];
        for (auto& x : v) x *= inv;
        c.push_back(one);
        for (auto& x : c) x *= inv;
        lambda.push_back(m);
        for (auto& cc : combo) cc.push_back(zero);
        basis.push_back(std::move(v));
        combo.push_back(std::move(c));
        pivot.push_back(piv);
        for (int i = 0; i < n; ++i) candidates.insert(m * Monomial::variable(n, i));
    }
    GroebnerBasis<K> out;
    out.ctx = ctx;
    out.dom = dom;
    out.order = order;
    const MonomialOrder& ord = *order;
    std::sort(G.begin(), G.end(), [&](const Polynomial<K>& a, const Polynomial<K>& b) { return ord.greater(b.lead_monomial(), a.lead_monomial()); });
    out.elements = std::move(G);
    return out;
}

template <class K>
K delta_ratio(const std::vector<std::vector<K>>& points, const std::vector<Monomial>& lambda, const Monomial& m, const Monomial& mprime,
              typename K::Domain dom) {
    if (points.size() != lambda.size()) throw PreconditionError("delta_ratio: need as many points as standard monomials");
    const auto pos = std::find(lambda.begin(), lambda.end(), mprime);
    if (pos == lambda.end()) throw PreconditionError("delta_ratio: m' must belong to lambda");
    if (std::find(lambda.begin(), lambda.end(), m) != lambda.end()) throw PreconditionError("delta_ratio: m must not belong to lambda");
    const Mat<K> E = evaluation_matrix(points, lambda, dom);
    const K base = determinant(E);
    if (is_zero(base)) throw PreconditionError("delta_ratio: Delta_lambda = 0, the points are not in the chart U_lambda");
    std::vector<Monomial> swapped = lambda;
    swapped[static_cast<std::size_t>(pos - lambda.begin())] = m;
    return determinant(evaluation_matrix(points, swapped, dom)) / base;
}

#define HILBCHECK_INSTANTIATE_GROEBNER(K)                                                                                        \
    template Division<K> divide<K>(const Polynomial<K>&, const std::vector<Polynomial<K>>&);                                    \
    template GroebnerBasis<K> buchberger<K>(const Ideal<K>&, OrderPtr);                                                          \
    template Polynomial<K> normal_form<K>(const Polynomial<K>&, const GroebnerBasis<K>&);                                       \
    template bool has_finite_colength<K>(const GroebnerBasis<K>&);                                                               \
    template std::vector<Monomial> quotient_basis<K>(const GroebnerBasis<K>&);                                                   \
    template std::size_t colength<K>(const Ideal<K>&);                                                                           \
    template std::optional<int> maximal_ideal_power_in<K>(const Ideal<K>&);                                                      \
    template Ideal<K> initial_ideal<K>(const Ideal<K>&, const std::vector<long>&);                                               \
    template Polynomial<K> extend_variables<K>(const Polynomial<K>&, int);                                                       \
    template Ideal<K> eliminate<K>(const Ideal<K>&, const std::vector<int>&);                                                    \
    template Ideal<K> intersect<K>(const Ideal<K>&, const Ideal<K>&);                                                            \
    template bool ideal_equal<K>(const Ideal<K>&, const Ideal<K>&);                                                              \
    template SyzygyBasis<K> schreyer_syzygies<K>(const GroebnerBasis<K>&);                                                       \
    template SyzygyBasis<K> linear_syzygies<K>(const std::vector<Polynomial<K>>&, const VariableContext&);                       \
    template Mat<K> evaluation_matrix<K>(const std::vector<std::vector<K>>&, const std::vector<Monomial>&, typename K::Domain);  \
    template GroebnerBasis<K> points_ideal<K>(const VariableContext&, const std::vector<std::vector<K>>&);                       \
    template K delta_ratio<K>(const std::vector<std::vector<K>>&, const std::vector<Monomial>&, const Monomial&, const Monomial&, \
                              typename K::Domain);

HILBCHECK_INSTANTIATE_GROEBNER(Rational)
HILBCHECK_INSTANTIATE_GROEBNER(Fp)
HILBCHECK_INSTANTIATE_GROEBNER(RatFunc)

}  // namespace hilbcheck
