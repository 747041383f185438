#pragma once

#include <string>
#include <variant>
#include <vector>

#include "hilbcheck/kernel/errors.hpp"
#include "hilbcheck/poly/context.hpp"
#include "hilbcheck/poly/polynomial.hpp"

namespace hilbcheck {

template <class K>
typename K::Domain make_domain(const FieldSpec& f);

template <>
inline Rational::Domain make_domain<Rational>(const FieldSpec& f) {
    if (f.kind != FieldKind::Q) throw PreconditionError("field " + f.name() + " is not Q");
    return {};
}
template <>
inline Fp::Domain make_domain<Fp>(const FieldSpec& f) {
    if (f.kind != FieldKind::Fp) throw PreconditionError("field " + f.name() + " is not a prime field");
    return Fp::Domain::make(f.p);
}
template <>
inline RatFunc::Domain make_domain<RatFunc>(const FieldSpec& f) {
    if (f.kind != FieldKind::Qt) throw PreconditionError("field " + f.name() + " is not Q(t)");
    return {};
}

/// Ideal given by generators in a fixed ring.
template <class K>
struct Ideal {
    using Domain = typename K::Domain;

    VariableContext ctx;
    Domain dom{};
    std::vector<Polynomial<K>> gens;

    Ideal() = default;
    explicit Ideal(VariableContext c) : ctx(std::move(c)), dom(make_domain<K>(ctx.field)) {}
    Ideal(VariableContext c, std::vector<Polynomial<K>> g) : Ideal(std::move(c)) {
        for (auto& p : g)
            if (!p.is_zero()) gens.push_back(std::move(p));
    }

    int nvars() const { return ctx.nvars(); }
    Polynomial<K> zero() const { return Polynomial<K>(nvars(), dom); }
    Polynomial<K> one() const { return Polynomial<K>::constant(nvars(), dom.from_integer(1), dom); }
    Polynomial<K> var(int i) const { return Polynomial<K>::variable(nvars(), i, dom); }
    Polynomial<K> constant(const K& c) const { return Polynomial<K>::constant(nvars(), c, dom); }
    Polynomial<K> integer(long v) const { return constant(dom.from_integer(v)); }

    /// Same ring, new generators.
    Ideal with_generators(std::vector<Polynomial<K>> g) const { return Ideal(ctx, std::move(g)); }

    std::string to_string() const {
        std::string s = "<";
        for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + gens[i].to_string(ctx.names);
        return s + ">";
    }
};

using AnyIdeal = std::variant<Ideal<Rational>, Ideal<Fp>, Ideal<RatFunc>>;

}  // namespace hilbcheck
