#pragma once

#include <vector>

#include "hilbcheck/groebner/groebner.hpp"

namespace hilbcheck {

// Macaulay duality. Dual elements are polynomials over the dual context
// (variables y_i); x_i acts on them as d/dy_i, so <x^a, y^b> = a! when a = b.

/// Components of an inverse system by degree: graded[j] spans I_j^perp.
template <class K>
struct InverseSystem {
    VariableContext ctx;  // dual variables
    std::vector<std::vector<Polynomial<K>>> graded;

    std::vector<int> dimensions() const {
        std::vector<int> h;
        for (const auto& c : graded) h.push_back(static_cast<int>(c.size()));
        while (!h.empty() && h.back() == 0) h.pop_back();
        return h;
    }
};

/// f acting on g as a constant-coefficient differential operator.
template <class K>
Polynomial<K> apply_operator(const Polynomial<K>& f, const Polynomial<K>& g);

/// Basis of I_j^perp in S*_j (RREF over the descending grevlex monomial basis).
template <class K>
std::vector<Polynomial<K>> perp(const Ideal<K>& I, int j);

/// perp(I, j) for j = 0, 1, ... up to the last nonzero component.
template <class K>
InverseSystem<K> inverse_system(const Ideal<K>& I);

/// The ideal of S annihilating the given homogeneous dual forms and all
/// their derivatives (every form of degree above the top degree included).
/// `ctx` is the primal context.
template <class K>
Ideal<K> ideal_from_inverse_system(const std::vector<Polynomial<K>>& gens, const VariableContext& ctx);

/// Closure of the given homogeneous dual forms under differentiation.
template <class K>
InverseSystem<K> differential_closure(const std::vector<Polynomial<K>>& gens, const VariableContext& dual_ctx);

}  // namespace hilbcheck
