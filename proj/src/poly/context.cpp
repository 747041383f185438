#include "hilbcheck/poly/context.hpp"

#include <set>

#include "hilbcheck/kernel/errors.hpp"
#include "hilbcheck/poly/monomial.hpp"

namespace hilbcheck {

std::string FieldSpec::name() const {
    switch (kind) {
        case FieldKind::Q: return "Q";
        case FieldKind::Fp: return "F" + std::to_string(p);
        case FieldKind::Qt: return "Qt";
    }
    return "?";
}

VariableContext::VariableContext(FieldSpec f, std::vector<std::string> vars, bool is_dual)
    : field(f), names(std::move(vars)), dual(is_dual) {
    if (names.empty()) throw PreconditionError("a polynomial ring needs at least one variable");
    if (static_cast<int>(names.size()) > kMaxVars)
        throw PreconditionError("at most " + std::to_string(kMaxVars) + " variables are supported");
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (!seen.insert(n).second) throw PreconditionError("duplicate variable name '" + n + "'");
        if (n == "t" && field.kind == FieldKind::Qt) throw PreconditionError("'t' is the parameter of Q(t), not a variable");
    }
}

VariableContext VariableContext::standard(FieldSpec f, int d, bool is_dual) {
    std::vector<std::string> v;
    for (int i = 1; i <= d; ++i) v.push_back((is_dual ? "y" : "x") + std::to_string(i));
    return {f, v, is_dual};
}

std::optional<int> VariableContext::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

VariableContext VariableContext::dual_context() const {
    std::vector<std::string> v;
    for (const auto& n : names) {
        std::string m = n;
        if (!m.empty() && (m[0] == 'x' || m[0] == 'y')) m[0] = m[0] == 'x' ? 'y' : 'x';
        else m = (dual ? "" : "d") + m;
        v.push_back(m);
    }
    VariableContext c;
    c.field = field;
    c.names = v;
    c.dual = !dual;
    return c;
}

}  // namespace hilbcheck
