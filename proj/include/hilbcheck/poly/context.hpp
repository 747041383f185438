#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hilbcheck {

enum class FieldKind { Q, Fp, Qt };

struct FieldSpec {
    FieldKind kind = FieldKind::Q;
    std::uint32_t p = 0;  // only for Fp

    static FieldSpec rationals() { return {FieldKind::Q, 0}; }
    static FieldSpec prime(std::uint32_t p) { return {FieldKind::Fp, p}; }
    static FieldSpec function_field() { return {FieldKind::Qt, 0}; }

    unsigned characteristic() const { return kind == FieldKind::Fp ? p : 0; }
    std::string name() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Coefficient field plus ordered variable names. `dual` marks the ring
/// S* = k[y_1..y_d] acted on by differentiation.
struct VariableContext {
    FieldSpec field;
    std::vector<std::string> names;
    bool dual = false;

    VariableContext() = default;
    VariableContext(FieldSpec f, std::vector<std::string> vars, bool is_dual = false);

    /// x1..xd (or y1..yd when dual).
    static VariableContext standard(FieldSpec f, int d, bool is_dual = false);

    int nvars() const { return static_cast<int>(names.size()); }
    std::optional<int> index_of(const std::string& name) const;
    /// Same field and variable count, dual flag flipped, names x<->y.
    VariableContext dual_context() const;

    friend bool operator==(const VariableContext&, const VariableContext&) = default;
};

}  // namespace hilbcheck
