#pragma once

#include <string>
#include <string_view>

#include "hilbcheck/poly/ideal.hpp"

namespace hilbcheck {

/// Parse one polynomial. `line`/`column` locate the text in its source for
/// error messages. Throws ParseError.
template <class K>
Polynomial<K> parse_polynomial(std::string_view text, const VariableContext& ctx, int line = 1, int column = 1);

/// Parse a whole ideal file:
///   field Q | field F <p> | field Qt
///   vars <name> ...
///   ideal:
///   <one polynomial per line>
/// '#' starts a comment.
AnyIdeal parse_ideal_file(std::string_view text);

/// Header lines only (field and vars); used for points files.
VariableContext parse_context_header(std::string_view text);

/// Inverse of parse_ideal_file.
template <class K>
std::string format_ideal_file(const Ideal<K>& ideal);

std::string format_any_ideal_file(const AnyIdeal& ideal);

}  // namespace hilbcheck
