#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hilbcheck/groebner/groebner.hpp"
#include "hilbcheck/poly/parser.hpp"

namespace hilbcheck::tools {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// --seed, else HILBCHECK_SEED, else kDefaultSeed.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag);

/// Uniform in [lo, hi]; plain modular reduction so draws agree across
/// standard libraries.
long draw(std::mt19937_64& rng, long lo, long hi);

/// Distinct points with integer coordinates in [-range, range].
std::vector<std::vector<Rational>> random_points(std::mt19937_64& rng, int npts, int d, long range = 6);

/// Invertible integer matrix with entries in [-3, 3].
Mat<Rational> random_invertible(std::mt19937_64& rng, int d);

template <class K = Rational>
Ideal<K> make_ideal(const VariableContext& ctx, const std::vector<std::string>& gens) {
    Ideal<K> I(ctx);
    for (const auto& g : gens) I.gens.push_back(parse_polynomial<K>(g, ctx));
    return I;
}

/// Fixture files compiled into the binary, keyed by file name.
std::optional<std::string_view> embedded_fixture(std::string_view name);
std::vector<std::string> embedded_fixture_names();

/// Contents of `path`, falling back to the embedded fixture with the same
/// file name. Throws PreconditionError if neither exists.
std::string read_input(const std::string& path);

AnyIdeal load_ideal(const std::string& path);

/// Points file: field/vars header, then "points:" and one comma-separated
/// point per line. `d` overrides a missing vars line.
template <class K>
std::vector<std::vector<K>> parse_points(std::string_view text, const VariableContext& ctx);

/// Header of a points file; when it has no vars line, `d` standard variables.
VariableContext points_context(std::string_view text, std::optional<int> d);

std::string field_name(const AnyIdeal& I);

}  // namespace hilbcheck::tools
