#include "support.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "embedded_fixtures.hpp"

namespace hilbcheck::tools {

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("HILBCHECK_SEED"); env && *env) {
        char* end = nullptr;
        const auto v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
        throw PreconditionError(std::string("HILBCHECK_SEED is not an unsigned integer: ") + env);
    }
    return kDefaultSeed;
}

long draw(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::vector<std::vector<Rational>> random_points(std::mt19937_64& rng, int npts, int d, long range) {
    std::vector<std::vector<Rational>> pts;
    while (static_cast<int>(pts.size()) < npts) {
        std::vector<Rational> p;
        for (int i = 0; i < d; ++i) p.emplace_back(draw(rng, -range, range));
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
    }
    return pts;
}

Mat<Rational> random_invertible(std::mt19937_64& rng, int d) {
    while (true) {
        Mat<Rational> g(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) g(i, j) = Rational(draw(rng, -3, 3));
        if (!is_zero(determinant(g))) return g;
    }
}

std::optional<std::string_view> embedded_fixture(std::string_view name) {
    for (const auto& f : kEmbeddedFixtures)
        if (f.name == name) return f.text;
    return std::nullopt;
}

std::vector<std::string> embedded_fixture_names() {
    std::vector<std::string> names;
    for (const auto& f : kEmbeddedFixtures) names.emplace_back(f.name);
    return names;
}

std::string read_input(const std::string& path) {
    if (std::filesystem::is_regular_file(path)) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    if (const auto text = embedded_fixture(std::filesystem::path(path).filename().string())) return std::string(*text);
    throw PreconditionError("cannot read '" + path + "'");
}

AnyIdeal load_ideal(const std::string& path) { return parse_ideal_file(read_input(path)); }

namespace {

std::string strip(std::string_view s) {
    const auto hash = s.find('#');
    if (hash != std::string_view::npos) s = s.substr(0, hash);
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

}  // namespace

VariableContext points_context(std::string_view text, std::optional<int> d) {
    bool has_vars = false;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        const auto s = strip(line);
        if (s.rfind("vars", 0) == 0) has_vars = true;
        if (s.rfind("points:", 0) == 0) break;
    }
    if (has_vars) return parse_context_header(text);
    if (!d) throw PreconditionError("points file has no 'vars' line; pass -d");
    std::istringstream again{std::string(text)};
    FieldSpec field = FieldSpec::rationals();
    while (std::getline(again, line)) {
        const auto s = strip(line);
        if (s.rfind("field", 0) == 0) {
            field = parse_context_header(s + "\nvars x\n").field;
            break;
        }
    }
    return VariableContext::standard(field, *d);
}

template <class K>
std::vector<std::vector<K>> parse_points(std::string_view text, const VariableContext& ctx) {
    std::istringstream in{std::string(text)};
    std::string line;
    int ln = 0;
    bool body = false;
    std::vector<std::vector<K>> pts;
    while (std::getline(in, line)) {
        ++ln;
        const auto s = strip(line);
        if (!body) {
            if (s.rfind("points:", 0) == 0) body = true;
            continue;
        }
        if (s.empty()) continue;
        std::vector<K> p;
        std::size_t start = 0;
        while (true) {
            const auto comma = s.find(',', start);
            const std::string lit = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            const auto col = static_cast<int>(line.find(lit.empty() ? s : lit)) + 1;
            const auto f = parse_polynomial<K>(lit, ctx, ln, col);
            if (f.total_degree() > 0) throw ParseError("point coordinates must be constants", ln, col);
            p.push_back(f.coeff(Monomial(ctx.nvars())));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (static_cast<int>(p.size()) != ctx.nvars())
            throw ParseError("expected " + std::to_string(ctx.nvars()) + " coordinates, found " + std::to_string(p.size()), ln, 1);
        pts.push_back(std::move(p));
    }
    if (!body) throw ParseError("expected 'points:'", ln + 1, 1);
    return pts;
}

template std::vector<std::vector<Rational>> parse_points<Rational>(std::string_view, const VariableContext&);
template std::vector<std::vector<Fp>> parse_points<Fp>(std::string_view, const VariableContext&);
template std::vector<std::vector<RatFunc>> parse_points<RatFunc>(std::string_view, const VariableContext&);

std::string field_name(const AnyIdeal& I) {
    return std::visit([](const auto& J) { return J.ctx.field.name(); }, I);
}

}  // namespace hilbcheck::tools
