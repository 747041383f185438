#include "hilbcheck/poly/parser.hpp"

#include <cctype>
#include <sstream>

namespace hilbcheck {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    int column;
};

std::vector<Token> tokenize(std::string_view s, int line, int col0) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        const int col = col0 + static_cast<int>(i);
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::Number, std::string(s.substr(i, j - i)), col});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), col});
            i = j;
            continue;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '/': k = Tok::Slash; break;
            case '^': k = Tok::Caret; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        out.push_back({k, std::string(1, c), col});
        ++i;
    }
    out.push_back({Tok::End, "", col0 + static_cast<int>(s.size())});
    return out;
}

template <class K>
class Parser {
public:
    Parser(std::vector<Token> toks, const VariableContext& ctx, int line)
        : toks_(std::move(toks)), ctx_(ctx), dom_(make_domain<K>(ctx.field)), line_(line) {}

    Polynomial<K> parse() {
        if (peek().kind == Tok::End) fail("empty polynomial");
        Polynomial<K> p = expr();
        if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
        return p;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, peek().column); }
    [[noreturn]] void fail_at(const std::string& what, int column) const { throw ParseError(what, line_, column); }

    int n() const { return ctx_.nvars(); }

    Polynomial<K> constant(const mpq_class& q, int column) const {
        try {
            return Polynomial<K>::constant(n(), dom_.from_rational(q), dom_);
        } catch (const PreconditionError& e) {
            fail_at(std::string("coefficient not in field: ") + e.what(), column);
        }
    }

    Polynomial<K> expr() {
        Polynomial<K> acc = term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const bool minus = next().kind == Tok::Minus;
            Polynomial<K> t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    Polynomial<K> term() {
        Polynomial<K> acc = unary();
        while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
            const bool div = next().kind == Tok::Slash;
            const int col = peek().column;
            Polynomial<K> f = unary();
            if (!div) {
                acc *= f;
                continue;
            }
            if (!f.is_constant()) fail_at("division by a non-constant", col);
            if (f.is_zero()) fail_at("division by zero", col);
            acc = acc.scaled(K(dom_.from_integer(1)) / f.lead_coeff());
        }
        return acc;
    }

    Polynomial<K> unary() {
        if (peek().kind == Tok::Minus) {
            next();
            return -unary();
        }
        if (peek().kind == Tok::Plus) {
            next();
            return unary();
        }
        return power();
    }

    Polynomial<K> power() {
        Polynomial<K> base = atom();
        if (peek().kind != Tok::Caret) return base;
        next();
        const Token& e = peek();
        if (e.kind != Tok::Number) fail("malformed exponent: expected a nonnegative integer");
        next();
        if (e.text.size() > 4) fail_at("malformed exponent: " + e.text + " is too large", e.column);
        const int k = std::stoi(e.text);
        if (k > 1000) fail_at("malformed exponent: " + e.text + " is too large", e.column);
        return base.pow(k);
    }

    Polynomial<K> atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Number: {
                next();
                return constant(mpq_class(mpz_class(t.text)), t.column);
            }
            case Tok::Ident: {
                next();
                if (auto i = ctx_.index_of(t.text)) return Polynomial<K>::variable(n(), *i, dom_);
                if (t.text == "t") {
                    if constexpr (std::is_same_v<K, RatFunc>) return Polynomial<K>::constant(n(), RatFunc::t(), dom_);
                    fail_at("'t' is only allowed under 'field Qt'", t.column);
                }
                fail_at("unknown variable '" + t.text + "'", t.column);
            }
            case Tok::LParen: {
                next();
                Polynomial<K> p = expr();
                if (peek().kind != Tok::RParen) fail("expected ')'");
                next();
                return p;
            }
            case Tok::End: fail("unexpected end of input");
            default: fail("unexpected '" + t.text + "'");
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const VariableContext& ctx_;
    typename K::Domain dom_;
    int line_;
};

std::string strip_comment(std::string_view line) {
    const auto h = line.find('#');
    std::string s(h == std::string_view::npos ? line : line.substr(0, h));
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct RawLine {
    std::string text;
    int line;
    int column;  // column of text[0] in the source
};

std::vector<RawLine> content_lines(std::string_view text) {
    std::vector<RawLine> out;
    int lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++lineno;
        const std::string_view raw = text.substr(start, end - start);
        const std::string s = strip_comment(raw);
        if (!s.empty()) {
            const auto col = static_cast<int>(raw.find(s.front())) + 1;
            out.push_back({s, lineno, col});
        }
        if (end == text.size()) break;
        start = end + 1;
    }
    return out;
}

std::vector<std::string> words(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> w;
    for (std::string x; is >> x;) w.push_back(x);
    return w;
}

VariableContext parse_header(const std::vector<RawLine>& lines, std::size_t& pos) {
    if (lines.empty()) throw ParseError("empty ideal file", 1, 1);
    const RawLine& f = lines[pos];
    const auto fw = words(f.text);
    if (fw.empty() || fw[0] != "field") throw ParseError("expected 'field Q', 'field F <p>' or 'field Qt'", f.line, f.column);
    FieldSpec spec;
    if (fw.size() == 2 && fw[1] == "Q") {
        spec = FieldSpec::rationals();
    } else if (fw.size() == 2 && fw[1] == "Qt") {
        spec = FieldSpec::function_field();
    } else if (fw.size() == 3 && fw[1] == "F") {
        unsigned long p = 0;
        try {
            std::size_t used = 0;
            p = std::stoul(fw[2], &used);
            if (used != fw[2].size()) throw std::invalid_argument("p");
        } catch (const std::exception&) {
            throw ParseError("expected a prime after 'field F'", f.line, f.column);
        }
        if (p < 5 || p > 0xFFFFFFFFul || !is_prime(p)) throw ParseError("field F " + fw[2] + ": p must be a prime >= 5", f.line, f.column);
        spec = FieldSpec::prime(static_cast<std::uint32_t>(p));
    } else {
        throw ParseError("expected 'field Q', 'field F <p>' or 'field Qt'", f.line, f.column);
    }
    ++pos;
    if (pos >= lines.size()) throw ParseError("missing 'vars' line", f.line + 1, 1);
    const RawLine& v = lines[pos];
    auto vw = words(v.text);
    if (vw.empty() || vw[0] != "vars" || vw.size() < 2) throw ParseError("expected 'vars <name> ...'", v.line, v.column);
    vw.erase(vw.begin());
    for (const auto& name : vw) {
        const bool ok = (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_') &&
                        std::all_of(name.begin(), name.end(), [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; });
        if (!ok) throw ParseError("invalid variable name '" + name + "'", v.line, v.column);
    }
    ++pos;
    try {
        return VariableContext(spec, vw);
    } catch (const PreconditionError& e) {
        throw ParseError(e.what(), v.line, v.column);
    }
}

template <class K>
Ideal<K> parse_body(const VariableContext& ctx, const std::vector<RawLine>& lines, std::size_t pos) {
    Ideal<K> I(ctx);
    for (; pos < lines.size(); ++pos) {
        std::string s = lines[pos].text;
        int col = lines[pos].column;
        if (s.back() == ',') s.pop_back();
        if (s.empty()) continue;
        Polynomial<K> p = parse_polynomial<K>(s, ctx, lines[pos].line, col);
        if (!p.is_zero()) I.gens.push_back(std::move(p));
    }
    return I;
}

}  // namespace

template <class K>
Polynomial<K> parse_polynomial(std::string_view text, const VariableContext& ctx, int line, int column) {
    return Parser<K>(tokenize(text, line, column), ctx, line).parse();
}

VariableContext parse_context_header(std::string_view text) {
    const auto lines = content_lines(text);
    std::size_t pos = 0;
    return parse_header(lines, pos);
}

AnyIdeal parse_ideal_file(std::string_view text) {
    const auto lines = content_lines(text);
    std::size_t pos = 0;
    const VariableContext ctx = parse_header(lines, pos);
    if (pos >= lines.size() || lines[pos].text.rfind("ideal:", 0) != 0) {
        const int ln = pos < lines.size() ? lines[pos].line : (lines.empty() ? 1 : lines.back().line + 1);
        throw ParseError("expected 'ideal:'", ln, 1);
    }
    // allow a polynomial on the same line as "ideal:"
    std::vector<RawLine> body(lines.begin() + static_cast<std::ptrdiff_t>(pos), lines.end());
    const std::string rest = strip_comment(std::string_view(body[0].text).substr(6));
    if (rest.empty()) {
        body.erase(body.begin());
    } else {
        body[0].column += static_cast<int>(body[0].text.find(rest, 6));
        body[0].text = rest;
    }
    switch (ctx.field.kind) {
        case FieldKind::Q: return parse_body<Rational>(ctx, body, 0);
        case FieldKind::Fp: return parse_body<Fp>(ctx, body, 0);
        case FieldKind::Qt: return parse_body<RatFunc>(ctx, body, 0);
    }
    throw ParseError("unknown field", 1, 1);
}

template <class K>
std::string format_ideal_file(const Ideal<K>& ideal) {
    std::ostringstream os;
    os << "field ";
    switch (ideal.ctx.field.kind) {
        case FieldKind::Q: os << "Q"; break;
        case FieldKind::Fp: os << "F " << ideal.ctx.field.p; break;
        case FieldKind::Qt: os << "Qt"; break;
    }
    os << "\nvars";
    for (const auto& n : ideal.ctx.names) os << " " << n;
    os << "\nideal:\n";
    for (const auto& g : ideal.gens) os << g.to_string(ideal.ctx.names) << "\n";
    return os.str();
}

std::string format_any_ideal_file(const AnyIdeal& ideal) {
    return std::visit([](const auto& I) { return format_ideal_file(I); }, ideal);
}

template Polynomial<Rational> parse_polynomial<Rational>(std::string_view, const VariableContext&, int, int);
template Polynomial<Fp> parse_polynomial<Fp>(std::string_view, const VariableContext&, int, int);
template Polynomial<RatFunc> parse_polynomial<RatFunc>(std::string_view, const VariableContext&, int, int);
template std::string format_ideal_file<Rational>(const Ideal<Rational>&);
template std::string format_ideal_file<Fp>(const Ideal<Fp>&);
template std::string format_ideal_file<RatFunc>(const Ideal<RatFunc>&);

}  // namespace hilbcheck
