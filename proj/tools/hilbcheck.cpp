#include <CLI11.hpp>
#include <iostream>
#include <thread>

#include "hilbcheck/smooth/smooth.hpp"
#include "hilbcheck/tangent/tangent.hpp"
#include "json.hpp"
#include "suite.hpp"
#include "support.hpp"

using namespace hilbcheck;
using namespace hilbcheck::tools;
using json = nlohmann::ordered_json;
using hilbcheck::to_string;

namespace {

struct Output {
    bool as_json = false;
    std::string command, input;
    json result;
    std::string text;

    void emit(const AnyIdeal* I) const {
        if (!as_json) {
            std::cout << text;
            return;
        }
        nlohmann::ordered_json j;
        j["command"] = command;
        if (!input.empty()) j["input"] = input;
        if (I) j["field"] = field_name(*I);
        j["result"] = result;
        std::cout << j.dump(2) << "\n";
    }
};

template <class K>
std::string point_text(const std::vector<K>& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i].to_string();
    return s + ")";
}

template <class K>
json hilbert_functions(const Ideal<K>& I, std::string& text) {
    json pieces = json::array();
    if (is_primary_at_origin(I)) {
        const auto h = local_hilbert_function(I);
        text = to_string(h) + "\n";
        pieces.push_back({{"point", std::vector<std::string>(static_cast<std::size_t>(I.nvars()), "0")}, {"hilbert_function", h}});
        return pieces;
    }
    const auto split = split_rational_support(I);
    if (!split.ok()) throw DomainError(*split.indeterminate);
    for (const auto& piece : split.pieces) {
        const auto h = local_hilbert_function(translate_ideal(piece.ideal, piece.point));
        text += point_text(piece.point) + ": " + to_string(h) + "\n";
        std::vector<std::string> pt;
        for (const auto& c : piece.point) pt.push_back(c.to_string());
        pieces.push_back({{"point", pt}, {"hilbert_function", h}});
    }
    return pieces;
}

std::vector<long> parse_weights(const std::string& s) {
    std::vector<long> w;
    std::size_t start = 0;
    while (true) {
        const auto comma = s.find(',', start);
        const std::string part = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(part, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != part.size()) throw PreconditionError("bad weight vector '" + s + "'");
        w.push_back(v);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return w;
}

int fail(const std::string& what, int code) {
    std::cerr << "hilbcheck: " << what << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations on zero-dimensional ideals and their smoothability"};
    app.require_subcommand(1);
    bool as_json = false;
    std::optional<std::uint64_t> seed_flag;
    app.add_flag("--json", as_json, "Machine-readable output");
    app.add_option("--seed", seed_flag, "Seed for randomized checks (default: $HILBCHECK_SEED or 20240601)");

    std::string file;
    const auto with_file = [&](CLI::App* sub) { sub->add_option("file", file, "Ideal file (or the name of a bundled fixture)")->required(); };

    auto* colength_cmd = app.add_subcommand("colength", "Dimension of S/I");
    with_file(colength_cmd);
    auto* hf_cmd = app.add_subcommand("hf", "Local Hilbert function at each point of the support");
    with_file(hf_cmd);
    auto* tangent_cmd = app.add_subcommand("tangent", "Dimension of Hom(I, S/I)");
    with_file(tangent_cmd);
    bool graded = false;
    tangent_cmd->add_flag("--graded", graded, "Graded pieces, for homogeneous ideals");
    auto* initial_cmd = app.add_subcommand("initial", "Initial ideal for a weight vector");
    with_file(initial_cmd);
    std::string weight_text;
    initial_cmd->add_option("-w,--weights", weight_text, "Comma-separated weights w1,...,wd")->required();
    auto* pfaffian_cmd = app.add_subcommand("pfaffian", "Salmon-Turnbull Pfaffian of a (1,4,3) ideal");
    with_file(pfaffian_cmd);
    auto* smoothable_cmd = app.add_subcommand("smoothable", "Decide smoothability (colength at most 8)");
    with_file(smoothable_cmd);
    auto* points_cmd = app.add_subcommand("points-ideal", "Vanishing ideal of a points file");
    points_cmd->add_option("file", file, "Points file")->required();
    std::optional<int> points_d;
    points_cmd->add_option("-d", points_d, "Number of variables when the file has no vars line");
    auto* census_cmd = app.add_subcommand("census", "Local Hilbert functions of monomial ideals");
    int census_d = 0, census_n = 0;
    census_cmd->add_option("-d", census_d, "Number of variables")->required();
    census_cmd->add_option("-n", census_n, "Colength")->required();
    auto* verify_cmd = app.add_subcommand("verify-paper", "Run the bundled verification suite");
    std::vector<std::string> case_filter;
    bool list_cases = false, timing = false;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    verify_cmd->add_option("--case", case_filter, "Run only the named case(s)");
    verify_cmd->add_flag("--list", list_cases, "List case names");
    verify_cmd->add_flag("--timing", timing, "Include timings (output is then not reproducible)");
    verify_cmd->add_option("-j,--jobs", jobs, "Worker threads");

    CLI11_PARSE(app, argc, argv);

    Output out;
    out.as_json = as_json;
    out.input = file;
    try {
        if (verify_cmd->parsed()) {
            const auto& all = verification_cases();
            if (list_cases) {
                for (const auto& c : all) std::cout << c.name << "  " << c.title << "\n";
                return 0;
            }
            std::vector<const Case*> selected;
            for (const auto& name : case_filter)
                if (std::none_of(all.begin(), all.end(), [&](const Case& c) { return c.name == name; }))
                    return fail("unknown case '" + name + "' (see --list)", 2);
            for (const auto& c : all)
                if (case_filter.empty() || std::find(case_filter.begin(), case_filter.end(), c.name) != case_filter.end()) selected.push_back(&c);
            const auto seed = resolve_seed(seed_flag);
            const auto reports = run_cases(selected, seed, jobs);
            std::cout << (as_json ? format_json_report(reports, seed, timing) : format_text_report(reports, seed, timing));
            return std::all_of(reports.begin(), reports.end(), [](const CaseReport& r) { return r.result.status == Status::Pass; }) ? 0 : 1;
        }
        if (census_cmd->parsed()) {
            out.command = "census";
            out.input.clear();
            const auto hs = enumerate_local_hfs(census_d, census_n);
            out.result = {{"d", census_d}, {"n", census_n}, {"hilbert_functions", json::array()}};
            for (const auto& h : hs) {
                out.text += to_string(h) + "\n";
                out.result["hilbert_functions"].push_back(h);
            }
            out.emit(nullptr);
            return 0;
        }
        if (points_cmd->parsed()) {
            out.command = "points-ideal";
            const auto text = read_input(file);
            const auto ctx = points_context(text, points_d);
            const AnyIdeal I = [&]() -> AnyIdeal {
                switch (ctx.field.kind) {
                    case FieldKind::Q: return points_ideal(ctx, parse_points<Rational>(text, ctx)).ideal();
                    case FieldKind::Fp: return points_ideal(ctx, parse_points<Fp>(text, ctx)).ideal();
                    case FieldKind::Qt: return points_ideal(ctx, parse_points<RatFunc>(text, ctx)).ideal();
                }
                throw std::logic_error("field");
            }();
            out.text = format_any_ideal_file(I);
            out.result = {{"ideal", out.text}};
            out.emit(&I);
            return 0;
        }

        const AnyIdeal I = load_ideal(file);
        std::visit(
            [&](const auto& J) {
                using K = std::decay_t<decltype(J.dom.from_integer(0))>;
                if (colength_cmd->parsed()) {
                    out.command = "colength";
                    const auto n = colength(J);
                    out.text = std::to_string(n) + "\n";
                    out.result = {{"colength", n}};
                } else if (hf_cmd->parsed()) {
                    out.command = "hf";
                    out.result = {{"pieces", hilbert_functions(J, out.text)}};
                } else if (tangent_cmd->parsed()) {
                    out.command = "tangent";
                    if (graded) {
                        json pieces = json::array();
                        for (const auto& [e, v] : graded_tangent_dimensions(J)) {
                            out.text += "degree " + std::to_string(e) + ": " + std::to_string(v) + "\n";
                            pieces.push_back({{"degree", e}, {"dimension", v}});
                        }
                        out.result = {{"graded", pieces}};
                    } else {
                        const auto v = tangent_dimension(J);
                        out.text = std::to_string(v) + "\n";
                        out.result = {{"dimension", v}};
                    }
                } else if (initial_cmd->parsed()) {
                    out.command = "initial";
                    const auto w = parse_weights(weight_text);
                    if (static_cast<int>(w.size()) != J.nvars())
                        throw PreconditionError("expected " + std::to_string(J.nvars()) + " weights, got " + std::to_string(w.size()));
                    out.text = format_ideal_file(initial_ideal(J, w));
                    out.result = {{"weights", w}, {"ideal", out.text}};
                } else if (pfaffian_cmd->parsed()) {
                    out.command = "pfaffian";
                    const auto R = salmon_turnbull_pfaffian(J);
                    out.text = "block: " + R.pfaffian_block.to_string() + "\nintrinsic: " + R.pfaffian_intrinsic.to_string() +
                               "\nvanishes: " + (R.vanishes ? "yes" : "no") + "\n";
                    out.result = {{"block", R.pfaffian_block.to_string()}, {"intrinsic", R.pfaffian_intrinsic.to_string()}, {"vanishes", R.vanishes}};
                } else if (smoothable_cmd->parsed()) {
                    out.command = "smoothable";
                    const SmoothabilityVerdict<K> v = classify_smoothable(J);
                    out.text = to_string(v.outcome) + (v.reason.empty() ? "" : " (" + v.reason + ")") + "\n";
                    for (const auto& e : v.evidence) out.text += "  " + e + "\n";
                    out.result = {{"outcome", to_string(v.outcome)}, {"reason", v.reason}, {"evidence", v.evidence}};
                    if (v.hilbert_function) out.result["hilbert_function"] = *v.hilbert_function;
                    if (v.pfaffian) out.result["pfaffian"] = v.pfaffian->to_string();
                }
            },
            I);
        out.emit(&I);
        return 0;
    } catch (const ParseError& e) {
        return fail(file + ": " + e.what(), 2);
    } catch (const PreconditionError& e) {
        return fail(e.what(), 3);
    } catch (const DomainError& e) {
        return fail(e.what(), 3);
    }
}
