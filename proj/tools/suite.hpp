#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace hilbcheck::tools {

enum class Status { Pass, Fail, Indeterminate };

std::string to_string(Status s);

struct CaseResult {
    Status status = Status::Pass;
    std::vector<std::pair<std::string, std::string>> values;  // in report order
    std::vector<std::string> notes;
    double seconds = 0.0;

    void value(std::string key, std::string v) { values.emplace_back(std::move(key), std::move(v)); }
    /// Records `key = got`, failing the case unless got == want.
    void expect(const std::string& key, const std::string& got, const std::string& want);
    void expect(const std::string& key, bool ok, const std::string& shown);
};

struct CaseContext {
    std::uint64_t seed;
};

struct Case {
    std::string name;
    int criterion;  // acceptance criterion the case feeds, 1..9
    std::string title;
    std::function<void(const CaseContext&, CaseResult&)> run;
};

const std::vector<Case>& verification_cases();

struct CaseReport {
    const Case* c;
    CaseResult result;
};

/// Runs `cases` on `jobs` threads; reports come back in the order given.
std::vector<CaseReport> run_cases(const std::vector<const Case*>& cases, std::uint64_t seed, unsigned jobs);

std::string format_text_report(const std::vector<CaseReport>& reports, std::uint64_t seed, bool timing);
std::string format_json_report(const std::vector<CaseReport>& reports, std::uint64_t seed, bool timing);

}  // namespace hilbcheck::tools
