#include <json.hpp>

#include <sstream>

#include "dunklbi/checks.hpp"

namespace dunklbi {

// One JSON object per line, fields in fixed order. Timing is the only
// non-deterministic field and can be omitted for byte-exact comparisons.
std::string report_to_ndjson(const SuiteReport& report, bool include_timing) {
    std::ostringstream os;
    for (const auto& r : report.records) {
        nlohmann::ordered_json line;
        line["suite"] = r.suite;
        line["id"] = r.id;
        line["params"] = r.params;
        line["status"] = r.pass ? "pass" : "fail";
        if (!r.detail.empty()) line["detail"] = r.detail;
        if (include_timing) line["ms"] = r.ms;
        os << line.dump() << "\n";
    }
    return os.str();
}

std::string report_summary(const SuiteReport& report) {
    std::map<std::string, std::pair<std::size_t, std::size_t>> by_suite;  // suite -> (pass, fail)
    double total_ms = 0;
    for (const auto& r : report.records) {
        auto& [pass, fail] = by_suite[r.suite];
        (r.pass ? pass : fail) += 1;
        total_ms += r.ms;
    }
    std::ostringstream os;
    os << "---- summary ----\n";
    for (const auto& [suite, counts] : by_suite) {
        os << suite << ": " << counts.first << " passed";
        if (counts.second) os << ", " << counts.second << " FAILED";
        os << "\n";
    }
    os << "total: " << report.records.size() - report.failure_count() << "/"
       << report.records.size() << " checks passed in " << static_cast<long>(total_ms) << " ms\n";
    os << (report.all_pass() ? "RESULT: PASS" : "RESULT: FAIL") << "\n";
    return os.str();
}

}  // namespace dunklbi
