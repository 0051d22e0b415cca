#ifndef DUNKLBI_CHECKS_HPP
#define DUNKLBI_CHECKS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dunklbi/model.hpp"
#include "dunklbi/params.hpp"

namespace dunklbi {

// Configuration of a verification run.
struct SuiteConfig {
    int n = 3;
    // One explicit parameter vector, or (when absent) the default sweep:
    // (1/2,1/3,1/4,1/5,1/6) truncated to n, the zero vector, and three seeded
    // random non-negative rationals with denominators up to 12.
    std::optional<std::vector<Rational>> mu;
    int max_degree = 0;  // 0 = default: 8 for n <= 3, 6 above
    std::vector<std::string> suites;  // empty = all

    std::uint64_t seed = 1;
    int precision_digits = 50;
    ReflectionPrefix reflection_prefix = ReflectionPrefix::full;
    bool strict_as_printed = false;
};

struct CheckRecord {
    std::string suite;
    std::string id;
    std::string params;  // rendered parameter context ("n=3 mu=... A={1,2} D=6")
    bool pass = false;
    std::string detail;  // counterexample or measured-value text
    double ms = 0.0;
};

struct SuiteReport {
    std::vector<CheckRecord> records;

    bool all_pass() const;
    std::size_t failure_count() const;
};

// Catalog entry: a stable check id together with the identity it verifies.
struct CheckInfo {
    std::string suite;
    std::string id;
    std::string identity;
};

const std::vector<CheckInfo>& check_catalog();
const std::vector<std::string>& suite_names();  // dependency order
bool is_suite_name(const std::string& name);

int default_degree_for(int n);
std::vector<std::vector<Rational>> default_mu_vectors(int n, std::uint64_t seed);

// Runs the selected suites (all when the selection is empty) in dependency
// order, preceded by the polynomial-engine self-checks. Deterministic for a
// fixed config, up to the timing fields.
SuiteReport run_suites(const SuiteConfig& config);

// Report rendering (implemented in report.cpp): one structured record per
// line, followed by a human summary through `summary`.
std::string report_to_ndjson(const SuiteReport& report, bool include_timing = true);
std::string report_summary(const SuiteReport& report);

}  // namespace dunklbi

#endif
