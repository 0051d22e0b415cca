// Acceptance suite: runs every verification criterion at its stated
// parameters and prints one pass/fail line per criterion. Exit status is the
// number of failed criteria.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "dunklbi/checks.hpp"

using namespace dunklbi;

namespace {

int failures = 0;

struct CriterionResult {
    bool pass = true;
    std::size_t checks = 0;
    std::string note;
};

void criterion(int number, const std::string& title,
               const std::function<CriterionResult()>& body) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult result;
    try {
        result = body();
    } catch (const std::exception& e) {
        result.pass = false;
        result.note = std::string("exception: ") + e.what();
    }
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion-%02d [%s] %s (%zu checks, %.1fs)%s%s\n", number,
                result.pass ? "PASS" : "FAIL", title.c_str(), result.checks, s,
                result.note.empty() ? "" : " -- ", result.note.c_str());
    std::fflush(stdout);
    if (!result.pass) ++failures;
}

SuiteConfig base_config(int n, std::vector<std::string> suites, int degree) {
    SuiteConfig cfg;
    cfg.n = n;
    cfg.suites = std::move(suites);
    cfg.max_degree = degree;
    cfg.seed = 20260809;
    return cfg;
}

// Runs one suite selection over n = 2, 3, 4 with the default weight-vector
// sweep and the per-dimension degree rule.
CriterionResult sweep_dimensions(const std::vector<std::string>& suites,
                                 const std::function<int(int)>& degree_for,
                                 const std::string& expect_id, std::size_t min_records) {
    CriterionResult out;
    std::size_t seen = 0;
    for (int n : {2, 3, 4}) {
        auto cfg = base_config(n, suites, degree_for(n));
        const auto report = run_suites(cfg);
        out.checks += report.records.size();
        for (const auto& r : report.records) {
            if (r.id == expect_id) ++seen;
            if (!r.pass && out.note.empty()) {
                out.pass = false;
                out.note = "n=" + std::to_string(n) + " " + r.id + " [" + r.params + "] " +
                           r.detail;
            }
        }
        if (!report.all_pass()) out.pass = false;
    }
    if (seen < min_records) {
        out.pass = false;
        out.note = "only " + std::to_string(seen) + " " + expect_id + " records, expected >= " +
                   std::to_string(min_records);
    }
    return out;
}

}  // namespace

int main() {
    std::printf("acceptance suite: exact operator-algebra verification\n");

    criterion(1, "superalgebra structure relations, all subsets, degree 8/8/6, 5 weight vectors",
              [] {
                  return sweep_dimensions({"osp"}, [](int n) { return n <= 3 ? 8 : 6; },
                                          "osp-xx-anticommutator",
                                          // nonempty subsets: 3 + 7 + 15, times 5 vectors
                                          (3 + 7 + 15) * 5);
              });

    criterion(2, "sCasimir (anti)commutation and Casimir centrality, same sweep", [] {
        return sweep_dimensions({"scasimir"}, [](int n) { return n <= 3 ? 8 : 6; },
                                "casimir-central", (3 + 7 + 15) * 5);
    });

    criterion(3, "conserved quantities equal the Casimirs up to degree 8, polynomial images", [] {
        return sweep_dimensions({"qa-eq-ma"}, [](int) { return 8; }, "qa-eq-ma",
                                (3 + 7 + 15) * 5);
    });

    criterion(4, "Hamiltonian identity at degree 6 plus reflection and Casimir symmetries", [] {
        return sweep_dimensions({"hamiltonian"}, [](int) { return 6; }, "hamiltonian-identity",
                                3 * 5);
    });

    criterion(5, "anticommutation structure constants, all ordered subset pairs, degree 6", [] {
        CriterionResult out;
        for (int n : {3, 4}) {
            auto cfg = base_config(n, {"bannai-ito"}, 6);
            const auto report = run_suites(cfg);
            out.checks += report.records.size();
            std::size_t pairs = 0, rank1 = 0;
            for (const auto& r : report.records) {
                if (r.id == "bi-relation") ++pairs;
                if (r.id == "bi-rank1-structure") ++rank1;
                if (!r.pass && out.note.empty()) {
                    out.pass = false;
                    out.note = "n=" + std::to_string(n) + " " + r.id + " [" + r.params + "]";
                }
            }
            const std::size_t subsets = (1u << n) - 1;
            if (pairs != subsets * subsets * 5) {
                out.pass = false;
                out.note = "pair coverage " + std::to_string(pairs) + " at n=" + std::to_string(n);
            }
            if (n == 3 && rank1 != 3 * 5) {
                out.pass = false;
                out.note = "rank-1 structure coverage " + std::to_string(rank1);
            }
        }
        return out;
    });

    criterion(6, "kernel extension and direct-sum decomposition, m <= 6", [] {
        return sweep_dimensions({"ck", "fischer"}, [](int) { return 6; }, "ck-kernel",
                                3 * 7 * 5);  // n values * m values * weight vectors
    });

    criterion(7, "ladder identities, a,b <= 3, random kernel elements, m <= 4", [] {
        CriterionResult out;
        auto cfg = base_config(3, {"identities23"}, 4);
        const auto report = run_suites(cfg);
        out.checks = report.records.size();
        std::size_t ladder = 0;
        for (const auto& r : report.records) {
            if (r.id.rfind("ladder-", 0) == 0) ++ladder;
            if (!r.pass && out.note.empty()) {
                out.pass = false;
                out.note = r.id + " [" + r.params + "] " + r.detail;
            }
        }
        if (ladder != 4u * 5u * 5u) {  // four identities, m in 0..4, five vectors
            out.pass = false;
            out.note = "ladder coverage " + std::to_string(ladder);
        }
        return out;
    });

    criterion(8, "wavefunctions: kernel membership, rank, cross-validation, exact eigenvalues",
              [] {
                  auto result = sweep_dimensions({"wavefunctions", "eigen"},
                                                 [](int) { return 5; },
                                                 "wavefn-cross-validation", 3 * 6 * 5);
                  return result;
              });

    criterion(9, "orthogonality: exact off-diagonal cancellation and unit norms at 50 digits",
              [] {
                  CriterionResult out;
                  auto cfg = base_config(3, {"gram", "norms"}, 4);
                  cfg.precision_digits = 50;
                  const auto report = run_suites(cfg);
                  out.checks = report.records.size();
                  std::size_t gram = 0, norms = 0;
                  for (const auto& r : report.records) {
                      if (r.suite == "gram") ++gram;
                      if (r.suite == "norms") ++norms;
                      if (!r.pass && out.note.empty()) {
                          out.pass = false;
                          out.note = r.id + " [" + r.params + "] " + r.detail;
                      }
                  }
                  if (gram < 5 * 6u || norms < 5 * 5u) {
                      out.pass = false;
                      out.note = "coverage gram=" + std::to_string(gram) +
                                 " norms=" + std::to_string(norms);
                  }
                  return out;
              });

    criterion(10, "determinism: identical config and seed give identical reports", [] {
        CriterionResult out;
        auto cfg = base_config(3, {"osp", "eigen", "fischer"}, 4);
        cfg.seed = 77;
        const auto first = run_suites(cfg);
        const auto second = run_suites(cfg);
        out.checks = first.records.size() + second.records.size();
        const auto a = report_to_ndjson(first, false);
        const auto b = report_to_ndjson(second, false);
        if (a != b) {
            out.pass = false;
            out.note = "reports differ";
        }
        if (!first.all_pass()) {
            out.pass = false;
            out.note = "underlying checks failed";
        }
        return out;
    });

    std::printf("acceptance: %s (%d criteria failed)\n", failures == 0 ? "PASS" : "FAIL",
                failures);
    return failures;
}
