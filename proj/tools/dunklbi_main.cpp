// Command-line driver: runs verification suites and emits machine-readable
// reports. Exit status: 0 all checks pass, 1 at least one failure, 2 usage
// or configuration error.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dunklbi/checks.hpp"

namespace {

std::vector<dunklbi::Rational> parse_mu_list(const std::string& text) {
    std::vector<dunklbi::Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(dunklbi::parse_rational(item));
    return out;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dunklbi: exact verification of a reflection-symmetric operator algebra"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "run verification suites");
    int n = 3;
    std::string mu_text;
    std::string suites_text;
    int max_degree = 0;
    std::uint64_t seed = 1;
    int precision_digits = 50;
    std::string prefix_text = "full";
    bool strict = false;
    std::string out_path;
    bool quiet = false;
    run->add_option("--n", n, "ambient dimension (>= 2)")->capture_default_str();
    run->add_option("--mu", mu_text,
                    "comma-separated rational weights p/q; omit to sweep the default vectors");
    run->add_option("--suites", suites_text, "comma-separated suite subset; omit for all");
    run->add_option("--max-degree", max_degree,
                    "monomial degree bound (0 = default: 8 for n<=3, 6 above)");
    run->add_option("--seed", seed, "seed for randomized polynomial sampling")
        ->capture_default_str();
    run->add_option("--precision-digits", precision_digits,
                    "working precision for numeric norm checks")
        ->capture_default_str();
    run->add_option("--reflection-prefix", prefix_text, "full|restricted")
        ->check(CLI::IsMember({"full", "restricted"}))
        ->capture_default_str();
    run->add_flag("--strict-as-printed", strict,
                  "assert the uncorrected published forms (documentation mode; fails by design "
                  "where the corrections matter)");
    run->add_option("--out", out_path, "also write the record stream to this file");
    run->add_flag("--quiet", quiet, "suppress the record stream on stdout");

    auto* list = app.add_subcommand("list-checks", "print the catalog of check ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    if (list->parsed()) {
        for (const auto& info : dunklbi::check_catalog())
            std::cout << info.suite << "/" << info.id << ": " << info.identity << "\n";
        std::cout << dunklbi::check_catalog().size() << " checks in "
                  << dunklbi::suite_names().size() << " suites\n";
        return 0;
    }

    dunklbi::SuiteConfig config;
    config.n = n;
    config.max_degree = max_degree;
    config.seed = seed;
    config.precision_digits = precision_digits;
    config.reflection_prefix = prefix_text == "restricted"
                                   ? dunklbi::ReflectionPrefix::restricted
                                   : dunklbi::ReflectionPrefix::full;
    config.strict_as_printed = strict;
    if (const char* env = std::getenv("DUNKLBI_PRECISION_DIGITS");
        env != nullptr && run->count("--precision-digits") == 0) {
        config.precision_digits = std::atoi(env);
    }

    try {
        if (!mu_text.empty()) config.mu = parse_mu_list(mu_text);
        if (!suites_text.empty()) config.suites = split_list(suites_text);
        if (config.precision_digits < 1) throw std::invalid_argument("precision must be positive");

        const auto report = dunklbi::run_suites(config);
        const std::string ndjson = dunklbi::report_to_ndjson(report);
        if (!quiet) std::cout << ndjson;
        std::cout << dunklbi::report_summary(report);
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "cannot write " << out_path << "\n";
                return 2;
            }
            out << ndjson;
        }
        return report.all_pass() ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    }
}
