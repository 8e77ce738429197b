// Acceptance gate: one pass/fail line per shipping criterion, exit code =
// number of failures. Run via ctest (target: fusionrank_acceptance) or
// directly:
//
//   fusionrank_acceptance --data <repo>/data --cli <build>/fusionrank --work <scratch>
//
// The checks treat the engine as a black box where possible: criteria 1
// and 7 drive the installed CLI binary through std::system and compare
// bytes; the rest go through the public library API against a
// brute-force oracle and analytically solved fixtures.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fusionrank/evaluation.hpp"
#include "fusionrank/io.hpp"
#include "support/compare.hpp"
#include "support/oracle.hpp"

using namespace fusionrank;
using namespace fusionrank::testsupport;

namespace {

struct Options {
    std::string data_dir;
    std::string cli_path;
    std::string work_dir;
};

Options parse_options(int argc, char** argv) {
    Options opts;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--data" && i + 1 < argc) {
            opts.data_dir = argv[++i];
        } else if (arg == "--cli" && i + 1 < argc) {
            opts.cli_path = argv[++i];
        } else if (arg == "--work" && i + 1 < argc) {
            opts.work_dir = argv[++i];
        } else {
            std::cerr << "usage: fusionrank_acceptance --data DIR --cli PATH --work DIR\n";
            std::exit(2);
        }
    }
    if (opts.data_dir.empty() || opts.cli_path.empty() || opts.work_dir.empty()) {
        std::cerr << "usage: fusionrank_acceptance --data DIR --cli PATH --work DIR\n";
        std::exit(2);
    }
    return opts;
}

int g_failures = 0;

void report(int number, const std::string& what, const std::string& failure) {
    if (failure.empty()) {
        std::cout << "[PASS] " << number << ". " << what << '\n';
    } else {
        ++g_failures;
        std::cout << "[FAIL] " << number << ". " << what << " -- " << failure << '\n';
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return std::string("<unreadable: ") + path + ">";
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

/// Runs the CLI with stderr captured to a side file; returns the exit
/// status reported by the shell.
int run_cli(const Options& opts, const std::string& args) {
    const std::string command =
        "'" + opts.cli_path + "' " + args + " 2>>'" + opts.work_dir + "/stderr.log'";
    const int status = std::system(command.c_str());
    return status;
}

bool contains_line(const std::string& text, const std::string& line) {
    return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

// --- criterion 1: comparison grid layout -------------------------------

std::string check_grid_layout(const Options& opts) {
    const std::string out = opts.work_dir + "/grid.tsv";
    const std::string args = "grid '" + opts.data_dir + "/toy/corpus.tsv' '" + opts.data_dir +
                             "/toy/associations.tsv' '" + opts.data_dir +
                             "/toy/queries.tsv' '" + opts.data_dir +
                             "/toy/qrels.txt' --task expert -o '" + out + "'";
    if (run_cli(opts, args) != 0) {
        return "grid command failed";
    }
    const std::string text = slurp(out);

    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        lines.push_back(line);
    }
    if (lines.size() != 9) {
        return "expected header + 8 configuration rows, found " +
               std::to_string(lines.size()) + " lines";
    }
    if (lines[0] != "fusion\tmodel\tassoc\tmap\tmrr\tp@10") {
        return "unexpected header: " + lines[0];
    }
    const std::vector<std::string> expected_configs = {
        "early\tlm\tbinary",  "early\tlm\tuniform",  "early\tbm25\tbinary",
        "early\tbm25\tuniform", "late\tlm\tbinary",  "late\tlm\tuniform",
        "late\tbm25\tbinary", "late\tbm25\tuniform"};
    std::vector<std::size_t> stars_per_column(3, 0);
    for (std::size_t r = 0; r < 8; ++r) {
        const std::string& row = lines[r + 1];
        if (row.rfind(expected_configs[r] + "\t", 0) != 0) {
            return "row " + std::to_string(r + 1) + " is not " + expected_configs[r];
        }
        std::vector<std::string> cells;
        std::istringstream row_in(row);
        for (std::string cell; std::getline(row_in, cell, '\t');) {
            cells.push_back(cell);
        }
        if (cells.size() != 6) {
            return "row " + std::to_string(r + 1) + " does not hold 3 metric cells";
        }
        for (std::size_t c = 3; c < 6; ++c) {
            std::string cell = cells[c];
            if (!cell.empty() && cell.back() == '*') {
                ++stars_per_column[c - 3];
                cell.pop_back();
            }
            if (cell.size() < 6 || cell[cell.size() - 5] != '.') {
                return "cell '" + cells[c] + "' is not a 4-decimal value";
            }
        }
    }
    for (std::size_t c = 0; c < 3; ++c) {
        if (stars_per_column[c] == 0) {
            return "metric column " + std::to_string(c + 1) + " marks no maximum";
        }
    }
    const std::string golden = slurp(opts.data_dir + "/toy/golden/grid_expert.tsv");
    if (text != golden) {
        return "grid output differs from the committed golden file";
    }
    return "";
}

// --- criterion 2: oracle equivalence ------------------------------------

std::string check_oracle_sweep(double* elapsed_seconds) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    for (std::uint32_t seed = 1; seed <= 100 && failure.empty(); ++seed) {
        const std::string msg =
            check_oracle_equivalence(make_random_instance(seed), 1e-9, true);
        if (!msg.empty()) {
            failure = "seed " + std::to_string(seed) + ": " + msg;
        }
    }
    *elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!failure.empty()) {
        return failure;
    }
    if (*elapsed_seconds >= 10.0) {
        return "sweep took " + format_fixed(*elapsed_seconds, 2) + "s (budget 10s)";
    }
    return "";
}

// --- criterion 6: analytically solved metric fixtures -------------------

std::string check_metric_fixtures() {
    const double tol = 1e-9;
    {
        const double got = precision_at_k({"o1", "o2", "o3"}, {"o1", "o4"}, 2);
        if (!close(got, 0.5, tol)) {
            return "P@2 fixture: " + format_fixed(got, 10);
        }
    }
    {
        const double got = reciprocal_rank({"o1", "o2", "o3"}, {"o2", "o3"});
        if (!close(got, 0.5, tol)) {
            return "reciprocal-rank fixture: " + format_fixed(got, 10);
        }
    }
    {
        const double got = average_precision({"o1", "o2", "o3"}, {"o1", "o3"});
        if (!close(got, 5.0 / 6.0, tol)) {
            return "average-precision fixture: " + format_fixed(got, 10);
        }
    }
    {
        const std::map<std::string, int> grades{{"o1", 2}, {"o2", 0}, {"o3", 1}};
        const double got = ndcg_at_k({"o1", "o2", "o3"}, grades, 3);
        const double expected = 3.5 / (3.0 + 1.0 / std::log2(3.0));
        if (!close(got, expected, tol)) {
            return "nDCG@3 fixture: " + format_fixed(got, 10);
        }
        const double ideal = ndcg_at_k({"o1", "o3", "o2"}, grades, 3);
        if (!close(ideal, 1.0, tol)) {
            return "ideal-ranking nDCG: " + format_fixed(ideal, 10);
        }
    }
    {
        std::map<std::string, RankedList> run;
        run["q1"] = {{"o1", 2.0}, {"o2", 1.0}};
        run["q2"] = {{"o2", 2.0}, {"o1", 1.0}};
        Qrels qrels;
        qrels.judgments["q1"] = {{"o1", 1}};
        qrels.judgments["q2"] = {{"o1", 1}};
        const MetricReport report = evaluate_run(run, qrels, {});
        if (!close(report.means.at("map"), 0.75, tol)) {
            return "MAP fixture: " + format_fixed(report.means.at("map"), 10);
        }
    }
    return "";
}

// --- criterion 7: end-to-end determinism --------------------------------

std::string check_cli_determinism(const Options& opts) {
    const std::string toy = opts.data_dir + "/toy";
    const std::string rank_args = "rank '" + toy + "/corpus.tsv' '" + toy +
                                  "/associations.tsv' '" + toy +
                                  "/queries.tsv' --fusion early --model lm --assoc binary "
                                  "--tag tag -o '";
    for (const char* name : {"run1.txt", "run2.txt"}) {
        if (run_cli(opts, rank_args + opts.work_dir + "/" + name + "'") != 0) {
            return "rank command failed";
        }
    }
    const std::string run1 = slurp(opts.work_dir + "/run1.txt");
    const std::string run2 = slurp(opts.work_dir + "/run2.txt");
    if (run1 != run2) {
        return "repeated rank runs differ";
    }
    if (run1 != slurp(toy + "/golden/early_lm_binary.run")) {
        return "rank output differs from the committed golden run";
    }
    if (!contains_line(run1, "q1 Q0 o1 1 -1.894851 tag") ||
        !contains_line(run1, "q1 Q0 o2 2 -5.160167 tag")) {
        return "pinned result lines missing from the run output";
    }

    const std::string eval_args =
        "eval '" + opts.work_dir + "/run1.txt' '" + toy + "/qrels.txt' -o '";
    for (const char* name : {"eval1.txt", "eval2.txt"}) {
        if (run_cli(opts, eval_args + opts.work_dir + "/" + name + "'") != 0) {
            return "eval command failed";
        }
    }
    const std::string eval1 = slurp(opts.work_dir + "/eval1.txt");
    if (eval1 != slurp(opts.work_dir + "/eval2.txt")) {
        return "repeated eval runs differ";
    }
    if (eval1 != slurp(toy + "/golden/eval_report.txt")) {
        return "eval report differs from the committed golden report";
    }
    return "";
}

template <typename CheckFn>
std::string sweep_seeds(std::uint32_t count, CheckFn check) {
    for (std::uint32_t seed = 1; seed <= count; ++seed) {
        const std::string msg = check(seed);
        if (!msg.empty()) {
            return "seed " + std::to_string(seed) + ": " + msg;
        }
    }
    return "";
}

}  // namespace

int main(int argc, char** argv) {
    const Options opts = parse_options(argc, argv);
    std::filesystem::create_directories(opts.work_dir);
    const auto suite_start = std::chrono::steady_clock::now();

    report(1, "comparison grid emits the full 2x2x2 layout with starred column maxima",
           check_grid_layout(opts));

    double sweep_seconds = 0.0;
    report(2,
           "engine matches the brute-force oracle on 100 seeded instances "
           "(all fusion/model/association configurations, 1e-9, under 10s)",
           check_oracle_sweep(&sweep_seconds));

    report(3, "early-fusion lm rankings are invariant to the association mode (1e-12)",
           sweep_seeds(100, [](std::uint32_t seed) {
               return check_lm_association_invariance(make_random_instance(seed), 1e-12);
           }));

    report(4,
           "late-fusion uniform scores equal binary scores divided by len(o) "
           "for every topK and transform (1e-12)",
           sweep_seeds(100, [](std::uint32_t seed) {
               return check_late_scaling_law(make_random_instance(seed), 1e-12);
           }));

    report(5,
           "one-to-one document/object association degenerates both fusion "
           "strategies to document retrieval (1e-12)",
           sweep_seeds(100, [](std::uint32_t seed) {
               return check_bijection_degeneracy(make_bijective_instance(seed), 1e-12);
           }));

    report(6, "evaluation metrics reproduce their analytically solved fixtures (1e-9)",
           check_metric_fixtures());

    report(7, "CLI rank and eval are byte-deterministic and match the committed goldens",
           check_cli_determinism(opts));

    const double total_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - suite_start).count();
    report(8, "acceptance suite finishes within 60 seconds",
           total_seconds < 60.0
               ? ""
               : "took " + format_fixed(total_seconds, 2) + "s");

    if (g_failures == 0) {
        std::cout << "all criteria passed in " << format_fixed(total_seconds, 2) << "s\n";
    } else {
        std::cout << g_failures << " criterion(s) failed\n";
    }
    return g_failures;
}
