#include "permgen/core.hpp"
#include "permgen/level_codec.hpp"
#include "permgen/metrics.hpp"
#include "permgen/optimized_generator.hpp"
#include "permgen/reference_generators.hpp"
#include "permgen/shift_cursor.hpp"
#include "permgen/verify.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

namespace {

using namespace permgen;

// thrown by the printing visitor once --limit rows have been written
struct LimitReached {};

struct Printer {
    std::uint64_t limit;
    std::uint64_t printed = 0;

    void operator()(std::span<const int> slots) {
        std::cout << to_text(slots) << '\n';
        if (++printed == limit) {
            throw LimitReached{};
        }
    }
};

int cmd_gen(const std::string& algo, int n, int j, std::uint64_t limit) {
    if (algo != "alg1" && j != 0) {
        throw std::invalid_argument("--j is only valid with --algo alg1");
    }
    Printer out{limit};
    try {
        if (algo == "shift-cursor") {
            shift_cursor_run(n, out);
        } else if (algo == "alg1") {
            if (j < 2) {
                throw std::invalid_argument("alg1 requires --j >= 2");
            }
            algorithm1(n, j, out);
        } else if (algo == "johnson-trotter") {
            johnson_trotter(n, out);
        } else if (algo == "heap") {
            heap(n, out);
        } else if (algo == "lex") {
            lexicographic(n, out);
        } else {
            throw std::invalid_argument("unknown algorithm: " + algo);
        }
    } catch (const LimitReached&) {
    }
    return 0;
}

int cmd_unrank(int n, const std::string& rank_text) {
    const Rank rank = parse_natural(rank_text);
    std::cout << to_text(level_unrank(rank, n)) << '\n';
    return 0;
}

int cmd_rank(const std::string& perm_text) {
    const Permutation p = parse_permutation(perm_text);
    std::cout << level_rank(p).str() << '\n';
    return 0;
}

int cmd_random(int n, int count, std::uint64_t seed) {
    Mt19937Source rng(seed);
    for (int i = 0; i < count; ++i) {
        std::cout << to_text(random_permutation(n, rng)) << '\n';
    }
    return 0;
}

int cmd_levels(int n, std::uint64_t limit) {
    std::uint64_t printed = 0;
    OpCounters c;
    ShiftCursorStepper<Counting> g(n, Counting{&c});
    for (;;) {
        std::cout << to_text(g.levels_by_position()) << '\n';
        if (++printed == limit || !g.step()) {
            break;
        }
    }
    return 0;
}

int verify_max_n() {
    if (const char* env = std::getenv("PERMGEN_VERIFY_MAX_N")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("PERMGEN_VERIFY_MAX_N is not an integer");
        }
    }
    return 8;
}

int cmd_verify(int n, int j) {
    const int max_n = verify_max_n();
    if (n > max_n) {
        throw std::invalid_argument("n exceeds exhaustive-test limit " +
                                    std::to_string(max_n) +
                                    " (override with PERMGEN_VERIFY_MAX_N)");
    }
    std::optional<int> jopt;
    if (j >= 2) {
        jopt = j;
    }
    bool all_ok = true;
    for (const CheckResult& r : run_verification(n, jopt)) {
        if (r.passed) {
            std::cout << "PASS " << r.name << '\n';
        } else {
            std::cout << "FAIL " << r.name << ": " << r.detail << '\n';
            if (all_ok) {
                std::cerr << "first failing check: " << r.name << '\n';
            }
            all_ok = false;
        }
    }
    return all_ok ? 0 : 1;
}

// "4" or an inclusive range "2..8"
std::vector<int> parse_j_values(const std::string& text) {
    const auto dots = text.find("..");
    std::vector<int> out;
    if (dots == std::string::npos) {
        out.push_back(std::stoi(text));
        return out;
    }
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (lo > hi) {
        throw std::invalid_argument("empty j range: " + text);
    }
    for (int v = lo; v <= hi; ++v) {
        out.push_back(v);
    }
    return out;
}

int cmd_bench(const std::string& algo, int n, const std::string& j_text, int reps,
              int max_n, const std::string& out_path) {
    std::vector<BenchRun> runs;
    std::vector<std::optional<int>> jvals;
    if (algo == "alg1") {
        if (j_text.empty()) {
            throw std::invalid_argument("alg1 requires --j");
        }
        for (int v : parse_j_values(j_text)) {
            jvals.emplace_back(v);
        }
    } else {
        jvals.emplace_back(std::nullopt);
    }
    for (const auto& j : jvals) {
        BenchSpec spec{algo, n, j, reps, max_n};
        runs.push_back(run_bench(spec));
        std::cout << summary_line(runs.back()) << '\n';
    }
    std::ofstream out(out_path);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + out_path);
    }
    out << emit_csv(runs);
    if (!out.good()) {
        throw std::runtime_error("write failed: " + out_path);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"shift-cursor permutation generation toolkit"};
    app.require_subcommand(1);

    const std::vector<std::string> algos = {"shift-cursor", "alg1", "johnson-trotter",
                                            "heap", "lex"};

    std::string algo;
    int n = 0;
    int j = 0;
    std::uint64_t limit = 0;

    auto* gen = app.add_subcommand("gen", "enumerate permutations");
    gen->add_option("--algo", algo, "generator")
        ->required()
        ->check(CLI::IsMember(algos));
    gen->add_option("--n", n, "degree")->required()->check(CLI::PositiveNumber);
    gen->add_option("--j", j, "unroll level (alg1 only)");
    gen->add_option("--limit", limit, "emit at most this many rows");

    std::string rank_text;
    auto* unrank = app.add_subcommand("unrank", "permutation at a given rank");
    unrank->add_option("--n", n, "degree")->required()->check(CLI::PositiveNumber);
    unrank->add_option("--rank", rank_text, "1-based rank")->required();

    std::string perm_text;
    auto* rank = app.add_subcommand("rank", "rank of a given permutation");
    rank->add_option("--perm", perm_text, "permutation, e.g. \"3 2 1 4\"")->required();

    int count = 1;
    std::uint64_t seed = std::random_device{}();
    auto* random = app.add_subcommand("random", "uniform random permutations");
    random->add_option("--n", n, "degree")->required()->check(CLI::PositiveNumber);
    random->add_option("--count", count, "number of samples")->check(CLI::PositiveNumber);
    random->add_option("--seed", seed, "rng seed (fixed seed => identical output)");

    auto* levels = app.add_subcommand("levels", "cursor levels by position per step");
    levels->add_option("--n", n, "degree")->required()->check(CLI::PositiveNumber);
    levels->add_option("--limit", limit, "emit at most this many rows");

    auto* verify = app.add_subcommand("verify", "run the invariant suite");
    verify->add_option("--n", n, "degree")->required()->check(CLI::PositiveNumber);
    verify->add_option("--j", j, "also check alg1 equivalence at this unroll level");

    int reps = 1;
    int max_n = kDefaultBenchMaxN;
    std::string j_text;
    std::string out_path;
    auto* bench = app.add_subcommand("bench", "instrumented benchmark, CSV output");
    bench->add_option("--algo", algo, "generator")
        ->required()
        ->check(CLI::IsMember(algos));
    bench->add_option("--n", n, "degree")->required()->check(CLI::PositiveNumber);
    bench->add_option("--j", j_text, "unroll level or inclusive range a..b");
    bench->add_option("--reps", reps, "timed repetitions")->check(CLI::PositiveNumber);
    bench->add_option("--max-n", max_n, "exhaustive-run degree limit");
    bench->add_option("--out", out_path, "CSV output file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            return cmd_gen(algo, n, j, limit);
        }
        if (unrank->parsed()) {
            return cmd_unrank(n, rank_text);
        }
        if (rank->parsed()) {
            return cmd_rank(perm_text);
        }
        if (random->parsed()) {
            return cmd_random(n, count, seed);
        }
        if (levels->parsed()) {
            return cmd_levels(n, limit);
        }
        if (verify->parsed()) {
            return cmd_verify(n, j);
        }
        if (bench->parsed()) {
            return cmd_bench(algo, n, j_text, reps, max_n, out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
