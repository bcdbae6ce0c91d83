#pragma once

#include "permgen/core.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace permgen {

/// Order-independent multiset checksum: sum of per-permutation FNV-1a
/// hashes. Doubles as a cross-generator correctness check and keeps the
/// emission from being optimized away in timed runs.
struct ChecksumSink {
    std::uint64_t sum = 0;
    std::uint64_t count = 0;

    void operator()(std::span<const int> slots) {
        std::uint64_t h = 1469598103934665603ull;
        for (int v : slots) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
            h *= 1099511628211ull;
        }
        sum += h;
        ++count;
    }
};

inline constexpr int kDefaultBenchMaxN = 12;

struct BenchSpec {
    std::string generator;  // shift-cursor | alg1 | johnson-trotter | heap | lex
    int n = 0;
    std::optional<int> j;   // alg1 only
    int repetitions = 1;
    int max_n = kDefaultBenchMaxN;
};

struct BenchRun {
    std::string generator;
    int n = 0;
    std::optional<int> j;
    std::uint64_t perms = 0;
    std::uint64_t stores = 0;
    std::uint64_t decisions = 0;
    std::uint64_t wall_ns = 0;  // median over repetitions, raw flavor
    int repetitions = 1;
    std::uint64_t checksum = 0;
    std::uint64_t decision_free = 0;  // alg1 only, 0 otherwise
};

const std::vector<std::string>& known_generators();

/// One instrumented run for counters/checksum plus `repetitions` raw
/// timed runs; counters are deterministic, only wall time varies.
BenchRun run_bench(const BenchSpec& spec);

/// Header `generator,n,j,perms,stores,decisions,stores_per_perm,
/// decisions_per_perm,wall_ns`; decimals with 6 fractional digits; j
/// empty when absent. Stores count only writes into permutation slots.
std::string emit_csv(const std::vector<BenchRun>& runs);

std::string summary_line(const BenchRun& run);

}  // namespace permgen
