#pragma once

#include "permgen/core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace permgen {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // empty on pass
};

// Individual invariant checks over full runs at degree n. All are exact;
// intended for exhaustive small n.

/// Shift-cursor run emits n! pairwise-distinct permutations matching the
/// lexicographic enumerator as a set, with every consecutive pair
/// differing in exactly two positions.
CheckResult check_completeness(int n);

/// A level-l cursor holds one position across each aligned window of
/// (l-1)! consecutive emissions, for every level l.
CheckResult check_local_stability(int n);

/// For every j <= n, the per-block transposition schedule relative to the
/// block's free positions is identical across all n!/j! blocks.
CheckResult check_rule_stability(int n);

/// complement(levels_by_position at emission i) equals level_unrank(i, n)
/// for every i.
CheckResult check_level_correspondence(int n);

/// Degree-4 runs match the hand-checked reference tables row for row.
CheckResult check_degree4_goldens();

/// algorithm1(n, j) emits the shift-cursor sequence element-wise and its
/// decision-free fraction is exactly (j!-1)/j!.
CheckResult check_alg1_equivalence(int n, int j);

/// level_rank(level_unrank(i, n)) == i over all of [1, n!], outputs
/// pairwise distinct.
CheckResult check_rank_bijection(int n);

/// The full suite for the verify subcommand. Runs all applicable checks;
/// goldens only when n == 4, alg1 equivalence only when j is given.
std::vector<CheckResult> run_verification(int n, std::optional<int> j);

}  // namespace permgen
