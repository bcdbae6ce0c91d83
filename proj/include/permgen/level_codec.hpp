#pragma once

#include "permgen/core.hpp"

#include <cstdint>
#include <random>

namespace permgen {

/// Tracks which positions of 1..n are still unfilled and answers
/// "where is the k-th empty position" queries.
class EmptySlotTracker {
public:
    explicit EmptySlotTracker(int n);

    int remaining() const { return remaining_; }

    /// Position of the k-th empty slot (1-based among empties).
    int kth_empty(int k) const;

    /// 1-based index of an empty position among the current empties.
    int empty_index_of(int pos) const;

    void occupy(int pos);

    /// kth_empty + occupy in one call; returns the position filled.
    int take_kth_empty(int k);

private:
    std::vector<bool> occupied_;
    int remaining_;
};

/// Permutation at 1-based rank i of the level sequence.
Permutation level_unrank(const Rank& rank, int n);

/// Inverse of level_unrank: the unique rank in [1, n!] mapping to p.
Rank level_rank(const Permutation& p);

/// Stream of uniform bounded draws. Implementations must be deterministic
/// under a fixed seed.
class RandomSource {
public:
    virtual ~RandomSource() = default;

    /// Uniform integer in [0, bound); bound >= 1.
    virtual std::uint64_t below(std::uint64_t bound) = 0;
};

class Mt19937Source final : public RandomSource {
public:
    explicit Mt19937Source(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t below(std::uint64_t bound) override;

private:
    std::mt19937_64 eng_;
};

/// Uniform rank in [1, n!], built digit-by-digit in factorial base so no
/// draw ever exceeds 64 bits.
Rank random_rank(int n, RandomSource& rng);

/// Uniform random permutation of 1..n (level_unrank of a uniform rank).
Permutation random_permutation(int n, RandomSource& rng);

}  // namespace permgen
