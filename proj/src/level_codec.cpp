#include "permgen/level_codec.hpp"

#include <limits>

namespace permgen {

EmptySlotTracker::EmptySlotTracker(int n)
    : occupied_(static_cast<std::size_t>(n) + 1, false), remaining_(n) {
    if (n < 1) {
        throw std::invalid_argument("degree must be at least 1");
    }
}

int EmptySlotTracker::kth_empty(int k) const {
    if (k < 1 || k > remaining_) {
        throw std::out_of_range("empty-slot index out of range");
    }
    int seen = 0;
    for (int p = 1; p < static_cast<int>(occupied_.size()); ++p) {
        if (!occupied_[static_cast<std::size_t>(p)] && ++seen == k) {
            return p;
        }
    }
    throw std::logic_error("empty slot not found");
}

int EmptySlotTracker::empty_index_of(int pos) const {
    if (pos < 1 || pos >= static_cast<int>(occupied_.size()) ||
        occupied_[static_cast<std::size_t>(pos)]) {
        throw std::out_of_range("position is not an empty slot");
    }
    int idx = 0;
    for (int p = 1; p <= pos; ++p) {
        if (!occupied_[static_cast<std::size_t>(p)]) {
            ++idx;
        }
    }
    return idx;
}

void EmptySlotTracker::occupy(int pos) {
    occupied_[static_cast<std::size_t>(pos)] = true;
    --remaining_;
}

int EmptySlotTracker::take_kth_empty(int k) {
    const int p = kth_empty(k);
    occupy(p);
    return p;
}

Permutation level_unrank(const Rank& rank, int n) {
    if (n < 1) {
        throw std::invalid_argument("degree must be at least 1");
    }
    const Natural total = factorial(n);
    if (rank < 1 || rank > total) {
        throw std::out_of_range("rank out of range: valid interval is [1, " +
                                total.str() + "]");
    }
    std::vector<int> slots(static_cast<std::size_t>(n), 0);
    EmptySlotTracker empties(n);
    Natural r = rank;
    for (int j = 1; j <= n; ++j) {
        const Natural m = factorial(n - j);
        Natural q = r / m;
        const Natural rem = r % m;
        // zero remainder means we are exactly at the end of a block: the
        // element goes to the q-th empty slot and the carry is a full m
        if (rem == 0) {
            q -= 1;
            r = m;
        } else {
            r = rem;
        }
        const int k = q.convert_to<int>() + 1;
        slots[static_cast<std::size_t>(empties.take_kth_empty(k)) - 1] = j;
    }
    return Permutation(std::move(slots));
}

Rank level_rank(const Permutation& p) {
    const int n = p.degree();
    std::vector<int> pos_of(static_cast<std::size_t>(n) + 1, 0);
    for (int pos = 1; pos <= n; ++pos) {
        pos_of[static_cast<std::size_t>(p.at(pos))] = pos;
    }
    EmptySlotTracker empties(n);
    Natural r = 1;
    for (int j = 1; j <= n; ++j) {
        const int pos = pos_of[static_cast<std::size_t>(j)];
        const int k = empties.empty_index_of(pos);
        empties.occupy(pos);
        r += Natural(k - 1) * factorial(n - j);
    }
    return r;
}

std::uint64_t Mt19937Source::below(std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("bound must be positive");
    }
    if (bound == 1) {
        return 0;
    }
    // rejection sampling; engine consumption is deterministic per seed
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        const std::uint64_t v = eng_();
        if (v < limit) {
            return v % bound;
        }
    }
}

Rank random_rank(int n, RandomSource& rng) {
    if (n < 1) {
        throw std::invalid_argument("degree must be at least 1");
    }
    Natural r = 1;
    for (int j = 1; j <= n; ++j) {
        const std::uint64_t digit = rng.below(static_cast<std::uint64_t>(n - j + 1));
        if (digit != 0) {
            r += Natural(digit) * factorial(n - j);
        }
    }
    return r;
}

Permutation random_permutation(int n, RandomSource& rng) {
    return level_unrank(random_rank(n, rng), n);
}

}  // namespace permgen
