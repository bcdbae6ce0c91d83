#include "permgen/level_codec.hpp"

#include "permgen/degree4_reference.hpp"
#include "permgen/shift_cursor.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace permgen;

namespace {

// deterministic stub feeding a fixed digit stream
class FixedSource final : public RandomSource {
public:
    explicit FixedSource(std::vector<std::uint64_t> draws) : draws_(std::move(draws)) {}

    std::uint64_t below(std::uint64_t bound) override {
        REQUIRE(next_ < draws_.size());
        const std::uint64_t v = draws_[next_++];
        REQUIRE(v < bound);
        return v;
    }

private:
    std::vector<std::uint64_t> draws_;
    std::size_t next_ = 0;
};

}  // namespace

TEST_CASE("empty slot tracker") {
    EmptySlotTracker t(4);
    CHECK(t.remaining() == 4);
    CHECK(t.take_kth_empty(3) == 3);
    CHECK(t.take_kth_empty(2) == 2);
    CHECK(t.empty_index_of(4) == 2);
    CHECK(t.take_kth_empty(1) == 1);
    CHECK(t.take_kth_empty(1) == 4);
    CHECK(t.remaining() == 0);
    CHECK_THROWS_AS(t.kth_empty(1), std::out_of_range);
    CHECK_THROWS_AS(t.empty_index_of(2), std::out_of_range);
}

TEST_CASE("level_unrank worked values") {
    CHECK(level_unrank(15, 4).slots() == std::vector<int>{3, 2, 1, 4});
    CHECK(level_unrank(1, 4).slots() == std::vector<int>{1, 2, 3, 4});
    CHECK(level_unrank(24, 4).slots() == std::vector<int>{4, 3, 2, 1});
    CHECK(level_unrank(3, 4).slots() == std::vector<int>{1, 3, 2, 4});
}

TEST_CASE("level_unrank matches the degree-4 level sequence row for row") {
    for (int i = 1; i <= 24; ++i) {
        const auto& want = kLevelSequence4[static_cast<std::size_t>(i) - 1];
        CHECK(std::equal(want.begin(), want.end(), level_unrank(i, 4).slots().begin()));
    }
}

TEST_CASE("rank domain errors") {
    CHECK_THROWS_AS(level_unrank(0, 4), std::out_of_range);
    CHECK_THROWS_AS(level_unrank(25, 4), std::out_of_range);
    CHECK_THROWS_AS(level_unrank(1, 0), std::invalid_argument);
}

TEST_CASE("level_rank worked values via round-trip oracle") {
    // oracle: enumerate level_unrank(i, 4) for all i and invert
    std::vector<std::vector<int>> by_rank;
    for (int i = 1; i <= 24; ++i) {
        by_rank.push_back(level_unrank(i, 4).slots());
    }
    auto oracle_rank = [&](const std::vector<int>& p) {
        return 1 + static_cast<int>(std::find(by_rank.begin(), by_rank.end(), p) -
                                    by_rank.begin());
    };
    for (const auto& slots :
         {std::vector<int>{3, 2, 1, 4}, {1, 2, 3, 4}, {4, 3, 2, 1}}) {
        CHECK(level_rank(Permutation(slots)) == oracle_rank(slots));
    }
    CHECK(oracle_rank({3, 2, 1, 4}) == 15);
    CHECK(oracle_rank({1, 2, 3, 4}) == 1);
    CHECK(oracle_rank({4, 3, 2, 1}) == 24);
}

TEST_CASE("bijection for n<=6") {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::vector<int>> seen;
        const std::uint64_t total = factorial_u64(n);
        for (std::uint64_t i = 1; i <= total; ++i) {
            const Permutation p = level_unrank(static_cast<long long>(i), n);
            CHECK(seen.insert(p.slots()).second);
            CHECK(level_rank(p) == static_cast<long long>(i));
        }
    }
}

TEST_CASE("complement correspondence with the shift-cursor run") {
    for (int n = 1; n <= 5; ++n) {
        OpCounters c;
        ShiftCursorStepper<Counting> g(n, Counting{&c});
        Natural i = 1;
        for (;;) {
            CHECK(complement(g.levels_by_position()) == level_unrank(i, n));
            if (!g.step()) {
                break;
            }
            ++i;
        }
        CHECK(i == factorial(n));
    }
}

TEST_CASE("random_rank basics") {
    Mt19937Source rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        CHECK(random_rank(1, rng) == 1);
        const Rank r2 = random_rank(2, rng);
        CHECK(r2 >= 1);
        CHECK(r2 <= 2);
    }
}

TEST_CASE("pinned draw reproduces the rank-15 permutation") {
    // factorial-base digits of rank 15 at n=4: 15 = 1 + 2*3! + 1*2! + 0*1! + 0*0!
    FixedSource src({2, 1, 0, 0});
    CHECK(random_rank(4, src) == 15);
    FixedSource src2({2, 1, 0, 0});
    CHECK(random_permutation(4, src2).slots() == std::vector<int>{3, 2, 1, 4});
}

TEST_CASE("mixed-radix construction covers every rank exactly once (n=3)") {
    std::set<Natural> ranks;
    for (std::uint64_t d1 = 0; d1 < 3; ++d1) {
        for (std::uint64_t d2 = 0; d2 < 2; ++d2) {
            FixedSource src({d1, d2, 0});
            ranks.insert(random_rank(3, src));
        }
    }
    CHECK(ranks == std::set<Natural>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("ranks beyond 64 bits") {
    CHECK(factorial(21) > Natural("18446744073709551615"));  // 2^64 - 1
    Mt19937Source rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const Rank r = random_rank(21, rng);
        CHECK(r >= 1);
        CHECK(r <= factorial(21));
        const Permutation p = random_permutation(21, rng);  // ctor validates
        CHECK(p.degree() == 21);
        CHECK(level_unrank(level_rank(p), 21) == p);
    }
}

TEST_CASE("n=1 always yields the single permutation") {
    Mt19937Source rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        CHECK(random_permutation(1, rng).slots() == std::vector<int>{1});
    }
}

TEST_CASE("seed determinism") {
    Mt19937Source a(42);
    Mt19937Source b(42);
    for (int trial = 0; trial < 10; ++trial) {
        CHECK(random_permutation(8, a) == random_permutation(8, b));
    }
}
