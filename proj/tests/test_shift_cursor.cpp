#include "permgen/shift_cursor.hpp"

#include "permgen/degree4_reference.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace permgen;

namespace {

std::vector<std::vector<int>> collect(int n) {
    std::vector<std::vector<int>> out;
    shift_cursor_run(n, [&](std::span<const int> s) {
        out.emplace_back(s.begin(), s.end());
    });
    return out;
}

}  // namespace

TEST_CASE("start state") {
    OpCounters c;
    ShiftCursorStepper<Counting> g(4, Counting{&c});
    CHECK(g.slots() == std::vector<int>{1, 2, 3, 4});
    CHECK(g.levels_by_position().slots() == std::vector<int>{4, 3, 2, 1});
    CHECK_FALSE(g.exhausted());
    CHECK_THROWS_AS(ShiftCursorStepper<Counting>(0, Counting{&c}),
                    std::invalid_argument);
}

TEST_CASE("n=1 is immediately the last permutation") {
    const auto seq = collect(1);
    REQUIRE(seq.size() == 1);
    CHECK(seq[0] == std::vector<int>{1});
}

TEST_CASE("n=2 sequence is 12, 21") {
    const auto seq = collect(2);
    REQUIRE(seq.size() == 2);
    CHECK(seq[0] == std::vector<int>{1, 2});
    CHECK(seq[1] == std::vector<int>{2, 1});
}

TEST_CASE("degree-4 run matches the reference tables") {
    OpCounters c;
    ShiftCursorStepper<Counting> g(4, Counting{&c});
    for (std::size_t row = 0;; ++row) {
        REQUIRE(row < 24);
        CHECK(std::equal(kShiftCursorSeq4[row].begin(), kShiftCursorSeq4[row].end(),
                         g.slots().begin()));
        CHECK(std::equal(kCursorLevels4[row].begin(), kCursorLevels4[row].end(),
                         g.levels_by_position().slots().begin()));
        if (!g.step()) {
            CHECK(row == 23);
            break;
        }
    }
    CHECK(g.exhausted());
    CHECK_THROWS_AS(g.step(), std::logic_error);
}

TEST_CASE("specific step transpositions") {
    OpCounters c;
    ShiftCursorStepper<Counting> g(4, Counting{&c});
    // 1234 -> 1243
    auto t = g.step();
    REQUIRE(t);
    CHECK(t->a == 3);
    CHECK(t->b == 4);
    // 1243 -> 1423 moves the cursor of the first block
    t = g.step();
    REQUIRE(t);
    CHECK(t->a == 2);
    CHECK(t->b == 3);
    CHECK(g.slots() == std::vector<int>{1, 4, 2, 3});
    // advance to 1432, then the block transition to 4132
    g.step();
    g.step();
    t = g.step();
    REQUIRE(t);
    CHECK(g.slots() == std::vector<int>{1, 4, 3, 2});
    t = g.step();
    REQUIRE(t);
    CHECK(t->a == 1);
    CHECK(t->b == 2);
    CHECK(g.slots() == std::vector<int>{4, 1, 3, 2});
}

TEST_CASE("completeness and distinctness against independent enumeration") {
    for (int n = 1; n <= 6; ++n) {
        const auto seq = collect(n);
        CHECK(seq.size() == factorial_u64(n));
        std::set<std::vector<int>> emitted(seq.begin(), seq.end());
        CHECK(emitted.size() == seq.size());
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        std::set<std::vector<int>> all;
        do {
            all.insert(v);
        } while (std::next_permutation(v.begin(), v.end()));
        CHECK(emitted == all);
    }
}

TEST_CASE("minimal change") {
    for (int n = 2; n <= 6; ++n) {
        const auto seq = collect(n);
        for (std::size_t i = 1; i < seq.size(); ++i) {
            int diff = 0;
            for (std::size_t p = 0; p < seq[i].size(); ++p) {
                if (seq[i][p] != seq[i - 1][p]) {
                    ++diff;
                }
            }
            CHECK(diff == 2);
        }
    }
}

TEST_CASE("levels always form a permutation and level n holds element 1") {
    OpCounters c;
    ShiftCursorStepper<Counting> g(5, Counting{&c});
    for (;;) {
        const Permutation levels = g.levels_by_position();  // ctor validates
        const int pos_of_level_n = g.position_of_level(5);
        CHECK(g.slots()[static_cast<std::size_t>(pos_of_level_n) - 1] == 1);
        if (!g.step()) {
            break;
        }
    }
}

TEST_CASE("counters are monotone and stores are 2 per step") {
    OpCounters c;
    ShiftCursorStepper<Counting> g(5, Counting{&c});
    std::uint64_t prev_stores = c.stores;
    std::uint64_t prev_decisions = c.decisions;
    while (g.step()) {
        CHECK(c.stores == prev_stores + 2);
        CHECK(c.decisions > prev_decisions);
        prev_stores = c.stores;
        prev_decisions = c.decisions;
    }
}
