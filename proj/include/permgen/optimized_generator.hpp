#pragma once

#include "permgen/core.hpp"
#include "permgen/shift_cursor.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace permgen {

/// Default cap on materialized schedules (10! - 1 moves ~ 3.6M pairs).
inline constexpr int kDefaultScheduleCap = 10;

/// The fixed rule of change shared by every j!-block: j!-1 transpositions
/// expressed as 1-based indices into the block's ordered free positions.
struct UnrolledSchedule {
    int j = 0;
    std::vector<std::pair<int, int>> moves;
};

/// Record the degree-j shift-cursor run as a relative schedule. At degree
/// j every position is free, so positions and free-slot indices coincide.
UnrolledSchedule build_schedule(int j, int cap = kDefaultScheduleCap);

/// Memoized schedules, shared read-only after construction.
const UnrolledSchedule& cached_schedule(int j, int cap = kDefaultScheduleCap);

struct Alg1Stats {
    OpCounters counters;
    std::uint64_t emitted = 0;
    std::uint64_t decision_free = 0;  // emissions with zero decision work
};

/// Algorithm-1 core: per block, derive the positions of cursors with
/// level > j (decision work), then emit the block head and replay the
/// j!-1 scheduled transpositions with two stores each and no decisions.
/// The block-crossing step runs the full stepper with its search floored
/// at j+1, since all lower levels are complete at a boundary.
template <class Counter, class Visitor>
void algorithm1_generate(int n, int j, Counter cnt, Visitor&& visit) {
    if (j < 2) {
        throw std::invalid_argument("unroll level j must be at least 2");
    }
    if (j > n) {
        throw std::invalid_argument("unroll level j must not exceed n");
    }
    const UnrolledSchedule& sched = cached_schedule(j);
    ShiftCursorStepper<Counter> g(n, cnt);
    // step 1 materializes the identity: n slot writes
    cnt.store(static_cast<std::uint64_t>(n));
    for (;;) {
        const std::vector<int> free = g.free_positions(j);
        visit(std::span<const int>(g.slots()));
        for (const auto& [x, y] : sched.moves) {
            g.swap_slots_only(free[static_cast<std::size_t>(x) - 1],
                              free[static_cast<std::size_t>(y) - 1]);
            visit(std::span<const int>(g.slots()));
        }
        if (!g.step_from(j + 1)) {
            break;
        }
    }
}

/// Instrumented run tracking per-emission decision work.
template <class Visitor>
Alg1Stats algorithm1(int n, int j, Visitor&& visit) {
    Alg1Stats stats;
    std::uint64_t decisions_at_last = 0;
    bool first = true;
    algorithm1_generate(n, j, Counting{&stats.counters},
                        [&](std::span<const int> slots) {
                            if (!first && stats.counters.decisions == decisions_at_last) {
                                ++stats.decision_free;
                            }
                            first = false;
                            decisions_at_last = stats.counters.decisions;
                            ++stats.emitted;
                            visit(slots);
                        });
    return stats;
}

struct CostReport {
    std::uint64_t stores = 0;
    std::uint64_t decisions = 0;
    std::uint64_t emitted = 0;
    std::uint64_t decision_free = 0;
    double stores_per_perm = 0.0;
    double decisions_per_perm = 0.0;
    double decision_free_fraction = 0.0;
};

CostReport cost_report(const Alg1Stats& stats, int n, int j);

}  // namespace permgen
