#pragma once

#include "permgen/core.hpp"

#include <cassert>
#include <optional>
#include <vector>

namespace permgen {

/// In-place stepper for the shift-cursor sequence.
///
/// Every element of the current permutation is a cursor of some level
/// 1..n; the level-n cursor is always element 1. One step advances the
/// lowest incomplete cursor of level >= 2 by one slot to the right
/// (skipping positions held by higher-level cursors) and then
/// re-designates all lower-level cursors from the new permutation,
/// scanning left to right.
///
/// The Counter policy decides whether bookkeeping is tallied:
/// Counting records stores/decisions, NoCount compiles them away.
template <class Counter = Counting>
class ShiftCursorStepper {
public:
    explicit ShiftCursorStepper(int n, Counter cnt = Counter{})
        : n_(n), cnt_(cnt) {
        if (n < 1) {
            throw std::invalid_argument("degree must be at least 1");
        }
        slots_.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            slots_[static_cast<std::size_t>(i)] = i + 1;
        }
        elem_.assign(static_cast<std::size_t>(n) + 1, 0);
        pos_.assign(static_cast<std::size_t>(n) + 1, 0);
        used_.assign(static_cast<std::size_t>(n) + 1, 0);
        level_at_.assign(static_cast<std::size_t>(n) + 1, 0);
        // element k starts as the cursor of level n-k+1 at position k,
        // so the levels read n, n-1, ..., 1 by position
        for (int k = 1; k <= n; ++k) {
            const int level = n - k + 1;
            elem_[static_cast<std::size_t>(level)] = k;
            pos_[static_cast<std::size_t>(level)] = k;
            used_[static_cast<std::size_t>(level)] = 1;
            level_at_[static_cast<std::size_t>(k)] = level;
            cnt_.decision();
        }
    }

    int degree() const { return n_; }
    bool exhausted() const { return exhausted_; }
    const std::vector<int>& slots() const { return slots_; }

    Permutation current_permutation() const { return Permutation(slots_); }

    /// Level of the cursor sitting at each position (always a permutation
    /// of 1..n).
    Permutation levels_by_position() const {
        std::vector<int> lv(level_at_.begin() + 1, level_at_.end());
        return Permutation(std::move(lv));
    }

    int position_of_level(int level) const {
        return pos_[static_cast<std::size_t>(level)];
    }

    std::optional<Transposition> step() { return step_from(2); }

    /// Advance, considering only cursors of level >= floor as candidates.
    /// Used by the unrolled generator, whose scheduled swaps leave the
    /// bookkeeping of levels < floor stale on purpose: at a block boundary
    /// every level below the floor is complete by construction.
    std::optional<Transposition> step_from(int floor) {
        if (exhausted_) {
            throw std::logic_error("step on exhausted generator");
        }
        int lvl = 0;
        for (int l = floor < 2 ? 2 : floor; l <= n_; ++l) {
            cnt_.decision();
            if (used_[static_cast<std::size_t>(l)] < l) {
                lvl = l;
                break;
            }
        }
        if (lvl == 0) {
            exhausted_ = true;
            return std::nullopt;
        }
        const int a = pos_[static_cast<std::size_t>(lvl)];
        int b = a + 1;
        while (b <= n_ && level_at_[static_cast<std::size_t>(b)] > lvl) {
            cnt_.decision();
            ++b;
        }
        cnt_.decision();
        assert(b <= n_ && "incomplete cursor always has a free slot to its right");

        std::swap(slots_[static_cast<std::size_t>(a) - 1],
                  slots_[static_cast<std::size_t>(b) - 1]);
        cnt_.store(2);
        level_at_[static_cast<std::size_t>(a)] = 0;
        level_at_[static_cast<std::size_t>(b)] = lvl;
        pos_[static_cast<std::size_t>(lvl)] = b;
        ++used_[static_cast<std::size_t>(lvl)];

        // re-designate all cursors below lvl from the new permutation
        int next_level = lvl - 1;
        for (int p = 1; p <= n_; ++p) {
            cnt_.decision();
            if (level_at_[static_cast<std::size_t>(p)] >= lvl) {
                continue;
            }
            elem_[static_cast<std::size_t>(next_level)] =
                slots_[static_cast<std::size_t>(p) - 1];
            pos_[static_cast<std::size_t>(next_level)] = p;
            used_[static_cast<std::size_t>(next_level)] = 1;
            level_at_[static_cast<std::size_t>(p)] = next_level;
            --next_level;
        }
        assert(next_level == 0);
        return Transposition(a, b);
    }

    /// Ordered positions not held by any cursor of level > j.
    std::vector<int> free_positions(int j) {
        std::vector<int> free;
        free.reserve(static_cast<std::size_t>(j));
        for (int p = 1; p <= n_; ++p) {
            cnt_.decision();
            if (level_at_[static_cast<std::size_t>(p)] <= j) {
                free.push_back(p);
            }
        }
        return free;
    }

    /// Exchange two slots without touching cursor bookkeeping. The caller
    /// is responsible for the state becoming consistent again before the
    /// next step_from (see step_from's floor contract).
    void swap_slots_only(int a, int b) {
        std::swap(slots_[static_cast<std::size_t>(a) - 1],
                  slots_[static_cast<std::size_t>(b) - 1]);
        cnt_.store(2);
    }

private:
    int n_;
    std::vector<int> slots_;     // slots_[p-1] = element at position p
    std::vector<int> elem_;      // per level: cursor element
    std::vector<int> pos_;       // per level: cursor position
    std::vector<int> used_;      // per level: block slots consumed so far
    std::vector<int> level_at_;  // per position: level of the cursor there
    bool exhausted_ = false;
    Counter cnt_;
};

/// Generate all n! permutations of the shift-cursor sequence, invoking
/// visit(span<const int>) on each, starting with the identity.
template <class Counter, class Visitor>
void shift_cursor_generate(int n, Counter cnt, Visitor&& visit) {
    ShiftCursorStepper<Counter> g(n, cnt);
    visit(std::span<const int>(g.slots()));
    while (g.step()) {
        visit(std::span<const int>(g.slots()));
    }
}

template <class Visitor>
OpCounters shift_cursor_run(int n, Visitor&& visit) {
    OpCounters c;
    shift_cursor_generate(n, Counting{&c}, std::forward<Visitor>(visit));
    return c;
}

}  // namespace permgen
