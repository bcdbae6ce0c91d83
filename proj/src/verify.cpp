#include "permgen/verify.hpp"

#include "permgen/degree4_reference.hpp"
#include "permgen/level_codec.hpp"
#include "permgen/optimized_generator.hpp"
#include "permgen/reference_generators.hpp"
#include "permgen/shift_cursor.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace permgen {

namespace {

std::vector<std::vector<int>> collect_shift_cursor(int n) {
    std::vector<std::vector<int>> out;
    out.reserve(factorial_u64(n));
    shift_cursor_run(n, [&](std::span<const int> s) {
        out.emplace_back(s.begin(), s.end());
    });
    return out;
}

int diff_positions(const std::vector<int>& a, const std::vector<int>& b) {
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) {
            ++d;
        }
    }
    return d;
}

CheckResult pass(std::string name) { return {std::move(name), true, ""}; }

CheckResult fail(std::string name, std::string detail) {
    return {std::move(name), false, std::move(detail)};
}

}  // namespace

CheckResult check_completeness(int n) {
    const std::string name = "completeness+minimal-change n=" + std::to_string(n);
    const auto seq = collect_shift_cursor(n);
    if (seq.size() != factorial_u64(n)) {
        return fail(name, "emitted " + std::to_string(seq.size()) + " != n!");
    }
    for (std::size_t i = 1; i < seq.size(); ++i) {
        if (diff_positions(seq[i - 1], seq[i]) != 2) {
            return fail(name, "emission " + std::to_string(i + 1) +
                                  " is not one transposition from its predecessor");
        }
    }
    std::vector<std::vector<int>> lex;
    lexicographic(n, [&](std::span<const int> s) {
        lex.emplace_back(s.begin(), s.end());
    });
    auto sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != lex) {
        return fail(name, "set of emissions differs from lexicographic oracle");
    }
    return pass(name);
}

CheckResult check_local_stability(int n) {
    const std::string name = "local-stability n=" + std::to_string(n);
    // positions_per_level[l][i] = position of the level-l cursor when the
    // (i+1)-th permutation is current
    std::vector<std::vector<int>> positions(static_cast<std::size_t>(n) + 1);
    OpCounters c;
    ShiftCursorStepper<Counting> g(n, Counting{&c});
    for (;;) {
        for (int l = 1; l <= n; ++l) {
            positions[static_cast<std::size_t>(l)].push_back(g.position_of_level(l));
        }
        if (!g.step()) {
            break;
        }
    }
    for (int l = 1; l <= n; ++l) {
        const std::uint64_t window = factorial_u64(l - 1);
        const auto& ps = positions[static_cast<std::size_t>(l)];
        for (std::size_t start = 0; start < ps.size(); start += window) {
            for (std::size_t i = start + 1; i < start + window && i < ps.size(); ++i) {
                if (ps[i] != ps[start]) {
                    return fail(name, "level " + std::to_string(l) +
                                          " cursor moved inside window starting at " +
                                          std::to_string(start + 1));
                }
            }
        }
    }
    return pass(name);
}

CheckResult check_rule_stability(int n) {
    const std::string name = "rule-stability n=" + std::to_string(n);
    for (int j = 2; j <= n; ++j) {
        const std::uint64_t block = factorial_u64(j);
        std::vector<std::pair<int, int>> first_schedule;
        std::vector<std::pair<int, int>> schedule;
        OpCounters c;
        ShiftCursorStepper<Counting> g(n, Counting{&c});
        std::uint64_t emitted = 1;  // identity is current
        std::map<int, int> free_index;
        auto head = [&] {
            free_index.clear();
            int idx = 0;
            for (int p : g.free_positions(j)) {
                free_index[p] = ++idx;
            }
            schedule.clear();
        };
        head();
        std::uint64_t block_no = 0;
        for (;;) {
            auto t = g.step();
            if (!t) {
                break;
            }
            ++emitted;
            if ((emitted - 1) % block == 0) {
                // this step crossed a block boundary
                if (block_no == 0) {
                    first_schedule = schedule;
                } else if (schedule != first_schedule) {
                    return fail(name, "j=" + std::to_string(j) + " block " +
                                          std::to_string(block_no + 1) +
                                          " schedule differs from block 1");
                }
                ++block_no;
                head();
            } else {
                auto ax = free_index.find(t->a);
                auto bx = free_index.find(t->b);
                if (ax == free_index.end() || bx == free_index.end()) {
                    return fail(name, "j=" + std::to_string(j) +
                                          " intra-block step touched a held position");
                }
                schedule.emplace_back(ax->second, bx->second);
            }
        }
        // last block
        if (block_no > 0 && schedule != first_schedule) {
            return fail(name, "j=" + std::to_string(j) + " final block differs");
        }
    }
    return pass(name);
}

CheckResult check_level_correspondence(int n) {
    const std::string name = "level-correspondence n=" + std::to_string(n);
    OpCounters c;
    ShiftCursorStepper<Counting> g(n, Counting{&c});
    Natural i = 1;
    for (;;) {
        const Permutation expected = level_unrank(i, n);
        if (complement(g.levels_by_position()) != expected) {
            return fail(name, "mismatch at rank " + i.str());
        }
        if (!g.step()) {
            break;
        }
        ++i;
    }
    return pass(name);
}

CheckResult check_degree4_goldens() {
    const std::string name = "degree4-goldens";
    OpCounters c;
    ShiftCursorStepper<Counting> g(4, Counting{&c});
    for (std::size_t row = 0; row < 24; ++row) {
        const auto& want = kShiftCursorSeq4[row];
        if (!std::equal(want.begin(), want.end(), g.slots().begin())) {
            return fail(name, "shift-cursor row " + std::to_string(row + 1));
        }
        const auto& lv = kCursorLevels4[row];
        const Permutation levels = g.levels_by_position();
        if (!std::equal(lv.begin(), lv.end(), levels.slots().begin())) {
            return fail(name, "cursor-levels row " + std::to_string(row + 1));
        }
        const Permutation ls = level_unrank(static_cast<int>(row) + 1, 4);
        if (!std::equal(kLevelSequence4[row].begin(), kLevelSequence4[row].end(),
                        ls.slots().begin())) {
            return fail(name, "level-sequence row " + std::to_string(row + 1));
        }
        if (row < 23 && !g.step()) {
            return fail(name, "sequence ended early at row " + std::to_string(row + 1));
        }
    }
    std::vector<std::vector<int>> jt;
    johnson_trotter(4, [&](std::span<const int> s) {
        jt.emplace_back(s.begin(), s.end());
    });
    for (std::size_t row = 0; row < 24; ++row) {
        if (!std::equal(kPlainChanges4[row].begin(), kPlainChanges4[row].end(),
                        jt[row].begin())) {
            return fail(name, "plain-changes row " + std::to_string(row + 1));
        }
    }
    return pass(name);
}

CheckResult check_alg1_equivalence(int n, int j) {
    const std::string name =
        "alg1-equivalence n=" + std::to_string(n) + " j=" + std::to_string(j);
    const auto reference = collect_shift_cursor(n);
    std::size_t idx = 0;
    bool match = true;
    const Alg1Stats stats = algorithm1(n, j, [&](std::span<const int> s) {
        if (idx >= reference.size() ||
            !std::equal(s.begin(), s.end(), reference[idx].begin(),
                        reference[idx].end())) {
            match = false;
        }
        ++idx;
    });
    if (!match || idx != reference.size()) {
        return fail(name, "output sequence differs from shift-cursor run");
    }
    const std::uint64_t total = factorial_u64(n);
    const std::uint64_t blocks = total / factorial_u64(j);
    if (stats.decision_free != total - blocks) {
        return fail(name, "decision-free count " + std::to_string(stats.decision_free) +
                              " != n! - n!/j! = " + std::to_string(total - blocks));
    }
    return pass(name);
}

CheckResult check_rank_bijection(int n) {
    const std::string name = "rank-bijection n=" + std::to_string(n);
    std::set<std::vector<int>> seen;
    const std::uint64_t total = factorial_u64(n);
    for (std::uint64_t i = 1; i <= total; ++i) {
        const Permutation p = level_unrank(static_cast<long long>(i), n);
        if (!seen.insert(p.slots()).second) {
            return fail(name, "duplicate output at rank " + std::to_string(i));
        }
        if (level_rank(p) != static_cast<long long>(i)) {
            return fail(name, "round trip failed at rank " + std::to_string(i));
        }
    }
    return pass(name);
}

std::vector<CheckResult> run_verification(int n, std::optional<int> j) {
    std::vector<CheckResult> results;
    results.push_back(check_completeness(n));
    results.push_back(check_local_stability(n));
    results.push_back(check_rule_stability(n));
    results.push_back(check_level_correspondence(n));
    if (n == 4) {
        results.push_back(check_degree4_goldens());
    }
    if (j) {
        results.push_back(check_alg1_equivalence(n, *j));
    }
    return results;
}

}  // namespace permgen
