#include "permgen/optimized_generator.hpp"

#include <map>
#include <mutex>

namespace permgen {

UnrolledSchedule build_schedule(int j, int cap) {
    if (j < 2) {
        throw std::invalid_argument("unroll level j must be at least 2");
    }
    if (j > cap) {
        throw std::invalid_argument("unroll level " + std::to_string(j) +
                                    " exceeds schedule cap " + std::to_string(cap));
    }
    UnrolledSchedule s;
    s.j = j;
    s.moves.reserve(factorial_u64(j) - 1);
    ShiftCursorStepper<NoCount> g(j);
    while (auto t = g.step()) {
        s.moves.emplace_back(t->a, t->b);
    }
    return s;
}

const UnrolledSchedule& cached_schedule(int j, int cap) {
    static std::mutex mu;
    static std::map<int, UnrolledSchedule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(j);
    if (it == cache.end()) {
        it = cache.emplace(j, build_schedule(j, cap)).first;
    }
    return it->second;
}

CostReport cost_report(const Alg1Stats& stats, int n, int j) {
    if (j < 2 || j > n) {
        throw std::invalid_argument("invalid (n, j) for cost report");
    }
    CostReport r;
    r.stores = stats.counters.stores;
    r.decisions = stats.counters.decisions;
    r.emitted = stats.emitted;
    r.decision_free = stats.decision_free;
    if (stats.emitted > 0) {
        const double perms = static_cast<double>(stats.emitted);
        r.stores_per_perm = static_cast<double>(r.stores) / perms;
        r.decisions_per_perm = static_cast<double>(r.decisions) / perms;
        r.decision_free_fraction = static_cast<double>(r.decision_free) / perms;
    }
    return r;
}

}  // namespace permgen
