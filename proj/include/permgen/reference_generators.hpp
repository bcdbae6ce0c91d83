#pragma once

#include "permgen/core.hpp"

#include <numeric>
#include <span>
#include <utility>
#include <vector>

namespace permgen {

// Comparator generators used as oracles and benchmark baselines. Each
// invokes visit(span<const int>) on every permutation of 1..n and tallies
// slot writes (2 per swap) and bookkeeping probes through the Counter
// policy.

/// Plain changes: repeatedly move the largest mobile directed element one
/// step in its direction, then flip directions of all larger elements.
template <class Counter, class Visitor>
void johnson_trotter_generate(int n, Counter cnt, Visitor&& visit) {
    if (n < 1) {
        throw std::invalid_argument("degree must be at least 1");
    }
    std::vector<int> val(static_cast<std::size_t>(n));
    std::iota(val.begin(), val.end(), 1);
    std::vector<int> dir(static_cast<std::size_t>(n), -1);
    visit(std::span<const int>(val));
    for (;;) {
        int mobile = -1;
        for (int i = 0; i < n; ++i) {
            cnt.decision();
            const int t = i + dir[static_cast<std::size_t>(i)];
            if (t < 0 || t >= n) {
                continue;
            }
            if (val[static_cast<std::size_t>(t)] < val[static_cast<std::size_t>(i)] &&
                (mobile < 0 || val[static_cast<std::size_t>(i)] >
                                   val[static_cast<std::size_t>(mobile)])) {
                mobile = i;
            }
        }
        if (mobile < 0) {
            break;
        }
        const int t = mobile + dir[static_cast<std::size_t>(mobile)];
        const int moved = val[static_cast<std::size_t>(mobile)];
        std::swap(val[static_cast<std::size_t>(mobile)], val[static_cast<std::size_t>(t)]);
        std::swap(dir[static_cast<std::size_t>(mobile)], dir[static_cast<std::size_t>(t)]);
        cnt.store(2);
        for (int i = 0; i < n; ++i) {
            cnt.decision();
            if (val[static_cast<std::size_t>(i)] > moved) {
                dir[static_cast<std::size_t>(i)] = -dir[static_cast<std::size_t>(i)];
            }
        }
        visit(std::span<const int>(val));
    }
}

/// Heap's method, iterative counter-array form; one transposition per
/// emitted permutation.
template <class Counter, class Visitor>
void heap_generate(int n, Counter cnt, Visitor&& visit) {
    if (n < 1) {
        throw std::invalid_argument("degree must be at least 1");
    }
    std::vector<int> val(static_cast<std::size_t>(n));
    std::iota(val.begin(), val.end(), 1);
    visit(std::span<const int>(val));
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    int i = 0;
    while (i < n) {
        cnt.decision();
        if (c[static_cast<std::size_t>(i)] < i) {
            const int a = (i % 2 == 0) ? 0 : c[static_cast<std::size_t>(i)];
            std::swap(val[static_cast<std::size_t>(a)], val[static_cast<std::size_t>(i)]);
            cnt.store(2);
            visit(std::span<const int>(val));
            ++c[static_cast<std::size_t>(i)];
            i = 0;
        } else {
            c[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
    }
}

/// Lexicographic order of slot sequences; the neutral set-equality oracle,
/// independent of all transposition-based methods.
template <class Counter, class Visitor>
void lexicographic_generate(int n, Counter cnt, Visitor&& visit) {
    if (n < 1) {
        throw std::invalid_argument("degree must be at least 1");
    }
    std::vector<int> val(static_cast<std::size_t>(n));
    std::iota(val.begin(), val.end(), 1);
    visit(std::span<const int>(val));
    for (;;) {
        int i = n - 2;
        while (i >= 0 && val[static_cast<std::size_t>(i)] >= val[static_cast<std::size_t>(i + 1)]) {
            cnt.decision();
            --i;
        }
        cnt.decision();
        if (i < 0) {
            break;
        }
        int k = n - 1;
        while (val[static_cast<std::size_t>(k)] <= val[static_cast<std::size_t>(i)]) {
            cnt.decision();
            --k;
        }
        std::swap(val[static_cast<std::size_t>(i)], val[static_cast<std::size_t>(k)]);
        cnt.store(2);
        for (int l = i + 1, r = n - 1; l < r; ++l, --r) {
            std::swap(val[static_cast<std::size_t>(l)], val[static_cast<std::size_t>(r)]);
            cnt.store(2);
        }
        visit(std::span<const int>(val));
    }
}

// Instrumented conveniences.
template <class Visitor>
OpCounters johnson_trotter(int n, Visitor&& visit) {
    OpCounters c;
    johnson_trotter_generate(n, Counting{&c}, std::forward<Visitor>(visit));
    return c;
}

template <class Visitor>
OpCounters heap(int n, Visitor&& visit) {
    OpCounters c;
    heap_generate(n, Counting{&c}, std::forward<Visitor>(visit));
    return c;
}

template <class Visitor>
OpCounters lexicographic(int n, Visitor&& visit) {
    OpCounters c;
    lexicographic_generate(n, Counting{&c}, std::forward<Visitor>(visit));
    return c;
}

}  // namespace permgen
