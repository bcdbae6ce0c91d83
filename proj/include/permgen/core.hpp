#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace permgen {

// Exact natural-number arithmetic; ranks routinely exceed 64 bits.
using Natural = boost::multiprecision::cpp_int;
using Rank = Natural;

/// A permutation of 1..n stored densely by position.
/// Positions and elements are 1-based in the public API.
class Permutation {
public:
    explicit Permutation(std::vector<int> slots);

    static Permutation identity(int n);

    int degree() const { return static_cast<int>(slots_.size()); }
    int at(int pos) const { return slots_[static_cast<std::size_t>(pos) - 1]; }
    const std::vector<int>& slots() const { return slots_; }

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> slots_;
};

/// Unordered pair of distinct positions, normalized so a < b.
struct Transposition {
    int a;
    int b;

    Transposition(int x, int y);
};

/// Abstract cost tallies: stores are writes into a permutation's slots,
/// decisions are the bookkeeping taken to decide what to change.
struct OpCounters {
    std::uint64_t stores = 0;
    std::uint64_t decisions = 0;
};

// Counting policies. Generators are parameterized on one of these so the
// instrumented and raw code paths cannot drift apart.
struct Counting {
    OpCounters* c;
    void store(std::uint64_t k) { c->stores += k; }
    void decision(std::uint64_t k = 1) { c->decisions += k; }
};

struct NoCount {
    void store(std::uint64_t) {}
    void decision(std::uint64_t = 1) {}
};

Permutation apply_transposition(const Permutation& p, Transposition t);
Permutation complement(const Permutation& p);

Natural factorial(int k);

// Fast path for loop bounds and counter math; throws past 20! (would wrap).
std::uint64_t factorial_u64(int k);

/// Canonical text form: elements separated by single spaces ("1 2 3 4").
std::string to_text(const Permutation& p);
std::string to_text(std::span<const int> slots);

/// Accepts the canonical space-separated form, or compact digits ("1234")
/// for n <= 9.
Permutation parse_permutation(const std::string& text);

/// Parses a decimal string into an exact natural; rejects non-digits.
Natural parse_natural(const std::string& text);

}  // namespace permgen
