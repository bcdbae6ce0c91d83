#include "permgen/core.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <utility>

namespace permgen {

Permutation::Permutation(std::vector<int> slots) : slots_(std::move(slots)) {
    const int n = degree();
    if (n < 1) {
        throw std::invalid_argument("permutation degree must be at least 1");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : slots_) {
        if (v < 1 || v > n) {
            throw std::invalid_argument("element " + std::to_string(v) +
                                        " out of range 1.." + std::to_string(n));
        }
        if (seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("not a permutation: element " +
                                        std::to_string(v) + " repeats");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 1) {
        throw std::invalid_argument("degree must be at least 1");
    }
    std::vector<int> slots(static_cast<std::size_t>(n));
    std::iota(slots.begin(), slots.end(), 1);
    return Permutation(std::move(slots));
}

Transposition::Transposition(int x, int y) : a(std::min(x, y)), b(std::max(x, y)) {
    if (x == y) {
        throw std::invalid_argument("transposition positions must differ");
    }
    if (a < 1) {
        throw std::invalid_argument("positions are 1-based");
    }
}

Permutation apply_transposition(const Permutation& p, Transposition t) {
    if (t.b > p.degree()) {
        throw std::out_of_range("transposition position exceeds degree");
    }
    std::vector<int> s = p.slots();
    std::swap(s[static_cast<std::size_t>(t.a) - 1], s[static_cast<std::size_t>(t.b) - 1]);
    return Permutation(std::move(s));
}

Permutation complement(const Permutation& p) {
    const int n = p.degree();
    std::vector<int> s(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        s[static_cast<std::size_t>(i)] = n + 1 - p.slots()[static_cast<std::size_t>(i)];
    }
    return Permutation(std::move(s));
}

Natural factorial(int k) {
    if (k < 0) {
        throw std::invalid_argument("factorial of negative number");
    }
    Natural r = 1;
    for (int i = 2; i <= k; ++i) {
        r *= i;
    }
    return r;
}

std::uint64_t factorial_u64(int k) {
    if (k < 0) {
        throw std::invalid_argument("factorial of negative number");
    }
    if (k > 20) {
        throw std::overflow_error("factorial_u64: " + std::to_string(k) +
                                  "! exceeds 64 bits");
    }
    std::uint64_t r = 1;
    for (int i = 2; i <= k; ++i) {
        r *= static_cast<std::uint64_t>(i);
    }
    return r;
}

std::string to_text(const Permutation& p) { return to_text(std::span<const int>(p.slots())); }

std::string to_text(std::span<const int> slots) {
    std::string out;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (i != 0) {
            out += ' ';
        }
        out += std::to_string(slots[i]);
    }
    return out;
}

Permutation parse_permutation(const std::string& text) {
    std::vector<int> slots;
    const bool has_space = text.find_first_of(" \t") != std::string::npos;
    if (has_space) {
        std::istringstream in(text);
        std::string tok;
        while (in >> tok) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("not an integer: '" + tok + "'");
            }
            if (used != tok.size()) {
                throw std::invalid_argument("not an integer: '" + tok + "'");
            }
            slots.push_back(v);
        }
    } else {
        // compact digit form, n <= 9
        for (char ch : text) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) {
                throw std::invalid_argument("invalid character in permutation");
            }
            slots.push_back(ch - '0');
        }
        if (slots.size() > 9) {
            throw std::invalid_argument("compact digit form only valid for n <= 9");
        }
    }
    return Permutation(std::move(slots));
}

Natural parse_natural(const std::string& text) {
    if (text.empty()) {
        throw std::invalid_argument("empty number");
    }
    for (char ch : text) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            throw std::invalid_argument("not a decimal natural: '" + text + "'");
        }
    }
    return Natural(text);
}

}  // namespace permgen
