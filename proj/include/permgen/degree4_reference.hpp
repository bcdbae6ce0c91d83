#pragma once

#include <array>

namespace permgen {

// Hand-checked degree-4 reference tables anchoring the generators: the
// shift-cursor sequence, the cursor levels by position at each step, the
// level sequence (complement of the cursor levels), and the plain-changes
// order for comparison.

inline constexpr std::array<std::array<int, 4>, 24> kShiftCursorSeq4 = {{
    {1, 2, 3, 4}, {1, 2, 4, 3}, {1, 4, 2, 3}, {1, 3, 2, 4}, {1, 3, 4, 2},
    {1, 4, 3, 2}, {4, 1, 3, 2}, {4, 1, 2, 3}, {2, 1, 4, 3}, {3, 1, 4, 2},
    {3, 1, 2, 4}, {2, 1, 3, 4}, {2, 3, 1, 4}, {2, 4, 1, 3}, {4, 2, 1, 3},
    {3, 2, 1, 4}, {3, 4, 1, 2}, {4, 3, 1, 2}, {4, 3, 2, 1}, {4, 2, 3, 1},
    {2, 4, 3, 1}, {3, 4, 2, 1}, {3, 2, 4, 1}, {2, 3, 4, 1},
}};

inline constexpr std::array<std::array<int, 4>, 24> kCursorLevels4 = {{
    {4, 3, 2, 1}, {4, 3, 1, 2}, {4, 2, 3, 1}, {4, 1, 3, 2}, {4, 2, 1, 3},
    {4, 1, 2, 3}, {3, 4, 2, 1}, {3, 4, 1, 2}, {2, 4, 3, 1}, {1, 4, 3, 2},
    {2, 4, 1, 3}, {1, 4, 2, 3}, {3, 2, 4, 1}, {3, 1, 4, 2}, {2, 3, 4, 1},
    {1, 3, 4, 2}, {2, 1, 4, 3}, {1, 2, 4, 3}, {3, 2, 1, 4}, {3, 1, 2, 4},
    {2, 3, 1, 4}, {1, 3, 2, 4}, {2, 1, 3, 4}, {1, 2, 3, 4},
}};

inline constexpr std::array<std::array<int, 4>, 24> kLevelSequence4 = {{
    {1, 2, 3, 4}, {1, 2, 4, 3}, {1, 3, 2, 4}, {1, 4, 2, 3}, {1, 3, 4, 2},
    {1, 4, 3, 2}, {2, 1, 3, 4}, {2, 1, 4, 3}, {3, 1, 2, 4}, {4, 1, 2, 3},
    {3, 1, 4, 2}, {4, 1, 3, 2}, {2, 3, 1, 4}, {2, 4, 1, 3}, {3, 2, 1, 4},
    {4, 2, 1, 3}, {3, 4, 1, 2}, {4, 3, 1, 2}, {2, 3, 4, 1}, {2, 4, 3, 1},
    {3, 2, 4, 1}, {4, 2, 3, 1}, {3, 4, 2, 1}, {4, 3, 2, 1},
}};

inline constexpr std::array<std::array<int, 4>, 24> kPlainChanges4 = {{
    {1, 2, 3, 4}, {1, 2, 4, 3}, {1, 4, 2, 3}, {4, 1, 2, 3}, {4, 1, 3, 2},
    {1, 4, 3, 2}, {1, 3, 4, 2}, {1, 3, 2, 4}, {3, 1, 2, 4}, {3, 1, 4, 2},
    {3, 4, 1, 2}, {4, 3, 1, 2}, {4, 3, 2, 1}, {3, 4, 2, 1}, {3, 2, 4, 1},
    {3, 2, 1, 4}, {2, 3, 1, 4}, {2, 3, 4, 1}, {2, 4, 3, 1}, {4, 2, 3, 1},
    {4, 2, 1, 3}, {2, 4, 1, 3}, {2, 1, 4, 3}, {2, 1, 3, 4},
}};

}  // namespace permgen
