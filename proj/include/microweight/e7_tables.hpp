#pragma once

// Hand-computed E7 data: the table S_{a_i}(a_j), the images of the simple
// roots under S_{e3+e6}, and the explicit reflection chains through 2*w7.
// Everything is in simple-root coordinates; chain values are doubled.

#include <array>
#include <cstddef>
#include <vector>

namespace microweight::e7_tables {

using Coeffs = std::array<int, 7>;

// kReflectionTable[i][j] = S_{a_{i+1}}(a_{j+1}).
inline constexpr std::array<std::array<Coeffs, 7>, 7> kReflectionTable{{
    {{{-1, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0}, {1, 0, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0, 1}}},
    {{{1, 0, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0}, {0, 1, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0, 1}}},
    {{{1, 0, 1, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0}, {0, 0, -1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0, 1}}},
    {{{1, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 1, 0, 0, 0}, {0, 0, 1, 1, 0, 0, 0}, {0, 0, 0, -1, 0, 0, 0}, {0, 0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0, 1}}},
    {{{1, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, -1, 0, 0}, {0, 0, 0, 0, 1, 1, 0}, {0, 0, 0, 0, 0, 0, 1}}},
    {{{1, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 1, 1, 0}, {0, 0, 0, 0, 0, -1, 0}, {0, 0, 0, 0, 0, 1, 1}}},
    {{{1, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 1, 1}, {0, 0, 0, 0, 0, 0, -1}}},
}};

// The positive root e3 + e6.
inline constexpr Coeffs kE3PlusE6{0, 1, 1, 2, 1, 1, 1};

// S_{e3+e6}(a_{i+1}).
inline constexpr std::array<Coeffs, 7> kE3PlusE6Images{{
    {1, 1, 1, 2, 1, 1, 1},
    {0, 1, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0},
    {0, -1, -1, -1, -1, -1, -1},
    {0, 1, 1, 2, 2, 1, 1},
    {0, 0, 0, 0, 0, 1, 0},
    {0, -1, -1, -2, -1, -1, 0},
}};

// 2*w7 in simple-root coordinates.
inline constexpr Coeffs kTwoOmega7{2, 3, 4, 6, 5, 4, 3};

/// Step 0 is S_{e3+e6}; k in 1..7 is S_{a_k}.
struct Chain {
    Coeffs start;
    std::vector<int> steps;
    std::vector<Coeffs> values; // values[i] = result after steps[i]
};

inline std::vector<Chain> chains()
{
    return {
        {kTwoOmega7,
         {0, 1, 3, 5, 4, 2, 6},
         {{2, 1, 2, 2, 3, 2, 1}, {0, 1, 2, 2, 3, 2, 1}, {0, 1, 0, 2, 3, 2, 1}, {0, 1, 0, 2, 1, 2, 1},
          {0, 1, 0, 0, 1, 2, 1}, {0, -1, 0, 0, 1, 2, 1}, {0, -1, 0, 0, 1, 0, 1}}},
        {{2, 1, 2, 2, 3, 2, 1},
         {4, 2, 3, 4, 5, 6},
         {{2, 1, 2, 4, 3, 2, 1}, {2, 3, 2, 4, 3, 2, 1}, {2, 3, 4, 4, 3, 2, 1}, {2, 3, 4, 6, 3, 2, 1},
          {2, 3, 4, 6, 5, 2, 1}, {2, 3, 4, 6, 5, 4, 1}}},
        {{2, 1, 2, 2, 3, 2, 1}, {5, 6, 7}, {{2, 1, 2, 2, 1, 2, 1}, {2, 1, 2, 2, 1, 0, 1}, {2, 1, 2, 2, 1, 0, -1}}},
        {{0, 1, 2, 2, 3, 2, 1}, {4, 2}, {{0, 1, 2, 4, 3, 2, 1}, {0, 3, 2, 4, 3, 2, 1}}},
        {{0, 1, 2, 2, 3, 2, 1},
         {5, 6, 3, 4, 5},
         {{0, 1, 2, 2, 1, 2, 1}, {0, 1, 2, 2, 1, 0, 1}, {0, 1, 0, 2, 1, 0, 1}, {0, 1, 0, 0, 1, 0, 1}, {0, 1, 0, 0, -1, 0, 1}}},
        {{2, 1, 2, 4, 3, 2, 1}, {3}, {{2, 1, 4, 4, 3, 2, 1}}},
        {{0, 1, 2, 2, 1, 0, 1}, {7, 3}, {{0, 1, 2, 2, 1, 0, -1}, {0, 1, 0, 2, 1, 0, -1}}},
        {{0, 1, 0, 0, 1, 0, 1}, {7}, {{0, 1, 0, 0, 1, 0, -1}}},
    };
}

} // namespace microweight::e7_tables
