// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <vector>

#include "cvd/color.hpp"

namespace cvd::test {

// 32 evenly spaced 8-bit levels, 0 and 255 included.
inline std::vector<std::uint8_t> grid_levels() {
    std::vector<std::uint8_t> out;
    for (int i = 0; i < 32; ++i) out.push_back(static_cast<std::uint8_t>(round_half_away(i * 255.0 / 31.0)));
    return out;
}

inline std::vector<Srgb8> grid32() {
    std::vector<Srgb8> out;
    const auto levels = grid_levels();
    for (auto r : levels)
        for (auto g : levels)
            for (auto b : levels) out.push_back({r, g, b});
    return out;
}

inline Srgb8 random_color(std::mt19937& rng) {
    std::uniform_int_distribution<int> d(0, 255);
    return {static_cast<std::uint8_t>(d(rng)), static_cast<std::uint8_t>(d(rng)),
            static_cast<std::uint8_t>(d(rng))};
}

inline int max_channel_diff(Srgb8 a, Srgb8 b) {
    return std::max({std::abs(a.r - b.r), std::abs(a.g - b.g), std::abs(a.b - b.b)});
}

}  // namespace cvd::test
