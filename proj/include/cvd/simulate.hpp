// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "cvd/color.hpp"

namespace cvd {

enum class Dichromacy : std::uint8_t { Protanopia = 0, Deuteranopia = 1, Tritanopia = 2 };

inline constexpr std::array<Dichromacy, 3> kAllDichromacies{
    Dichromacy::Protanopia, Dichromacy::Deuteranopia, Dichromacy::Tritanopia};

/// "protan" / "deutan" / "tritan".
std::string_view short_name(Dichromacy kind);

/// Case-insensitive; accepts short names and full names ("protanopia").
std::optional<Dichromacy> parse_dichromacy(std::string_view text);

/// Small set of kinds, iterated in canonical protan, deutan, tritan order.
class DichromacySet {
public:
    constexpr DichromacySet() = default;
    constexpr DichromacySet(std::initializer_list<Dichromacy> kinds) {
        for (auto k : kinds) insert(k);
    }
    static constexpr DichromacySet all() {
        return {Dichromacy::Protanopia, Dichromacy::Deuteranopia, Dichromacy::Tritanopia};
    }

    constexpr void insert(Dichromacy k) { bits_ |= bit(k); }
    constexpr bool contains(Dichromacy k) const { return (bits_ & bit(k)) != 0; }
    constexpr bool empty() const { return bits_ == 0; }

    std::vector<Dichromacy> members() const;

    friend constexpr bool operator==(DichromacySet, DichromacySet) = default;

private:
    static constexpr std::uint8_t bit(Dichromacy k) {
        return static_cast<std::uint8_t>(1u << static_cast<unsigned>(k));
    }
    std::uint8_t bits_ = 0;
};

/// Rank-2 idempotent projection acting on LMS column vectors.
struct SimulationMatrix {
    Dichromacy kind;
    Mat3 matrix;
};

SimulationMatrix simulation_matrix(Dichromacy kind);

/// Projects without clamping.
Lms project(Lms c, Dichromacy kind);

/// decode -> LMS -> project -> RGB (clamped) -> encode.
Srgb8 simulate_color(Srgb8 c, Dichromacy kind);

}  // namespace cvd
