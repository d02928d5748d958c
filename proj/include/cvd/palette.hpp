// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cvd/conflict.hpp"

namespace cvd {

struct PaletteDoc {
    std::vector<ColorToken> colors;
    std::optional<std::vector<AdjacencyPair>> adjacency;
    bool complete_graph = true;

    /// Declared adjacency, or every pair when complete_graph is set.
    std::vector<AdjacencyPair> effective_adjacency() const;
};

/// Palette JSON:
///   {"colors":[{"id":..,"hex":"#rrggbb","role":..?,"weight":..?}],
///    "adjacency":[["a","b"], ["c","d","text_on_background"]]?}
/// Throws ValidationError whose message carries source, line and JSON pointer.
PaletteDoc parse_palette(std::string_view text, std::string_view source = "<palette>");

std::string serialize_palette(const PaletteDoc& doc);

}  // namespace cvd
