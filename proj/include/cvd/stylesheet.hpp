// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cvd/conflict.hpp"
#include "cvd/remap.hpp"

namespace cvd {

struct ByteSpan {
    std::size_t start = 0;
    std::size_t end = 0;

    friend bool operator==(const ByteSpan&, const ByteSpan&) = default;
};

struct StyleOccurrence {
    std::string selector;
    std::string property;
    ByteSpan span;
    Srgb8 color;
    std::optional<double> alpha;
    std::size_t block = 0;  // index of the enclosing rule block, in source order

    friend bool operator==(const StyleOccurrence&, const StyleOccurrence&) = default;
};

struct ScanWarning {
    std::size_t offset = 0;
    std::string message;
};

struct ScanResult {
    std::vector<StyleOccurrence> occurrences;
    std::vector<ScanWarning> warnings;
};

struct ParsedColor {
    Srgb8 color;
    std::optional<double> alpha;
};

/// One colour literal: hex, rgb()/rgba(), hsl()/hsla() or a basic named colour.
std::optional<ParsedColor> parse_color_literal(std::string_view text);

/// Finds colour literals in declaration values. Comments, strings and url()
/// bodies are skipped. Throws FormatError with the byte offset for unbalanced
/// braces or unterminated comments/strings.
ScanResult scan_stylesheet(std::string_view text);

struct StyleGraph {
    std::vector<ColorToken> tokens;
    std::vector<AdjacencyPair> adjacency;
};

/// Token id for a stylesheet colour: "c_" + lowercase hex digits.
std::string style_token_id(Srgb8 c);

/// One token per distinct colour (ids from style_token_id, weight = use count),
/// and a TextOnBackground pair per block that sets both a foreground colour and
/// a background.
StyleGraph derive_adjacency(const std::vector<StyleOccurrence>& occurrences);

/// Replaces each occurrence whose colour the plan remaps with lowercase
/// #rrggbb (#rrggbbaa when it carried alpha). Other bytes are untouched.
std::string rewrite_stylesheet(std::string_view text,
                               const std::vector<StyleOccurrence>& occurrences,
                               const RemapPlan& plan);

}  // namespace cvd
