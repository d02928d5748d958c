// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cvd/color.hpp"
#include "cvd/simulate.hpp"

namespace cvd {

enum class TokenRole { Text, Background, Decoration };

struct ColorToken {
    std::string id;
    Srgb8 color;
    TokenRole role = TokenRole::Decoration;
    unsigned weight = 1;

    friend bool operator==(const ColorToken&, const ColorToken&) = default;
};

enum class Relation { TextOnBackground, Neighbors };

struct AdjacencyPair {
    std::string a;
    std::string b;
    Relation relation = Relation::Neighbors;

    friend bool operator==(const AdjacencyPair&, const AdjacencyPair&) = default;
};

std::string_view to_string(TokenRole role);
std::string_view to_string(Relation relation);

/// Both values are CIE76 distances.
struct ConflictThresholds {
    double distinct_normal = 15.0;
    double confusable_sim = 12.0;

    /// Throws ValidationError unless both are strictly positive.
    void validate() const;
};

/// Simulated distances indexed by Dichromacy; unset for kinds not requested.
using PerKind = std::array<std::optional<double>, 3>;

struct PairScore {
    double de_normal = 0.0;
    PerKind de_sim{};
};

struct ConflictReport {
    AdjacencyPair pair;
    double de_normal = 0.0;
    PerKind de_sim{};
    DichromacySet conflicting_kinds;
    double severity = 0.0;

    friend bool operator==(const ConflictReport&, const ConflictReport&) = default;
};

PairScore pair_score(Srgb8 a, Srgb8 b, DichromacySet kinds);

/// Every unordered token pair, in token order, as Neighbors.
std::vector<AdjacencyPair> complete_adjacency(std::span<const ColorToken> tokens);

/// Throws ValidationError for duplicate token ids, zero weights, self-pairs
/// or ids that do not resolve.
void validate_graph(std::span<const ColorToken> tokens, std::span<const AdjacencyPair> adjacency);

/// A pair conflicts for kind k when de_normal >= distinct_normal and
/// de_sim[k] < confusable_sim. Reports come back sorted by severity
/// (descending), then by (a, b). An empty adjacency with complete_graph set
/// scores every unordered pair.
std::vector<ConflictReport> detect_conflicts(std::span<const ColorToken> tokens,
                                             std::span<const AdjacencyPair> adjacency,
                                             DichromacySet kinds,
                                             const ConflictThresholds& thresholds,
                                             bool complete_graph = false);

/// The gate used by detect_conflicts, for a single already-scored pair.
std::optional<ConflictReport> classify(const AdjacencyPair& pair, const PairScore& score,
                                       DichromacySet kinds, const ConflictThresholds& thresholds);

}  // namespace cvd
