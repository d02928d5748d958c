// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>
#include <vector>

#include "cvd/conflict.hpp"

namespace cvd {

struct RemapPolicy {
    double hue_step = 15.0;
    double max_rotation = 180.0;
    std::vector<double> lightness_steps{0.0, 0.05, -0.05, 0.10, -0.10, 0.20, -0.20};
    int max_passes = 4;

    /// Throws ValidationError on hue_step <= 0, max_rotation outside (0, 180],
    /// max_passes < 1 or an empty lightness list.
    void validate() const;
};

struct Candidate {
    Srgb8 color;
    double rotation = 0.0;  // signed degrees
    double lightness_offset = 0.0;
};

struct RemapEntry {
    std::string id;
    Srgb8 original;
    Srgb8 replacement;
    double rotation = 0.0;
    double lightness_offset = 0.0;

    friend bool operator==(const RemapEntry&, const RemapEntry&) = default;
};

struct RemapPlan {
    std::vector<RemapEntry> entries;
    std::vector<ConflictReport> unresolved;

    friend bool operator==(const RemapPlan&, const RemapPlan&) = default;
};

/// Side of a conflicting pair to recolour: lower weight, then fewer incident
/// edges, then the larger hex string, then the larger id.
std::string choose_victim(const AdjacencyPair& pair, std::span<const ColorToken> tokens,
                          std::span<const AdjacencyPair> adjacency);

/// Hue rotations of c by +k*step then -k*step for each lightness offset in
/// policy order. Quantized duplicates and c itself are skipped.
std::vector<Candidate> candidate_colors(Srgb8 c, const RemapPolicy& policy);

/// True when `color` placed at `victim` keeps every incident edge
/// distinguishable normally and under every kind, and does not collide with
/// another token's current colour.
bool candidate_acceptable(Srgb8 color, const std::string& victim,
                          std::span<const ColorToken> tokens,
                          std::span<const AdjacencyPair> adjacency, DichromacySet kinds,
                          const ConflictThresholds& thresholds);

/// Greedy single-victim remapping. `unresolved` equals detect_conflicts on
/// the remapped tokens.
RemapPlan resolve(std::span<const ColorToken> tokens, std::span<const AdjacencyPair> adjacency,
                  DichromacySet kinds, const ConflictThresholds& thresholds,
                  const RemapPolicy& policy, bool complete_graph = false);

/// Tokens with plan replacements substituted.
std::vector<ColorToken> apply_plan(std::span<const ColorToken> tokens, const RemapPlan& plan);

}  // namespace cvd
