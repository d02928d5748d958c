// SPDX-License-Identifier: Apache-2.0
#include "cvd/remap.hpp"

#include <cmath>
#include <map>
#include <set>

#include "cvd/error.hpp"

namespace cvd {

void RemapPolicy::validate() const {
    if (!(hue_step > 0.0)) throw ValidationError("hue step must be positive");
    if (!(max_rotation > 0.0) || max_rotation > 180.0) {
        throw ValidationError("max rotation must be in (0, 180] degrees");
    }
    if (max_passes < 1) throw ValidationError("max passes must be at least 1");
    if (lightness_steps.empty()) throw ValidationError("lightness steps must not be empty");
}

namespace {

const ColorToken& find_token(std::span<const ColorToken> tokens, const std::string& id) {
    for (const auto& t : tokens) {
        if (t.id == id) return t;
    }
    throw ValidationError("unknown token id \"" + id + "\"");
}

std::size_t degree(std::span<const AdjacencyPair> adjacency, const std::string& id) {
    std::size_t n = 0;
    for (const auto& p : adjacency) {
        if (p.a == id || p.b == id) ++n;
    }
    return n;
}

}  // namespace

std::string choose_victim(const AdjacencyPair& pair, std::span<const ColorToken> tokens,
                          std::span<const AdjacencyPair> adjacency) {
    const ColorToken& a = find_token(tokens, pair.a);
    const ColorToken& b = find_token(tokens, pair.b);
    if (a.weight != b.weight) return a.weight < b.weight ? a.id : b.id;

    const std::size_t da = degree(adjacency, a.id);
    const std::size_t db = degree(adjacency, b.id);
    if (da != db) return da < db ? a.id : b.id;

    const std::string ha = to_hex(a.color);
    const std::string hb = to_hex(b.color);
    if (ha != hb) return ha > hb ? a.id : b.id;
    return a.id > b.id ? a.id : b.id;
}

std::vector<Candidate> candidate_colors(Srgb8 c, const RemapPolicy& policy) {
    policy.validate();
    const Hsl base = rgb_to_hsl(c);
    const int steps = static_cast<int>(std::floor(policy.max_rotation / policy.hue_step + 1e-9));

    std::set<Srgb8> seen{c};
    std::vector<Candidate> out;
    for (double offset : policy.lightness_steps) {
        const double lightness = std::clamp(base.l + offset, 0.0, 1.0);
        for (int k = 1; k <= steps; ++k) {
            for (double sign : {1.0, -1.0}) {
                const double rotation = sign * k * policy.hue_step;
                const Srgb8 color = quantize(hsl_to_rgb({base.h + rotation, base.s, lightness}));
                if (seen.insert(color).second) out.push_back({color, rotation, offset});
            }
        }
    }
    return out;
}

bool candidate_acceptable(Srgb8 color, const std::string& victim,
                          std::span<const ColorToken> tokens,
                          std::span<const AdjacencyPair> adjacency, DichromacySet kinds,
                          const ConflictThresholds& thresholds) {
    for (const auto& t : tokens) {
        if (t.id != victim && t.color == color) return false;
    }
    for (const auto& p : adjacency) {
        if (p.a != victim && p.b != victim) continue;
        const Srgb8 other = find_token(tokens, p.a == victim ? p.b : p.a).color;
        const PairScore s = pair_score(color, other, kinds);
        if (s.de_normal < thresholds.distinct_normal) return false;
        for (auto k : kinds.members()) {
            if (*s.de_sim[static_cast<std::size_t>(k)] < thresholds.confusable_sim) return false;
        }
    }
    return true;
}

RemapPlan resolve(std::span<const ColorToken> tokens, std::span<const AdjacencyPair> adjacency,
                  DichromacySet kinds, const ConflictThresholds& thresholds,
                  const RemapPolicy& policy, bool complete_graph) {
    policy.validate();
    thresholds.validate();
    if (kinds.empty()) throw ValidationError("resolve: no dichromacy kinds requested");

    std::vector<AdjacencyPair> edges(adjacency.begin(), adjacency.end());
    if (edges.empty() && complete_graph) edges = complete_adjacency(tokens);
    validate_graph(tokens, edges);

    std::vector<ColorToken> working(tokens.begin(), tokens.end());
    std::map<std::string, std::size_t> entry_of;
    RemapPlan plan;

    for (int pass = 0; pass < policy.max_passes; ++pass) {
        const auto conflicts = detect_conflicts(working, edges, kinds, thresholds);
        if (conflicts.empty()) break;

        bool changed = false;
        for (const auto& conflict : conflicts) {
            const Srgb8 ca = find_token(working, conflict.pair.a).color;
            const Srgb8 cb = find_token(working, conflict.pair.b).color;
            if (!classify(conflict.pair, pair_score(ca, cb, kinds), kinds, thresholds)) continue;

            const std::string victim = choose_victim(conflict.pair, working, edges);
            const Srgb8 original = find_token(tokens, victim).color;
            for (const Candidate& cand : candidate_colors(original, policy)) {
                if (!candidate_acceptable(cand.color, victim, working, edges, kinds, thresholds)) {
                    continue;
                }
                for (auto& t : working) {
                    if (t.id == victim) t.color = cand.color;
                }
                RemapEntry entry{victim, original, cand.color, cand.rotation, cand.lightness_offset};
                if (auto it = entry_of.find(victim); it != entry_of.end()) {
                    plan.entries[it->second] = entry;
                } else {
                    entry_of.emplace(victim, plan.entries.size());
                    plan.entries.push_back(entry);
                }
                changed = true;
                break;
            }
        }
        if (!changed) break;
    }

    plan.unresolved = detect_conflicts(working, edges, kinds, thresholds);
    return plan;
}

std::vector<ColorToken> apply_plan(std::span<const ColorToken> tokens, const RemapPlan& plan) {
    std::vector<ColorToken> out(tokens.begin(), tokens.end());
    for (const auto& e : plan.entries) {
        for (auto& t : out) {
            if (t.id == e.id) t.color = e.replacement;
        }
    }
    return out;
}

}  // namespace cvd
