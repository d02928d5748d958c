// SPDX-License-Identifier: Apache-2.0
#include "cvd/conflict.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "cvd/error.hpp"

namespace cvd {

std::string_view to_string(TokenRole role) {
    switch (role) {
        case TokenRole::Text: return "text";
        case TokenRole::Background: return "background";
        case TokenRole::Decoration: return "decoration";
    }
    return "decoration";
}

std::string_view to_string(Relation relation) {
    return relation == Relation::TextOnBackground ? "text_on_background" : "neighbors";
}

void ConflictThresholds::validate() const {
    if (!(distinct_normal > 0.0) || !(confusable_sim > 0.0)) {
        throw ValidationError("conflict thresholds must be strictly positive");
    }
}

namespace {

struct Appearance {
    LabColor normal;
    std::array<LabColor, 3> simulated;
};

Appearance appearance(Srgb8 c, DichromacySet kinds) {
    Appearance a{srgb_to_lab(c), {}};
    for (auto k : kinds.members()) {
        a.simulated[static_cast<std::size_t>(k)] = srgb_to_lab(simulate_color(c, k));
    }
    return a;
}

PairScore score(const Appearance& a, const Appearance& b, DichromacySet kinds) {
    PairScore s;
    s.de_normal = delta_e(a.normal, b.normal);
    for (auto k : kinds.members()) {
        const auto i = static_cast<std::size_t>(k);
        s.de_sim[i] = delta_e(a.simulated[i], b.simulated[i]);
    }
    return s;
}

}  // namespace

PairScore pair_score(Srgb8 a, Srgb8 b, DichromacySet kinds) {
    if (kinds.empty()) throw ValidationError("pair_score: no dichromacy kinds requested");
    return score(appearance(a, kinds), appearance(b, kinds), kinds);
}

std::vector<AdjacencyPair> complete_adjacency(std::span<const ColorToken> tokens) {
    std::vector<AdjacencyPair> out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        for (std::size_t j = i + 1; j < tokens.size(); ++j) {
            out.push_back({tokens[i].id, tokens[j].id, Relation::Neighbors});
        }
    }
    return out;
}

void validate_graph(std::span<const ColorToken> tokens, std::span<const AdjacencyPair> adjacency) {
    std::set<std::string_view> ids;
    for (const auto& t : tokens) {
        if (!ids.insert(t.id).second) throw ValidationError("duplicate token id \"" + t.id + "\"");
        if (t.weight < 1) throw ValidationError("token \"" + t.id + "\" has weight 0");
    }
    for (const auto& p : adjacency) {
        for (const auto* id : {&p.a, &p.b}) {
            if (!ids.contains(*id)) throw ValidationError("unknown token id \"" + *id + "\" in adjacency");
        }
        if (p.a == p.b) throw ValidationError("adjacency pairs token \"" + p.a + "\" with itself");
    }
}

std::optional<ConflictReport> classify(const AdjacencyPair& pair, const PairScore& s,
                                       DichromacySet kinds, const ConflictThresholds& thresholds) {
    if (s.de_normal < thresholds.distinct_normal) return std::nullopt;
    ConflictReport r{pair, s.de_normal, s.de_sim, {}, 0.0};
    for (auto k : kinds.members()) {
        const auto& sim = s.de_sim[static_cast<std::size_t>(k)];
        if (sim && *sim < thresholds.confusable_sim) {
            r.conflicting_kinds.insert(k);
            r.severity = std::max(r.severity, (thresholds.confusable_sim - *sim) / thresholds.confusable_sim);
        }
    }
    if (r.conflicting_kinds.empty()) return std::nullopt;
    return r;
}

std::vector<ConflictReport> detect_conflicts(std::span<const ColorToken> tokens,
                                             std::span<const AdjacencyPair> adjacency,
                                             DichromacySet kinds,
                                             const ConflictThresholds& thresholds,
                                             bool complete_graph) {
    thresholds.validate();
    if (kinds.empty()) throw ValidationError("detect_conflicts: no dichromacy kinds requested");

    std::vector<AdjacencyPair> all;
    if (adjacency.empty() && complete_graph) {
        all = complete_adjacency(tokens);
        adjacency = all;
    }
    validate_graph(tokens, adjacency);

    std::map<std::string_view, Appearance> looks;
    for (const auto& t : tokens) looks.emplace(t.id, appearance(t.color, kinds));

    std::set<std::pair<std::string_view, std::string_view>> seen;
    std::vector<ConflictReport> out;
    for (const auto& p : adjacency) {
        const std::string_view a = p.a;
        const std::string_view b = p.b;
        const auto key = a < b ? std::pair{a, b} : std::pair{b, a};
        if (!seen.insert(key).second) continue;
        auto report = classify(p, score(looks.at(p.a), looks.at(p.b), kinds), kinds, thresholds);
        if (report) out.push_back(std::move(*report));
    }

    std::stable_sort(out.begin(), out.end(), [](const ConflictReport& x, const ConflictReport& y) {
        if (x.severity != y.severity) return x.severity > y.severity;
        return std::tie(x.pair.a, x.pair.b) < std::tie(y.pair.a, y.pair.b);
    });
    return out;
}

}  // namespace cvd
