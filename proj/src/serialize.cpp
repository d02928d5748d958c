// SPDX-License-Identifier: Apache-2.0
#include "cvd/serialize.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>

namespace cvd {

namespace {

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

std::string kinds_array(DichromacySet kinds) {
    std::string out = "[";
    bool first = true;
    for (auto k : kinds.members()) {
        if (!first) out += ", ";
        out += quoted(std::string(short_name(k)));
        first = false;
    }
    return out + "]";
}

void append_report(std::string& out, const ConflictReport& r, const std::string& indent) {
    const std::string in = indent + "  ";
    out += indent + "{\n";
    out += in + "\"pair\": {\"a\": " + quoted(r.pair.a) + ", \"b\": " + quoted(r.pair.b) +
           ", \"relation\": " + quoted(std::string(to_string(r.pair.relation))) + "},\n";
    out += in + "\"de_normal\": " + format_real(r.de_normal) + ",\n";
    out += in + "\"de_sim\": {";
    bool first = true;
    for (auto k : kAllDichromacies) {
        const auto& v = r.de_sim[static_cast<std::size_t>(k)];
        if (!first) out += ", ";
        out += quoted(std::string(short_name(k))) + ": " + (v ? format_real(*v) : "null");
        first = false;
    }
    out += "},\n";
    out += in + "\"conflicting_kinds\": " + kinds_array(r.conflicting_kinds) + ",\n";
    out += in + "\"severity\": " + format_real(r.severity) + "\n";
    out += indent + "}";
}

std::string reports_array(std::span<const ConflictReport> reports, const std::string& indent) {
    if (reports.empty()) return "[]";
    std::string out = "[\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        append_report(out, reports[i], indent + "  ");
        out += i + 1 < reports.size() ? ",\n" : "\n";
    }
    return out + indent + "]";
}

}  // namespace

std::string format_real(double x) {
    if (!std::isfinite(x)) return "null";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    std::string s = buf;
    if (s == "-0.00") s = "0.00";
    return s;
}

std::string conflicts_to_json(std::span<const ConflictReport> reports) {
    return reports_array(reports, "") + "\n";
}

std::string plan_to_json(const RemapPlan& plan) {
    std::string out = "{\n  \"entries\": ";
    if (plan.entries.empty()) {
        out += "[]";
    } else {
        out += "[\n";
        for (std::size_t i = 0; i < plan.entries.size(); ++i) {
            const auto& e = plan.entries[i];
            out += "    {\"id\": " + quoted(e.id) + ", \"original\": " + quoted(to_hex(e.original)) +
                   ", \"replacement\": " + quoted(to_hex(e.replacement)) +
                   ", \"rotation\": " + format_real(e.rotation) +
                   ", \"lightness_offset\": " + format_real(e.lightness_offset) + "}";
            out += i + 1 < plan.entries.size() ? ",\n" : "\n";
        }
        out += "  ]";
    }
    out += ",\n  \"unresolved\": " + reports_array(plan.unresolved, "  ") + "\n}\n";
    return out;
}

std::string conflicts_to_text(std::span<const ConflictReport> reports) {
    if (reports.empty()) return "no conflicts\n";
    std::string out;
    char line[512];
    std::snprintf(line, sizeof line, "%-16s %-16s %-18s %8s %8s %8s %8s  %s\n", "a", "b", "relation",
                  "dE", "protan", "deutan", "tritan", "severity");
    out += line;
    for (const auto& r : reports) {
        auto sim = [&](Dichromacy k) {
            const auto& v = r.de_sim[static_cast<std::size_t>(k)];
            return v ? format_real(*v) : std::string("-");
        };
        std::snprintf(line, sizeof line, "%-16s %-16s %-18s %8s %8s %8s %8s  %s\n", r.pair.a.c_str(),
                      r.pair.b.c_str(), std::string(to_string(r.pair.relation)).c_str(),
                      format_real(r.de_normal).c_str(), sim(Dichromacy::Protanopia).c_str(),
                      sim(Dichromacy::Deuteranopia).c_str(), sim(Dichromacy::Tritanopia).c_str(),
                      format_real(r.severity).c_str());
        out += line;
    }
    return out;
}

}  // namespace cvd
