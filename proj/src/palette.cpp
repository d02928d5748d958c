// SPDX-License-Identifier: Apache-2.0
#include "cvd/palette.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>

#include "cvd/error.hpp"

namespace cvd {

using json = nlohmann::json;

namespace {

// Byte offset of every value in an already-validated JSON text, keyed by JSON pointer.
class Locator {
public:
    explicit Locator(std::string_view text) : text_(text) { walk(""); }

    std::size_t line_of(const std::string& pointer) const {
        auto it = offsets_.find(pointer);
        const std::size_t offset = it == offsets_.end() ? 0 : it->second;
        return 1 + static_cast<std::size_t>(
                       std::count(text_.begin(), text_.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\n' ||
                                       text_[pos_] == '\r' || text_[pos_] == '\t')) {
            ++pos_;
        }
    }

    std::string read_string() {
        std::string out;
        ++pos_;  // opening quote
        while (pos_ < text_.size() && text_[pos_] != '"') {
            if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
            out += text_[pos_++];
        }
        ++pos_;
        return out;
    }

    static std::string escape(const std::string& key) {
        std::string out;
        for (char ch : key) {
            if (ch == '~') out += "~0";
            else if (ch == '/') out += "~1";
            else out += ch;
        }
        return out;
    }

    void walk(const std::string& pointer) {
        skip_ws();
        if (pos_ >= text_.size()) return;
        offsets_.emplace(pointer, pos_);
        const char ch = text_[pos_];
        if (ch == '{') {
            ++pos_;
            for (;;) {
                skip_ws();
                if (pos_ >= text_.size() || text_[pos_] == '}') break;
                if (text_[pos_] == ',') { ++pos_; continue; }
                const std::string key = read_string();
                skip_ws();
                ++pos_;  // ':'
                walk(pointer + "/" + escape(key));
            }
            ++pos_;
        } else if (ch == '[') {
            ++pos_;
            for (std::size_t i = 0;; ++i) {
                skip_ws();
                if (pos_ >= text_.size() || text_[pos_] == ']') break;
                if (text_[pos_] == ',') { ++pos_; --i; continue; }
                walk(pointer + "/" + std::to_string(i));
            }
            ++pos_;
        } else if (ch == '"') {
            read_string();
        } else {
            while (pos_ < text_.size() && std::string_view(",]} \n\r\t").find(text_[pos_]) == std::string_view::npos) {
                ++pos_;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::map<std::string, std::size_t> offsets_;
};

class Checker {
public:
    Checker(std::string_view text, std::string_view source) : locator_(text), source_(source) {}

    [[noreturn]] void fail(const std::string& pointer, const std::string& message) const {
        throw ValidationError(std::string(source_) + ":" + std::to_string(locator_.line_of(pointer)) +
                              ": " + (pointer.empty() ? "/" : pointer) + ": " + message);
    }

private:
    Locator locator_;
    std::string_view source_;
};

std::optional<TokenRole> parse_role(const std::string& s) {
    if (s == "text") return TokenRole::Text;
    if (s == "background") return TokenRole::Background;
    if (s == "decoration") return TokenRole::Decoration;
    return std::nullopt;
}

std::optional<Relation> parse_relation(const std::string& s) {
    if (s == "neighbors") return Relation::Neighbors;
    if (s == "text_on_background") return Relation::TextOnBackground;
    return std::nullopt;
}

}  // namespace

std::vector<AdjacencyPair> PaletteDoc::effective_adjacency() const {
    if (adjacency) return *adjacency;
    if (complete_graph) return complete_adjacency(colors);
    return {};
}

PaletteDoc parse_palette(std::string_view text, std::string_view source) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        const std::size_t offset = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
        const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n');
        throw ValidationError(std::string(source) + ":" + std::to_string(line) + ": malformed JSON: " + e.what());
    }

    const Checker check(text, source);
    if (!root.is_object()) check.fail("", "palette must be a JSON object");
    if (!root.contains("colors")) check.fail("", "missing \"colors\"");
    const json& colors = root["colors"];
    if (!colors.is_array()) check.fail("/colors", "\"colors\" must be an array");

    PaletteDoc doc;
    std::set<std::string> ids;
    for (std::size_t i = 0; i < colors.size(); ++i) {
        const std::string at = "/colors/" + std::to_string(i);
        const json& entry = colors[i];
        if (!entry.is_object()) check.fail(at, "colour entry must be an object");

        ColorToken token;
        if (!entry.contains("id") || !entry["id"].is_string() || entry["id"].get<std::string>().empty()) {
            check.fail(at, "\"id\" must be a non-empty string");
        }
        token.id = entry["id"].get<std::string>();
        if (!ids.insert(token.id).second) check.fail(at + "/id", "duplicate id \"" + token.id + "\"");

        if (!entry.contains("hex") || !entry["hex"].is_string()) check.fail(at, "\"hex\" must be a string");
        const auto hex = entry["hex"].get<std::string>();
        const auto color = parse_hex(hex);
        if (!color) check.fail(at + "/hex", "bad hex colour \"" + hex + "\" (expected #rrggbb)");
        token.color = *color;

        if (entry.contains("role")) {
            const json& role = entry["role"];
            const auto parsed = role.is_string() ? parse_role(role.get<std::string>()) : std::nullopt;
            if (!parsed) check.fail(at + "/role", "role must be \"text\", \"background\" or \"decoration\"");
            token.role = *parsed;
        }
        if (entry.contains("weight")) {
            const json& weight = entry["weight"];
            if (!weight.is_number_integer() || weight.get<long long>() < 1 ||
                weight.get<long long>() > std::numeric_limits<unsigned>::max()) {
                check.fail(at + "/weight", "weight must be a positive integer");
            }
            token.weight = weight.get<unsigned>();
        }
        doc.colors.push_back(std::move(token));
    }

    if (root.contains("adjacency")) {
        const json& adjacency = root["adjacency"];
        if (!adjacency.is_array()) check.fail("/adjacency", "\"adjacency\" must be an array");
        std::vector<AdjacencyPair> pairs;
        for (std::size_t i = 0; i < adjacency.size(); ++i) {
            const std::string at = "/adjacency/" + std::to_string(i);
            const json& p = adjacency[i];
            if (!p.is_array() || p.size() < 2 || p.size() > 3 || !p[0].is_string() || !p[1].is_string()) {
                check.fail(at, "adjacency entry must be [idA, idB] or [idA, idB, relation]");
            }
            AdjacencyPair pair{p[0].get<std::string>(), p[1].get<std::string>(), Relation::Neighbors};
            for (int side = 0; side < 2; ++side) {
                const std::string& id = side == 0 ? pair.a : pair.b;
                if (!ids.contains(id)) check.fail(at + "/" + std::to_string(side), "unknown id \"" + id + "\"");
            }
            if (pair.a == pair.b) check.fail(at, "pair joins \"" + pair.a + "\" with itself");
            if (p.size() == 3) {
                const auto rel = p[2].is_string() ? parse_relation(p[2].get<std::string>()) : std::nullopt;
                if (!rel) check.fail(at + "/2", "relation must be \"neighbors\" or \"text_on_background\"");
                pair.relation = *rel;
            }
            pairs.push_back(std::move(pair));
        }
        doc.adjacency = std::move(pairs);
        doc.complete_graph = false;
    }
    return doc;
}

std::string serialize_palette(const PaletteDoc& doc) {
    nlohmann::ordered_json root;
    root["colors"] = nlohmann::ordered_json::array();
    for (const auto& t : doc.colors) {
        nlohmann::ordered_json entry;
        entry["id"] = t.id;
        entry["hex"] = to_hex(t.color);
        entry["role"] = std::string(to_string(t.role));
        entry["weight"] = t.weight;
        root["colors"].push_back(std::move(entry));
    }
    if (doc.adjacency) {
        root["adjacency"] = nlohmann::ordered_json::array();
        for (const auto& p : *doc.adjacency) {
            auto pair = nlohmann::ordered_json::array({p.a, p.b});
            if (p.relation != Relation::Neighbors) pair.push_back(std::string(to_string(p.relation)));
            root["adjacency"].push_back(std::move(pair));
        }
    }
    return root.dump(2) + "\n";
}

}  // namespace cvd
