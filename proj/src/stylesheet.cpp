// SPDX-License-Identifier: Apache-2.0
#include "cvd/stylesheet.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "cvd/error.hpp"

namespace cvd {

namespace {

struct NamedColor {
    std::string_view name;
    Srgb8 color;
};

constexpr std::array<NamedColor, 16> kNamedColors{{
    {"black", {0x00, 0x00, 0x00}},   {"silver", {0xc0, 0xc0, 0xc0}},
    {"gray", {0x80, 0x80, 0x80}},    {"white", {0xff, 0xff, 0xff}},
    {"maroon", {0x80, 0x00, 0x00}},  {"red", {0xff, 0x00, 0x00}},
    {"purple", {0x80, 0x00, 0x80}},  {"fuchsia", {0xff, 0x00, 0xff}},
    {"green", {0x00, 0x80, 0x00}},   {"lime", {0x00, 0xff, 0x00}},
    {"olive", {0x80, 0x80, 0x00}},   {"yellow", {0xff, 0xff, 0x00}},
    {"navy", {0x00, 0x00, 0x80}},    {"blue", {0x00, 0x00, 0xff}},
    {"teal", {0x00, 0x80, 0x80}},    {"aqua", {0x00, 0xff, 0xff}},
}};

// Properties whose identifiers are names, not colours ("font-family: Olive Sans").
constexpr std::array<std::string_view, 12> kNonColorProperties{
    "font-family", "font", "content", "animation", "animation-name", "transition",
    "transition-property", "grid-area", "grid-template-areas", "counter-reset",
    "counter-increment", "will-change"};

std::string lower(std::string_view s) {
    std::string out(s);
    for (char& ch : out) {
        if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
    }
    return out;
}

bool is_hex(char ch) {
    return (ch >= '0' && ch <= '9') || (ch >= 'a' && ch <= 'f') || (ch >= 'A' && ch <= 'F');
}

int hex_value(char ch) {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    return ch - 'A' + 10;
}

bool is_name_char(char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') ||
           ch == '-' || ch == '_' || static_cast<unsigned char>(ch) >= 0x80;
}

bool is_name_start(char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || ch == '-' || ch == '_' ||
           static_cast<unsigned char>(ch) >= 0x80;
}

bool is_space(char ch) { return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '\f'; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

std::optional<ParsedColor> parse_hex_literal(std::string_view s) {
    if (s.size() < 2 || s[0] != '#') return std::nullopt;
    const std::string_view digits = s.substr(1);
    if (!std::all_of(digits.begin(), digits.end(), is_hex)) return std::nullopt;
    auto pair = [&](std::size_t i) { return hex_value(digits[i]) * 16 + hex_value(digits[i + 1]); };
    auto single = [&](std::size_t i) { return hex_value(digits[i]) * 17; };
    ParsedColor out{};
    switch (digits.size()) {
        case 3:
        case 4:
            out.color = {static_cast<std::uint8_t>(single(0)), static_cast<std::uint8_t>(single(1)),
                         static_cast<std::uint8_t>(single(2))};
            if (digits.size() == 4) out.alpha = single(3) / 255.0;
            return out;
        case 6:
        case 8:
            out.color = {static_cast<std::uint8_t>(pair(0)), static_cast<std::uint8_t>(pair(2)),
                         static_cast<std::uint8_t>(pair(4))};
            if (digits.size() == 8) out.alpha = pair(6) / 255.0;
            return out;
        default:
            return std::nullopt;
    }
}

struct Arg {
    double value = 0.0;
    std::string unit;  // "", "%", "deg", ...
};

// Splits "a, b, c" / "a b c / d" into numeric arguments. Any non-numeric
// argument (var(), none, calc()) rejects the whole list.
std::optional<std::vector<Arg>> split_args(std::string_view body) {
    std::vector<Arg> args;
    std::size_t i = 0;
    int slashes = 0;
    while (i < body.size()) {
        const char ch = body[i];
        if (is_space(ch) || ch == ',') { ++i; continue; }
        if (ch == '/') {
            if (++slashes > 1 || args.size() != 3) return std::nullopt;
            ++i;
            continue;
        }
        const char* first = body.data() + i;
        const char* last = body.data() + body.size();
        if (*first == '+') ++first;
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc()) return std::nullopt;
        i = static_cast<std::size_t>(ptr - body.data());
        std::size_t unit_end = i;
        if (unit_end < body.size() && body[unit_end] == '%') {
            ++unit_end;
        } else {
            while (unit_end < body.size() && is_name_char(body[unit_end])) ++unit_end;
        }
        args.push_back({value, lower(body.substr(i, unit_end - i))});
        i = unit_end;
    }
    if (args.size() != 3 && args.size() != 4) return std::nullopt;
    return args;
}

std::optional<double> alpha_of(const Arg& a) {
    if (a.unit == "%") return std::clamp(a.value / 100.0, 0.0, 1.0);
    if (a.unit.empty()) return std::clamp(a.value, 0.0, 1.0);
    return std::nullopt;
}

std::optional<std::uint8_t> rgb_channel(const Arg& a) {
    if (a.unit == "%") return quantize_unit(a.value / 100.0);
    if (a.unit.empty()) return static_cast<std::uint8_t>(round_half_away(std::clamp(a.value, 0.0, 255.0)));
    return std::nullopt;
}

std::optional<double> hue_degrees(const Arg& a) {
    if (a.unit.empty() || a.unit == "deg") return a.value;
    if (a.unit == "rad") return a.value * 180.0 / std::numbers::pi;
    if (a.unit == "grad") return a.value * 0.9;
    if (a.unit == "turn") return a.value * 360.0;
    return std::nullopt;
}

std::optional<double> unit_fraction(const Arg& a) {
    if (a.unit == "%" || a.unit.empty()) return std::clamp(a.value / 100.0, 0.0, 1.0);
    return std::nullopt;
}

std::optional<ParsedColor> parse_function_literal(std::string_view s) {
    const auto open = s.find('(');
    if (open == std::string_view::npos || s.back() != ')') return std::nullopt;
    const std::string name = lower(s.substr(0, open));
    const auto args = split_args(s.substr(open + 1, s.size() - open - 2));
    if (!args) return std::nullopt;

    ParsedColor out{};
    if (args->size() == 4) {
        out.alpha = alpha_of((*args)[3]);
        if (!out.alpha) return std::nullopt;
    }
    if (name == "rgb" || name == "rgba") {
        const auto r = rgb_channel((*args)[0]);
        const auto g = rgb_channel((*args)[1]);
        const auto b = rgb_channel((*args)[2]);
        if (!r || !g || !b) return std::nullopt;
        out.color = {*r, *g, *b};
        return out;
    }
    if (name == "hsl" || name == "hsla") {
        const auto h = hue_degrees((*args)[0]);
        const auto sat = unit_fraction((*args)[1]);
        const auto light = unit_fraction((*args)[2]);
        if (!h || !sat || !light) return std::nullopt;
        out.color = quantize(hsl_to_rgb(normalized({*h, *sat, *light})));
        return out;
    }
    return std::nullopt;
}

bool is_color_function(std::string_view lname) {
    return lname == "rgb" || lname == "rgba" || lname == "hsl" || lname == "hsla";
}

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    ScanResult run() {
        items(0, "", 0, kNoBlock);
        return std::move(result_);
    }

private:
    static constexpr std::size_t kNoBlock = static_cast<std::size_t>(-1);

    [[noreturn]] void fail(const std::string& message, std::size_t offset) const {
        throw FormatError("stylesheet: byte " + std::to_string(offset) + ": " + message, offset);
    }

    // Returns the offset just past a comment starting at `at`.
    std::size_t skip_comment(std::size_t at) const {
        const auto close = text_.find("*/", at + 2);
        if (close == std::string_view::npos) fail("unterminated comment", at);
        return close + 2;
    }

    std::size_t skip_string(std::size_t at) const {
        const char quote = text_[at];
        for (std::size_t i = at + 1; i < text_.size(); ++i) {
            if (text_[i] == '\\') { ++i; continue; }
            if (text_[i] == quote) return i + 1;
        }
        fail("unterminated string", at);
    }

    bool comment_at(std::size_t i) const {
        return text_[i] == '/' && i + 1 < text_.size() && text_[i + 1] == '*';
    }

    // First of '{', ';', '}' at paren depth zero, or end of text.
    std::size_t find_terminator(std::size_t i) const {
        int parens = 0;
        while (i < text_.size()) {
            const char ch = text_[i];
            if (comment_at(i)) { i = skip_comment(i); continue; }
            if (ch == '"' || ch == '\'') { i = skip_string(i); continue; }
            if (ch == '\\') { i += 2; continue; }
            if (ch == '(' || ch == '[') ++parens;
            else if ((ch == ')' || ch == ']') && parens > 0) --parens;
            else if (parens == 0 && (ch == '{' || ch == ';' || ch == '}')) return i;
            ++i;
        }
        return text_.size();
    }

    std::string clean_selector(std::size_t from, std::size_t to) const {
        std::string out;
        bool pending_space = false;
        for (std::size_t i = from; i < to;) {
            if (comment_at(i)) { i = skip_comment(i); pending_space = true; continue; }
            if (is_space(text_[i])) { pending_space = true; ++i; continue; }
            if (pending_space && !out.empty()) out += ' ';
            pending_space = false;
            out += text_[i++];
        }
        return out;
    }

    // Parses the contents of a block (or the whole sheet at depth 0) up to its closing brace.
    void items(int depth, const std::string& selector, std::size_t open_at, std::size_t block) {
        while (true) {
            while (pos_ < text_.size()) {
                if (is_space(text_[pos_])) ++pos_;
                else if (comment_at(pos_)) pos_ = skip_comment(pos_);
                else break;
            }
            if (pos_ >= text_.size()) {
                if (depth > 0) fail("unclosed block", open_at);
                return;
            }
            const char ch = text_[pos_];
            if (ch == '}') {
                if (depth == 0) fail("unmatched '}'", pos_);
                ++pos_;
                return;
            }
            if (ch == ';') { ++pos_; continue; }

            const std::size_t start = pos_;
            const std::size_t term = find_terminator(start);
            if (term < text_.size() && text_[term] == '{') {
                const std::string prelude = clean_selector(start, term);
                pos_ = term + 1;
                items(depth + 1, prelude, term, next_block_++);
                continue;
            }
            if (depth > 0) declaration(start, term, selector, block);
            pos_ = term < text_.size() && text_[term] == ';' ? term + 1 : term;
        }
    }

    void declaration(std::size_t from, std::size_t to, const std::string& selector, std::size_t block) {
        std::size_t colon = from;
        int parens = 0;
        for (; colon < to; ++colon) {
            const char ch = text_[colon];
            if (comment_at(colon)) { colon = skip_comment(colon) - 1; continue; }
            if (ch == '"' || ch == '\'') { colon = skip_string(colon) - 1; continue; }
            if (ch == '(') ++parens;
            else if (ch == ')' && parens > 0) --parens;
            else if (ch == ':' && parens == 0) break;
        }
        if (colon >= to) return;
        const std::string property(trim(text_.substr(from, colon - from)));
        if (property.empty()) return;
        const std::string lprop = lower(property);
        const bool names_allowed =
            std::find(kNonColorProperties.begin(), kNonColorProperties.end(), lprop) == kNonColorProperties.end();
        value(colon + 1, to, selector, property, block, names_allowed);
    }

    std::size_t matching_paren(std::size_t open, std::size_t limit) const {
        int depth = 0;
        for (std::size_t i = open; i < limit;) {
            const char ch = text_[i];
            if (comment_at(i)) { i = skip_comment(i); continue; }
            if (ch == '"' || ch == '\'') { i = skip_string(i); continue; }
            if (ch == '(') ++depth;
            if (ch == ')' && --depth == 0) return i;
            ++i;
        }
        return std::string_view::npos;
    }

    void record(std::size_t from, std::size_t to, const ParsedColor& c, const std::string& selector,
                const std::string& property, std::size_t block) {
        result_.occurrences.push_back({selector, property, {from, to}, c.color, c.alpha, block});
    }

    void warn(std::size_t offset, std::string message) {
        result_.warnings.push_back({offset, std::move(message)});
    }

    void value(std::size_t from, std::size_t to, const std::string& selector,
               const std::string& property, std::size_t block, bool names_allowed) {
        std::size_t i = from;
        while (i < to) {
            const char ch = text_[i];
            if (comment_at(i)) { i = skip_comment(i); continue; }
            if (ch == '"' || ch == '\'') { i = skip_string(i); continue; }
            if (ch == '\\') { i += 2; continue; }
            if (ch == '#') {
                std::size_t end = i + 1;
                while (end < to && is_name_char(text_[end])) ++end;
                if (auto c = parse_hex_literal(text_.substr(i, end - i))) {
                    record(i, end, *c, selector, property, block);
                }
                i = end;
                continue;
            }
            if (ch >= '0' && ch <= '9') {
                while (i < to && (is_name_char(text_[i]) || text_[i] == '.' || text_[i] == '%')) ++i;
                continue;
            }
            if (is_name_start(ch)) {
                std::size_t end = i;
                while (end < to && is_name_char(text_[end])) ++end;
                const std::string name = lower(text_.substr(i, end - i));
                if (end < to && text_[end] == '(') {
                    if (name == "url") {
                        const auto close = text_.find(')', end);
                        i = close == std::string_view::npos || close >= to ? to : close + 1;
                        continue;
                    }
                    if (is_color_function(name)) {
                        const auto close = matching_paren(end, to);
                        if (close == std::string_view::npos) {
                            warn(i, "unterminated " + name + "() call");
                            i = to;
                            continue;
                        }
                        const std::string_view literal = text_.substr(i, close + 1 - i);
                        if (auto c = parse_function_literal(literal)) {
                            record(i, close + 1, *c, selector, property, block);
                        } else {
                            warn(i, "skipped " + name + "() with unsupported arguments: " + std::string(literal));
                        }
                        i = close + 1;
                        continue;
                    }
                    i = end + 1;  // scan inside other functions
                    continue;
                }
                if (names_allowed) {
                    for (const auto& named : kNamedColors) {
                        if (named.name == name) {
                            record(i, end, {named.color, std::nullopt}, selector, property, block);
                            break;
                        }
                    }
                }
                i = end;
                continue;
            }
            ++i;
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t next_block_ = 0;
    ScanResult result_;
};

TokenRole role_of(std::string_view property) {
    const std::string p = lower(property);
    if (p == "color") return TokenRole::Text;
    if (p == "background" || p == "background-color") return TokenRole::Background;
    return TokenRole::Decoration;
}

}  // namespace

std::optional<ParsedColor> parse_color_literal(std::string_view text) {
    text = trim(text);
    if (text.empty()) return std::nullopt;
    if (text[0] == '#') return parse_hex_literal(text);
    if (text.find('(') != std::string_view::npos) return parse_function_literal(text);
    const std::string name = lower(text);
    for (const auto& named : kNamedColors) {
        if (named.name == name) return ParsedColor{named.color, std::nullopt};
    }
    return std::nullopt;
}

ScanResult scan_stylesheet(std::string_view text) { return Scanner(text).run(); }

std::string style_token_id(Srgb8 c) { return "c_" + to_hex(c).substr(1); }

StyleGraph derive_adjacency(const std::vector<StyleOccurrence>& occurrences) {
    StyleGraph graph;
    std::map<Srgb8, std::size_t> index;
    for (const auto& occ : occurrences) {
        auto [it, inserted] = index.emplace(occ.color, graph.tokens.size());
        if (inserted) {
            graph.tokens.push_back({style_token_id(occ.color), occ.color, role_of(occ.property), 1});
        } else {
            ++graph.tokens[it->second].weight;
        }
    }

    // Last foreground and last background per block, blocks in source order.
    std::map<std::size_t, std::pair<const StyleOccurrence*, const StyleOccurrence*>> blocks;
    for (const auto& occ : occurrences) {
        auto& slot = blocks[occ.block];
        const TokenRole role = role_of(occ.property);
        if (role == TokenRole::Text) slot.first = &occ;
        if (role == TokenRole::Background) slot.second = &occ;
    }
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& [block, slot] : blocks) {
        const auto [fg, bg] = slot;
        if (fg == nullptr || bg == nullptr || fg->color == bg->color) continue;
        std::string a = style_token_id(fg->color);
        std::string b = style_token_id(bg->color);
        if (!seen.insert(std::minmax(a, b)).second) continue;
        graph.adjacency.push_back({std::move(a), std::move(b), Relation::TextOnBackground});
    }
    return graph;
}

std::string rewrite_stylesheet(std::string_view text, const std::vector<StyleOccurrence>& occurrences,
                               const RemapPlan& plan) {
    std::map<Srgb8, Srgb8> replacement;
    for (const auto& e : plan.entries) replacement.emplace(e.original, e.replacement);

    std::string out;
    out.reserve(text.size());
    std::size_t cursor = 0;
    for (const auto& occ : occurrences) {
        if (occ.span.start < cursor || occ.span.end < occ.span.start || occ.span.end > text.size()) {
            throw InternalError("rewrite: occurrence span [" + std::to_string(occ.span.start) + ", " +
                                std::to_string(occ.span.end) + ") is out of order or out of bounds");
        }
        const std::string_view literal = text.substr(occ.span.start, occ.span.end - occ.span.start);
        const auto parsed = parse_color_literal(literal);
        if (!parsed || parsed->color != occ.color) {
            throw InternalError("rewrite: text at byte " + std::to_string(occ.span.start) +
                                " does not match the scanned colour");
        }
        const auto it = replacement.find(occ.color);
        if (it == replacement.end()) continue;

        out.append(text.substr(cursor, occ.span.start - cursor));
        out += to_hex(it->second);
        if (occ.alpha) {
            static constexpr char kDigits[] = "0123456789abcdef";
            const auto a = static_cast<unsigned>(round_half_away(std::clamp(*occ.alpha, 0.0, 1.0) * 255.0));
            out += kDigits[a >> 4];
            out += kDigits[a & 0xf];
        }
        cursor = occ.span.end;
    }
    out.append(text.substr(cursor));
    return out;
}

}  // namespace cvd
