// SPDX-License-Identifier: Apache-2.0
#include "cvd/simulate.hpp"

#include <cctype>
#include <string>

#include "cvd/constants.hpp"

namespace cvd {

namespace c = constants;

std::string_view short_name(Dichromacy kind) {
    switch (kind) {
        case Dichromacy::Protanopia: return "protan";
        case Dichromacy::Deuteranopia: return "deutan";
        case Dichromacy::Tritanopia: return "tritan";
    }
    return "unknown";
}

std::optional<Dichromacy> parse_dichromacy(std::string_view text) {
    std::string lower;
    for (char ch : text) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (lower == "protan" || lower == "protanopia") return Dichromacy::Protanopia;
    if (lower == "deutan" || lower == "deuteranopia") return Dichromacy::Deuteranopia;
    if (lower == "tritan" || lower == "tritanopia") return Dichromacy::Tritanopia;
    return std::nullopt;
}

std::vector<Dichromacy> DichromacySet::members() const {
    std::vector<Dichromacy> out;
    for (auto k : kAllDichromacies) {
        if (contains(k)) out.push_back(k);
    }
    return out;
}

SimulationMatrix simulation_matrix(Dichromacy kind) {
    switch (kind) {
        case Dichromacy::Protanopia:
            return {kind, Mat3{{0, c::kProtanFromM, c::kProtanFromS,
                                0, 1, 0,
                                0, 0, 1}}};
        case Dichromacy::Deuteranopia:
            return {kind, Mat3{{1, 0, 0,
                                c::kDeutanFromL, 0, c::kDeutanFromS,
                                0, 0, 1}}};
        case Dichromacy::Tritanopia:
            return {kind, Mat3{{1, 0, 0,
                                0, 1, 0,
                                c::kTritanFromL, c::kTritanFromM, 0}}};
    }
    return {kind, Mat3::identity()};
}

Lms project(Lms lms, Dichromacy kind) {
    return Lms::from(simulation_matrix(kind).matrix * lms.vec());
}

Srgb8 simulate_color(Srgb8 s, Dichromacy kind) {
    return encode_srgb(lms_to_rgb(project(rgb_to_lms(decode_srgb(s)), kind)));
}

}  // namespace cvd
