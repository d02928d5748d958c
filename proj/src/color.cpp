// SPDX-License-Identifier: Apache-2.0
#include "cvd/color.hpp"

#include <cmath>

#include "cvd/constants.hpp"

namespace cvd {

namespace c = constants;

long round_half_away(double x) { return std::lround(x); }

std::uint8_t quantize_unit(double x) {
    const double clamped = std::clamp(x, 0.0, 1.0);
    return static_cast<std::uint8_t>(round_half_away(clamped * 255.0));
}

namespace {

double decode_channel(std::uint8_t v) {
    const double x = v / 255.0;
    if (x <= c::kSrgbDecodeKnee) return x / c::kSrgbLinearSlope;
    return std::pow((x + c::kSrgbOffset) / (1.0 + c::kSrgbOffset), c::kSrgbGamma);
}

std::uint8_t encode_channel(double x) {
    double y;
    if (x <= c::kSrgbEncodeKnee) {
        y = x * c::kSrgbLinearSlope;
    } else {
        y = (1.0 + c::kSrgbOffset) * std::pow(x, 1.0 / c::kSrgbGamma) - c::kSrgbOffset;
    }
    return quantize_unit(y);
}

double lab_f(double t) {
    constexpr double delta = 6.0 / 29.0;
    if (t > delta * delta * delta) return std::cbrt(t);
    return t / (3.0 * delta * delta) + 4.0 / 29.0;
}

}  // namespace

LinearRgb decode_srgb(Srgb8 s) {
    return {decode_channel(s.r), decode_channel(s.g), decode_channel(s.b)};
}

Srgb8 encode_srgb(LinearRgb lin) {
    return {encode_channel(lin.r()), encode_channel(lin.g()), encode_channel(lin.b())};
}

Lms rgb_to_lms(LinearRgb lin) { return Lms::from(c::kRgbToLms * lin.vec()); }

LinearRgb lms_to_rgb(Lms lms) { return LinearRgb(c::kLmsToRgb * lms.vec()); }

EncodedRgb normalize(Srgb8 s) { return {s.r / 255.0, s.g / 255.0, s.b / 255.0}; }

Srgb8 quantize(EncodedRgb e) { return {quantize_unit(e.r), quantize_unit(e.g), quantize_unit(e.b)}; }

Hsl normalized(Hsl x) {
    double h = std::fmod(x.h, 360.0);
    if (h < 0.0) h += 360.0;
    if (h >= 360.0) h = 0.0;
    Hsl out{h, std::clamp(x.s, 0.0, 1.0), std::clamp(x.l, 0.0, 1.0)};
    if (out.s == 0.0) out.h = 0.0;
    return out;
}

Hsl rgb_to_hsl(EncodedRgb e) {
    const double hi = std::max({e.r, e.g, e.b});
    const double lo = std::min({e.r, e.g, e.b});
    const double lightness = 0.5 * (hi + lo);
    if (hi == lo) return {0.0, 0.0, lightness};

    const double chroma = hi - lo;
    const double saturation = chroma / (1.0 - std::abs(1.0 - (hi + lo)));

    double hue;
    if (hi == e.r) {
        hue = 60.0 * (e.g - e.b) / chroma + (e.g >= e.b ? 0.0 : 360.0);
    } else if (hi == e.g) {
        hue = 60.0 * (e.b - e.r) / chroma + 120.0;
    } else {
        hue = 60.0 * (e.r - e.g) / chroma + 240.0;
    }
    if (hue >= 360.0) hue -= 360.0;
    return {hue, std::min(saturation, 1.0), lightness};
}

EncodedRgb hsl_to_rgb(Hsl in) {
    const Hsl x = normalized(in);
    const double chroma = (1.0 - std::abs(2.0 * x.l - 1.0)) * x.s;
    const double sector = x.h / 60.0;
    const double second = chroma * (1.0 - std::abs(std::fmod(sector, 2.0) - 1.0));
    const double m = x.l - chroma / 2.0;

    double r = 0, g = 0, b = 0;
    switch (static_cast<int>(sector)) {
        case 0: r = chroma; g = second; break;
        case 1: r = second; g = chroma; break;
        case 2: g = chroma; b = second; break;
        case 3: g = second; b = chroma; break;
        case 4: r = second; b = chroma; break;
        default: r = chroma; b = second; break;
    }
    return {r + m, g + m, b + m};
}

LabColor rgb_to_lab(LinearRgb lin) {
    const Vec3 xyz = c::kRgbToXyz * lin.vec();
    const double fx = lab_f(xyz[0] / c::kWhiteXyz[0]);
    const double fy = lab_f(xyz[1] / c::kWhiteXyz[1]);
    const double fz = lab_f(xyz[2] / c::kWhiteXyz[2]);
    return {116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz)};
}

double delta_e(const LabColor& a, const LabColor& b) {
    const double dl = a.l_star - b.l_star;
    const double da = a.a_star - b.a_star;
    const double db = a.b_star - b.b_star;
    return std::sqrt(dl * dl + da * da + db * db);
}

std::string to_hex(Srgb8 c) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out = "#";
    for (std::uint8_t v : {c.r, c.g, c.b}) {
        out += kDigits[v >> 4];
        out += kDigits[v & 0xf];
    }
    return out;
}

namespace {

int hex_digit(char ch) {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
    return -1;
}

}  // namespace

std::optional<Srgb8> parse_hex(std::string_view text) {
    if (text.size() != 7 || text[0] != '#') return std::nullopt;
    std::uint8_t v[3];
    for (int i = 0; i < 3; ++i) {
        const int hi = hex_digit(text[1 + 2 * i]);
        const int lo = hex_digit(text[2 + 2 * i]);
        if (hi < 0 || lo < 0) return std::nullopt;
        v[i] = static_cast<std::uint8_t>(hi * 16 + lo);
    }
    return Srgb8{v[0], v[1], v[2]};
}

}  // namespace cvd
