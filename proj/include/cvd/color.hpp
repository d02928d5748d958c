// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace cvd {

using Vec3 = std::array<double, 3>;

/// Row-major 3x3 matrix acting on column vectors.
struct Mat3 {
    std::array<double, 9> m{};

    constexpr double operator()(int row, int col) const { return m[row * 3 + col]; }
    constexpr double& operator()(int row, int col) { return m[row * 3 + col]; }

    static constexpr Mat3 identity() { return Mat3{{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }

    friend constexpr bool operator==(const Mat3&, const Mat3&) = default;
};

// Evaluation order is fixed as ((m0*x + m1*y) + m2*z); the SIMD kernels
// reproduce it exactly.
constexpr Vec3 operator*(const Mat3& a, const Vec3& v) {
    Vec3 out{};
    for (int r = 0; r < 3; ++r) {
        out[r] = a(r, 0) * v[0] + a(r, 1) * v[1] + a(r, 2) * v[2];
    }
    return out;
}

constexpr Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 out{};
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            out(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c) + a(r, 2) * b(2, c);
        }
    }
    return out;
}

constexpr double determinant(const Mat3& a) {
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

/// Adjugate inverse; caller guarantees a nonsingular matrix.
constexpr Mat3 inverse(const Mat3& a) {
    const double inv_det = 1.0 / determinant(a);
    Mat3 out{};
    out(0, 0) = (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) * inv_det;
    out(0, 1) = (a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2)) * inv_det;
    out(0, 2) = (a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1)) * inv_det;
    out(1, 0) = (a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2)) * inv_det;
    out(1, 1) = (a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0)) * inv_det;
    out(1, 2) = (a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2)) * inv_det;
    out(2, 0) = (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0)) * inv_det;
    out(2, 1) = (a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1)) * inv_det;
    out(2, 2) = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) * inv_det;
    return out;
}

/// Gamma-encoded 8-bit sRGB; the wire representation.
struct Srgb8 {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend constexpr auto operator<=>(const Srgb8&, const Srgb8&) = default;
};

/// Linear-light RGB. Channels are clamped to [0, 1] on construction.
class LinearRgb {
public:
    constexpr LinearRgb() = default;
    constexpr LinearRgb(double r, double g, double b)
        : r_(clamp01(r)), g_(clamp01(g)), b_(clamp01(b)) {}
    constexpr explicit LinearRgb(const Vec3& v) : LinearRgb(v[0], v[1], v[2]) {}

    constexpr double r() const { return r_; }
    constexpr double g() const { return g_; }
    constexpr double b() const { return b_; }
    constexpr Vec3 vec() const { return {r_, g_, b_}; }

    friend constexpr bool operator==(const LinearRgb&, const LinearRgb&) = default;

private:
    // NaN maps to 0 so that no out-of-range value can be constructed.
    static constexpr double clamp01(double x) { return x > 0.0 ? (x < 1.0 ? x : 1.0) : 0.0; }

    double r_ = 0.0;
    double g_ = 0.0;
    double b_ = 0.0;
};

/// Gamma-encoded RGB normalized to [0, 1] (channel / 255). HSL is defined over this.
struct EncodedRgb {
    double r = 0.0;
    double g = 0.0;
    double b = 0.0;
};

/// Cone responses. May go negative after projection.
struct Lms {
    double l = 0.0;
    double m = 0.0;
    double s = 0.0;

    constexpr Vec3 vec() const { return {l, m, s}; }
    static constexpr Lms from(const Vec3& v) { return {v[0], v[1], v[2]}; }
};

/// Hue in degrees [0, 360), saturation and lightness in [0, 1].
struct Hsl {
    double h = 0.0;
    double s = 0.0;
    double l = 0.0;
};

/// Wraps hue into [0, 360), clamps s and l, and zeroes the hue of achromatic colors.
Hsl normalized(Hsl c);

struct LabColor {
    double l_star = 0.0;
    double a_star = 0.0;
    double b_star = 0.0;
};

/// Round half away from zero. The only real-to-integer rounding rule in the project.
long round_half_away(double x);

/// Maps [0, 1] to an 8-bit code with clamping and round-half-away.
std::uint8_t quantize_unit(double x);

LinearRgb decode_srgb(Srgb8 c);
Srgb8 encode_srgb(LinearRgb c);

Lms rgb_to_lms(LinearRgb c);
LinearRgb lms_to_rgb(Lms c);

EncodedRgb normalize(Srgb8 c);
Srgb8 quantize(EncodedRgb c);

Hsl rgb_to_hsl(EncodedRgb c);
inline Hsl rgb_to_hsl(Srgb8 c) { return rgb_to_hsl(normalize(c)); }
EncodedRgb hsl_to_rgb(Hsl c);

LabColor rgb_to_lab(LinearRgb c);
inline LabColor srgb_to_lab(Srgb8 c) { return rgb_to_lab(decode_srgb(c)); }

/// CIE76 colour difference.
double delta_e(const LabColor& a, const LabColor& b);

/// Lowercase "#rrggbb".
std::string to_hex(Srgb8 c);

/// Accepts exactly "#rrggbb" (either case).
std::optional<Srgb8> parse_hex(std::string_view text);

}  // namespace cvd
