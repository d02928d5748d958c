// SPDX-License-Identifier: Apache-2.0
//
// Every numeric constant the colour pipeline depends on.
#pragma once

#include "cvd/color.hpp"

namespace cvd::constants {

// Linear RGB -> LMS, from the daltonize derivation of Fidaner, Lin and
// Ozguven ("Analysis of Color Blindness", Stanford, 2005). The dichromat
// projections below come from the same derivation, so each of them leaves
// the white point of this matrix (nearly) fixed.
inline constexpr Mat3 kRgbToLms{{
    17.8824, 43.5161, 4.11935,
    3.45565, 27.1554, 3.86714,
    0.0299566, 0.184309, 1.46709,
}};

inline constexpr Mat3 kLmsToRgb = inverse(kRgbToLms);

// L' = 2.0234 M - 2.5258 S
inline constexpr double kProtanFromM = 2.0234;
inline constexpr double kProtanFromS = -2.5258;

// M' = 0.4942 L + 1.2483 S
inline constexpr double kDeutanFromL = 0.4942;
inline constexpr double kDeutanFromS = 1.2483;

// S' = -0.395913 L + 0.801109 M
inline constexpr double kTritanFromL = -0.395913;
inline constexpr double kTritanFromM = 0.801109;

// Linear sRGB -> XYZ (D65), IEC 61966-2-1.
inline constexpr Mat3 kRgbToXyz{{
    0.4124564, 0.3575761, 0.1804375,
    0.2126729, 0.7151522, 0.0721750,
    0.0193339, 0.1191920, 0.9503041,
}};

// Reference white is the image of RGB (1,1,1), so neutrals land exactly on a* = b* = 0.
inline constexpr Vec3 kWhiteXyz = kRgbToXyz * Vec3{1.0, 1.0, 1.0};

// sRGB transfer function.
inline constexpr double kSrgbDecodeKnee = 0.04045;
inline constexpr double kSrgbEncodeKnee = 0.0031308;
inline constexpr double kSrgbLinearSlope = 12.92;
inline constexpr double kSrgbOffset = 0.055;
inline constexpr double kSrgbGamma = 2.4;

// HSL hue uses the standard branch numerators (G-B), (B-R), (R-G) for
// MAX = R, G, B. Repeating (G-B) in every branch, as some printed versions
// of the formula do, breaks the inverse.

}  // namespace cvd::constants
