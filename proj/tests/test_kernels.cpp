// SPDX-License-Identifier: Apache-2.0
//
// Equivalence of the dispatched kernels with the reference colour pipeline.
#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <random>

#include "cvd/image.hpp"
#include "kernels/kernels.hpp"
#include "test_helpers.hpp"

namespace cvd {
namespace {

std::uint8_t reference_encode(double x) { return encode_srgb(LinearRgb(x, x, x)).r; }

TEST(EncodeTable, MatchesEncodeSrgbAtEveryCodeBoundary) {
    const auto& table = kernels::encode_table();
    // Walk 64 ulps either side of the linear value where code k-1 turns into k.
    for (int k = 1; k < 256; ++k) {
        const double encoded = (k - 0.5) / 255.0;
        const double boundary = encoded <= 0.04045 ? encoded / 12.92
                                                   : std::pow((encoded + 0.055) / 1.055, 2.4);
        double x = boundary;
        for (int s = 0; s < 64; ++s) x = std::nextafter(x, -1.0);
        bool saw_low = false, saw_high = false;
        for (int s = 0; s < 128; ++s, x = std::nextafter(x, 2.0)) {
            const std::uint8_t expect = reference_encode(x);
            ASSERT_EQ(table.lookup(x), expect) << x;
            saw_low |= expect == k - 1;
            saw_high |= expect == k;
        }
        EXPECT_TRUE(saw_low && saw_high) << "window missed boundary " << k;
    }
}

TEST(EncodeTable, MatchesEncodeSrgbOnRandomInputs) {
    const auto& table = kernels::encode_table();
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200000; ++i) {
        const double x = u(rng);
        ASSERT_EQ(table.lookup(x), reference_encode(x)) << x;
    }
    EXPECT_EQ(table.lookup(0.0), 0);
    EXPECT_EQ(table.lookup(1.0), 255);
}

Image random_image(std::uint32_t w, std::uint32_t h, std::uint32_t channels, unsigned seed) {
    std::mt19937 rng(seed);
    Image img{w, h, channels, {}};
    img.pixels.resize(img.pixel_count() * channels);
    for (auto& b : img.pixels) b = static_cast<std::uint8_t>(rng());
    return img;
}

TEST(ScalarKernel, MatchesSimulateColorOnGrid) {
    const auto grid = test::grid32();
    Image img{static_cast<std::uint32_t>(grid.size()), 1, 3, {}};
    for (const Srgb8 c : grid) img.pixels.insert(img.pixels.end(), {c.r, c.g, c.b});
    for (auto k : kAllDichromacies) {
        const Image out = simulate_image(img, k, Kernel::Scalar);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const Srgb8 expect = simulate_color(grid[i], k);
            ASSERT_EQ((Srgb8{out.pixels[3 * i], out.pixels[3 * i + 1], out.pixels[3 * i + 2]}), expect)
                << short_name(k) << " " << to_hex(grid[i]);
        }
    }
}

class KernelEquivalence : public ::testing::TestWithParam<Kernel> {};

TEST_P(KernelEquivalence, BitIdenticalToScalar) {
    const Kernel kernel = GetParam();
    const auto avail = available_kernels();
    if (kernel != Kernel::Auto && std::find(avail.begin(), avail.end(), kernel) == avail.end()) {
        GTEST_SKIP() << kernel_name(kernel) << " not available on this CPU";
    }
    // odd widths exercise the scalar tail of vector kernels
    for (std::uint32_t channels : {3u, 4u}) {
        for (std::uint32_t w : {1u, 3u, 4u, 5u, 257u}) {
            const Image img = random_image(w, 9, channels, w * 31 + channels);
            for (auto k : kAllDichromacies) {
                ASSERT_EQ(simulate_image(img, k, kernel), simulate_image(img, k, Kernel::Scalar))
                    << kernel_name(kernel) << " w=" << w << " c=" << channels << " " << short_name(k);
            }
        }
    }
}

TEST_P(KernelEquivalence, BitIdenticalOnEveryGridColor) {
    const Kernel kernel = GetParam();
    const auto avail = available_kernels();
    if (kernel != Kernel::Auto && std::find(avail.begin(), avail.end(), kernel) == avail.end()) GTEST_SKIP();
    const auto grid = test::grid32();
    Image img{static_cast<std::uint32_t>(grid.size()), 1, 3, {}};
    for (const Srgb8 c : grid) img.pixels.insert(img.pixels.end(), {c.r, c.g, c.b});
    for (auto k : kAllDichromacies) {
        ASSERT_EQ(simulate_image(img, k, kernel), simulate_image(img, k, Kernel::Scalar));
    }
}

INSTANTIATE_TEST_SUITE_P(AllKernels, KernelEquivalence,
                         ::testing::Values(Kernel::Scalar, Kernel::Avx2, Kernel::Auto),
                         [](const auto& info) { return std::string(kernel_name(info.param)); });

TEST(Dispatch, ScalarAlwaysAvailable) {
    const auto avail = available_kernels();
    ASSERT_FALSE(avail.empty());
    EXPECT_EQ(avail.front(), Kernel::Scalar);
    EXPECT_NE(best_kernel(), Kernel::Auto);
}

}  // namespace
}  // namespace cvd
