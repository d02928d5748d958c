// SPDX-License-Identifier: Apache-2.0
//
// Per-pixel simulation kernels. The scalar kernel is the reference; every
// SIMD kernel must produce bit-identical output.
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "cvd/color.hpp"
#include "cvd/simulate.hpp"

namespace cvd::kernels {

/// Exact replacement for encode_srgb on one channel: the bucket of x fixes the
/// code up to one threshold, which is resolved with a single compare.
struct EncodeTable {
    static constexpr int kBuckets = 4096;

    // code at the start of each bucket, and the first x in the bucket that maps
    // to code + 1 (+inf when no such x exists in the bucket)
    std::array<std::int32_t, kBuckets + 1> base{};
    std::array<double, kBuckets + 1> next{};

    std::uint8_t lookup(double x) const {
        const auto i = static_cast<int>(x * kBuckets);
        return static_cast<std::uint8_t>(base[i] + (x >= next[i] ? 1 : 0));
    }
};

struct KernelTables {
    std::array<double, 256> decode{};
    Mat3 to_lms;
    Mat3 projection;
    Mat3 to_rgb;
    const EncodeTable* encode = nullptr;
};

const EncodeTable& encode_table();
const KernelTables& kernel_tables(Dichromacy kind);

/// Processes `count` pixels of `channels` (3 or 4) interleaved bytes.
void simulate_scalar(const KernelTables& t, const std::uint8_t* src, std::uint8_t* dst,
                     std::size_t count, unsigned channels);

#if defined(CVD_HAVE_AVX2_KERNEL)
void simulate_avx2(const KernelTables& t, const std::uint8_t* src, std::uint8_t* dst,
                   std::size_t count, unsigned channels);
#endif

}  // namespace cvd::kernels
