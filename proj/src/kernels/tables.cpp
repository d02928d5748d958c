// SPDX-License-Identifier: Apache-2.0
#include <bit>
#include <cmath>
#include <limits>

#include "cvd/constants.hpp"
#include "cvd/error.hpp"
#include "kernels/kernels.hpp"

namespace cvd::kernels {

namespace {

std::uint8_t encode_one(double x) { return encode_srgb(LinearRgb(x, x, x)).r; }

// Smallest double in [0, 1] that encodes to at least `code`. Nonnegative
// doubles order like their bit patterns, so this bisects over those.
double first_at_least(int code) {
    std::uint64_t lo = 0;
    std::uint64_t hi = std::bit_cast<std::uint64_t>(1.0);
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (encode_one(std::bit_cast<double>(mid)) >= code) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return std::bit_cast<double>(lo);
}

EncodeTable build_encode_table() {
    std::array<double, 257> threshold{};
    threshold[0] = 0.0;
    for (int code = 1; code <= 255; ++code) threshold[code] = first_at_least(code);
    threshold[256] = std::numeric_limits<double>::infinity();

    EncodeTable t;
    constexpr double width = 1.0 / EncodeTable::kBuckets;
    for (int i = 0; i <= EncodeTable::kBuckets; ++i) {
        const double start = i * width;
        const int code = encode_one(start);
        const double upper = start + width;
        t.base[i] = code;
        t.next[i] = threshold[code + 1] < upper ? threshold[code + 1]
                                                 : std::numeric_limits<double>::infinity();
        if (code + 2 <= 255 && threshold[code + 2] < upper) {
            throw InternalError("encode table: more than one code boundary in a bucket");
        }
    }
    return t;
}

KernelTables build_tables(Dichromacy kind) {
    KernelTables t;
    for (int v = 0; v < 256; ++v) {
        t.decode[v] = decode_srgb(Srgb8{static_cast<std::uint8_t>(v), 0, 0}).r();
    }
    t.to_lms = constants::kRgbToLms;
    t.projection = simulation_matrix(kind).matrix;
    t.to_rgb = constants::kLmsToRgb;
    t.encode = &encode_table();
    return t;
}

}  // namespace

const EncodeTable& encode_table() {
    static const EncodeTable table = build_encode_table();
    return table;
}

const KernelTables& kernel_tables(Dichromacy kind) {
    static const std::array<KernelTables, 3> tables{
        build_tables(Dichromacy::Protanopia),
        build_tables(Dichromacy::Deuteranopia),
        build_tables(Dichromacy::Tritanopia),
    };
    return tables[static_cast<std::size_t>(kind)];
}

}  // namespace cvd::kernels
