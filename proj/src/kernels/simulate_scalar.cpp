// SPDX-License-Identifier: Apache-2.0
#include "kernels/kernels.hpp"

namespace cvd::kernels {

void simulate_scalar(const KernelTables& t, const std::uint8_t* src, std::uint8_t* dst,
                     std::size_t count, unsigned channels) {
    const EncodeTable& enc = *t.encode;
    for (std::size_t i = 0; i < count; ++i, src += channels, dst += channels) {
        const Vec3 lin{t.decode[src[0]], t.decode[src[1]], t.decode[src[2]]};
        const Vec3 out = t.to_rgb * (t.projection * (t.to_lms * lin));
        const LinearRgb clamped(out);
        dst[0] = enc.lookup(clamped.r());
        dst[1] = enc.lookup(clamped.g());
        dst[2] = enc.lookup(clamped.b());
        if (channels == 4) dst[3] = src[3];
    }
}

}  // namespace cvd::kernels
