// SPDX-License-Identifier: Apache-2.0
//
// Four pixels per iteration in double precision. Products and sums are
// issued in the same order as Mat3 * Vec3 so results match the scalar kernel
// bit for bit; this file must not be built with FMA enabled.
#include <immintrin.h>

#include "kernels/kernels.hpp"

namespace cvd::kernels {

namespace {

struct Rows {
    __m256d m[9];

    explicit Rows(const Mat3& a) {
        for (int i = 0; i < 9; ++i) m[i] = _mm256_set1_pd(a.m[i]);
    }
};

inline void mat_vec(const Rows& a, __m256d& x, __m256d& y, __m256d& z) {
    const __m256d ox = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(a.m[0], x), _mm256_mul_pd(a.m[1], y)),
                                     _mm256_mul_pd(a.m[2], z));
    const __m256d oy = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(a.m[3], x), _mm256_mul_pd(a.m[4], y)),
                                     _mm256_mul_pd(a.m[5], z));
    const __m256d oz = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(a.m[6], x), _mm256_mul_pd(a.m[7], y)),
                                     _mm256_mul_pd(a.m[8], z));
    x = ox;
    y = oy;
    z = oz;
}

inline __m256d clamp01(__m256d v) {
    return _mm256_max_pd(_mm256_min_pd(v, _mm256_set1_pd(1.0)), _mm256_setzero_pd());
}

inline void encode4(const EncodeTable& enc, __m256d v, std::uint8_t* dst, unsigned stride) {
    const __m128i bucket =
        _mm256_cvttpd_epi32(_mm256_mul_pd(v, _mm256_set1_pd(EncodeTable::kBuckets)));
    const __m128i base = _mm_i32gather_epi32(enc.base.data(), bucket, 4);
    const __m256d next = _mm256_i32gather_pd(enc.next.data(), bucket, 8);
    const int above = _mm256_movemask_pd(_mm256_cmp_pd(v, next, _CMP_GE_OQ));
    const __m128i code = _mm_add_epi32(
        base, _mm_setr_epi32(above & 1, (above >> 1) & 1, (above >> 2) & 1, (above >> 3) & 1));
    alignas(16) std::int32_t out[4];
    _mm_store_si128(reinterpret_cast<__m128i*>(out), code);
    for (int i = 0; i < 4; ++i) dst[i * stride] = static_cast<std::uint8_t>(out[i]);
}

inline __m256d decode4(const KernelTables& t, const std::uint8_t* src, unsigned stride) {
    const __m128i idx = _mm_setr_epi32(src[0], src[stride], src[2 * stride], src[3 * stride]);
    return _mm256_i32gather_pd(t.decode.data(), idx, 8);
}

}  // namespace

void simulate_avx2(const KernelTables& t, const std::uint8_t* src, std::uint8_t* dst,
                   std::size_t count, unsigned channels) {
    const Rows to_lms(t.to_lms);
    const Rows projection(t.projection);
    const Rows to_rgb(t.to_rgb);
    const EncodeTable& enc = *t.encode;

    std::size_t i = 0;
    for (; i + 4 <= count; i += 4, src += 4 * channels, dst += 4 * channels) {
        __m256d r = decode4(t, src + 0, channels);
        __m256d g = decode4(t, src + 1, channels);
        __m256d b = decode4(t, src + 2, channels);
        mat_vec(to_lms, r, g, b);
        mat_vec(projection, r, g, b);
        mat_vec(to_rgb, r, g, b);
        encode4(enc, clamp01(r), dst + 0, channels);
        encode4(enc, clamp01(g), dst + 1, channels);
        encode4(enc, clamp01(b), dst + 2, channels);
        if (channels == 4) {
            for (int k = 0; k < 4; ++k) dst[k * 4 + 3] = src[k * 4 + 3];
        }
    }
    simulate_scalar(t, src, dst, count - i, channels);
}

}  // namespace cvd::kernels
