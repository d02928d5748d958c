// SPDX-License-Identifier: Apache-2.0
#include <stdexcept>

#include "cvd/image.hpp"
#include "kernels/kernels.hpp"

namespace cvd {

namespace {

bool cpu_has_avx2() {
#if defined(CVD_HAVE_AVX2_KERNEL)
    static const bool has = __builtin_cpu_supports("avx2");
    return has;
#else
    return false;
#endif
}

}  // namespace

std::vector<Kernel> available_kernels() {
    std::vector<Kernel> out{Kernel::Scalar};
    if (cpu_has_avx2()) out.push_back(Kernel::Avx2);
    return out;
}

Kernel best_kernel() { return cpu_has_avx2() ? Kernel::Avx2 : Kernel::Scalar; }

const char* kernel_name(Kernel k) {
    switch (k) {
        case Kernel::Auto: return "auto";
        case Kernel::Scalar: return "scalar";
        case Kernel::Avx2: return "avx2";
    }
    return "?";
}

Image simulate_image(const Image& img, Dichromacy kind, Kernel kernel) {
    if (img.channels != 3 && img.channels != 4) {
        throw std::invalid_argument("simulate_image: expected 3 or 4 channels");
    }
    if (img.pixels.size() != img.pixel_count() * img.channels) {
        throw std::invalid_argument("simulate_image: pixel buffer does not match dimensions");
    }
    if (kernel == Kernel::Auto) kernel = best_kernel();

    Image out{img.width, img.height, img.channels, std::vector<std::uint8_t>(img.pixels.size())};
    const auto& tables = kernels::kernel_tables(kind);
    switch (kernel) {
#if defined(CVD_HAVE_AVX2_KERNEL)
        case Kernel::Avx2:
            if (!cpu_has_avx2()) throw std::invalid_argument("simulate_image: AVX2 not supported");
            kernels::simulate_avx2(tables, img.pixels.data(), out.pixels.data(), img.pixel_count(),
                                   img.channels);
            break;
#endif
        case Kernel::Scalar:
            kernels::simulate_scalar(tables, img.pixels.data(), out.pixels.data(),
                                     img.pixel_count(), img.channels);
            break;
        default:
            throw std::invalid_argument("simulate_image: kernel not available in this build");
    }
    return out;
}

}  // namespace cvd
