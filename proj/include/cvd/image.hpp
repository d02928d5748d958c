// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "cvd/simulate.hpp"

namespace cvd {

/// Interleaved 8-bit RGB or RGBA raster.
struct Image {
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    std::uint32_t channels = 3;  // 3 or 4
    std::vector<std::uint8_t> pixels;

    std::size_t pixel_count() const { return std::size_t{width} * height; }

    friend bool operator==(const Image&, const Image&) = default;
};

enum class Kernel { Auto, Scalar, Avx2 };

/// Kernels usable on this machine, scalar first.
std::vector<Kernel> available_kernels();

/// The kernel Kernel::Auto resolves to.
Kernel best_kernel();

const char* kernel_name(Kernel k);

/// Per-pixel simulate_color; alpha is copied verbatim. Throws std::invalid_argument
/// for an unsupported channel count or a buffer that does not match the size.
Image simulate_image(const Image& img, Dichromacy kind, Kernel kernel = Kernel::Auto);

/// PNG decoding to 8-bit RGB/RGBA (palette, gray and 16-bit inputs are expanded).
/// Throws FormatError naming `source` and the byte offset reached.
Image decode_png(std::span<const std::uint8_t> bytes, const std::string& source = "<memory>");
std::vector<std::uint8_t> encode_png(const Image& img);

Image read_png(const std::filesystem::path& path);
void write_png(const std::filesystem::path& path, const Image& img);

}  // namespace cvd
