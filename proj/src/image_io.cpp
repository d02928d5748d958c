// SPDX-License-Identifier: Apache-2.0
#include <png.h>

#include <csetjmp>
#include <cstring>
#include <fstream>
#include <iterator>

#include "cvd/error.hpp"
#include "cvd/image.hpp"

namespace cvd {

namespace {

struct ReadState {
    std::span<const std::uint8_t> bytes;
    std::size_t offset = 0;
    char message[256] = {};
};

void read_callback(png_structp png, png_bytep out, png_size_t length) {
    auto* state = static_cast<ReadState*>(png_get_io_ptr(png));
    if (state->bytes.size() - state->offset < length) {
        png_error(png, "unexpected end of data");
    }
    std::memcpy(out, state->bytes.data() + state->offset, length);
    state->offset += length;
}

void error_callback(png_structp png, png_const_charp message) {
    auto* state = static_cast<ReadState*>(png_get_error_ptr(png));
    std::strncpy(state->message, message, sizeof(state->message) - 1);
    png_longjmp(png, 1);
}

void warning_callback(png_structp, png_const_charp) {}

struct Header {
    png_uint_32 width = 0;
    png_uint_32 height = 0;
    unsigned channels = 0;
    std::size_t rowbytes = 0;
};

// All C++ objects live in the caller; nothing with a destructor is created
// between setjmp and a possible longjmp.
bool read_header(png_structp png, png_infop info, Header& h) {
    if (setjmp(png_jmpbuf(png))) return false;
    png_read_info(png, info);
    const int color_type = png_get_color_type(png, info);
    const int depth = png_get_bit_depth(png, info);
    if (depth == 16) png_set_strip_16(png);
    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA) {
        png_set_gray_to_rgb(png);
    }
    png_set_interlace_handling(png);
    png_read_update_info(png, info);
    h.width = png_get_image_width(png, info);
    h.height = png_get_image_height(png, info);
    h.channels = png_get_channels(png, info);
    h.rowbytes = png_get_rowbytes(png, info);
    return true;
}

bool read_rows(png_structp png, png_infop info, png_bytepp rows) {
    if (setjmp(png_jmpbuf(png))) return false;
    png_read_image(png, rows);
    png_read_end(png, info);
    return true;
}

struct WriteState {
    std::vector<std::uint8_t>* out;
    char message[256] = {};
};

void write_callback(png_structp png, png_bytep data, png_size_t length) {
    auto* state = static_cast<WriteState*>(png_get_io_ptr(png));
    state->out->insert(state->out->end(), data, data + length);
}

void flush_callback(png_structp) {}

void write_error_callback(png_structp png, png_const_charp message) {
    auto* state = static_cast<WriteState*>(png_get_error_ptr(png));
    std::strncpy(state->message, message, sizeof(state->message) - 1);
    png_longjmp(png, 1);
}

bool write_all(png_structp png, png_infop info, const Image& img, png_bytepp rows) {
    if (setjmp(png_jmpbuf(png))) return false;
    png_set_IHDR(png, info, img.width, img.height, 8,
                 img.channels == 4 ? PNG_COLOR_TYPE_RGB_ALPHA : PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    png_write_image(png, rows);
    png_write_end(png, info);
    return true;
}

[[noreturn]] void fail(const std::string& source, std::size_t offset, const char* message) {
    throw FormatError(source + ": byte " + std::to_string(offset) + ": " + message, offset);
}

}  // namespace

Image decode_png(std::span<const std::uint8_t> bytes, const std::string& source) {
    if (bytes.size() < 8 || png_sig_cmp(bytes.data(), 0, 8) != 0) {
        fail(source, 0, "not a PNG file");
    }

    ReadState state;
    state.bytes = bytes;
    png_structp png =
        png_create_read_struct(PNG_LIBPNG_VER_STRING, &state, error_callback, warning_callback);
    if (png == nullptr) throw std::bad_alloc();
    png_infop info = png_create_info_struct(png);
    if (info == nullptr) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw std::bad_alloc();
    }
    png_set_read_fn(png, &state, read_callback);

    Header h;
    if (!read_header(png, info, h)) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail(source, state.offset, state.message);
    }
    if (h.channels != 3 && h.channels != 4) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail(source, state.offset, "unsupported channel layout");
    }

    Image img{h.width, h.height, h.channels, {}};
    try {
        img.pixels.resize(img.pixel_count() * h.channels);
    } catch (...) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw;
    }
    std::vector<png_bytep> rows(h.height);
    for (png_uint_32 y = 0; y < h.height; ++y) rows[y] = img.pixels.data() + y * h.rowbytes;

    const bool ok = read_rows(png, info, rows.data());
    png_destroy_read_struct(&png, &info, nullptr);
    if (!ok) fail(source, state.offset, state.message);
    return img;
}

std::vector<std::uint8_t> encode_png(const Image& img) {
    if (img.channels != 3 && img.channels != 4) {
        throw std::invalid_argument("encode_png: expected 3 or 4 channels");
    }
    if (img.pixels.size() != img.pixel_count() * img.channels) {
        throw std::invalid_argument("encode_png: pixel buffer does not match dimensions");
    }
    std::vector<std::uint8_t> out;
    WriteState state{&out};
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &state,
                                              write_error_callback, warning_callback);
    if (png == nullptr) throw std::bad_alloc();
    png_infop info = png_create_info_struct(png);
    if (info == nullptr) {
        png_destroy_write_struct(&png, nullptr);
        throw std::bad_alloc();
    }
    png_set_write_fn(png, &state, write_callback, flush_callback);

    std::vector<png_bytep> rows(img.height);
    const std::size_t stride = std::size_t{img.width} * img.channels;
    for (std::uint32_t y = 0; y < img.height; ++y) {
        rows[y] = const_cast<png_bytep>(img.pixels.data() + y * stride);
    }
    const bool ok = write_all(png, info, img, rows.data());
    png_destroy_write_struct(&png, &info);
    if (!ok) throw Error(std::string("PNG encode failed: ") + state.message);
    return out;
}

Image read_png(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError(path.string() + ": cannot open file", 0);
    const std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in),
                                          std::istreambuf_iterator<char>()};
    return decode_png(bytes, path.string());
}

void write_png(const std::filesystem::path& path, const Image& img) {
    const auto bytes = encode_png(img);
    std::ofstream out(path, std::ios::binary);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error(path.string() + ": write failed");
}

}  // namespace cvd
