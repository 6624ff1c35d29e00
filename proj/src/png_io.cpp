#include "evoart/png_io.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <memory>
#include <vector>

#include "evoart/errors.hpp"

namespace evoart {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

}  // namespace

void save_png(const ImageBuffer& img, const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "wb"));
    if (!fp) throw IoError("cannot open for writing: " + path);

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("png_create_write_struct failed: " + path);
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw IoError("png_create_info_struct failed: " + path);
    }
    std::vector<unsigned char> rgb(static_cast<std::size_t>(img.width) * img.height * 3);
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw IoError("png write error: " + path);
    }
    png_init_io(png, fp.get());
    png_set_compression_level(png, 6);
    png_set_IHDR(png, info, img.width, img.height, 8, PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);

    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            const auto& px = img.at(x, y);
            const auto c = hsv_to_rgb(px[0], px[1], px[2]);
            unsigned char* dst = &rgb[(static_cast<std::size_t>(y) * img.width + x) * 3];
            dst[0] = static_cast<unsigned char>(c[0]);
            dst[1] = static_cast<unsigned char>(c[1]);
            dst[2] = static_cast<unsigned char>(c[2]);
        }
        png_write_row(png, &rgb[static_cast<std::size_t>(y) * img.width * 3]);
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

ImageBuffer load_png(const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) throw IoError("cannot open: " + path);

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw IoError("png_create_read_struct failed: " + path);
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw IoError("png_create_info_struct failed: " + path);
    }
    std::vector<png_bytep> row_ptrs;
    std::vector<unsigned char> data;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("not a decodable PNG: " + path);
    }
    png_init_io(png, fp.get());
    png_read_info(png, info);

    // Normalize everything to 8-bit RGBA.
    png_set_expand(png);
    png_set_strip_16(png);
    png_set_gray_to_rgb(png);
    png_set_add_alpha(png, 0xFF, PNG_FILLER_AFTER);
    png_read_update_info(png, info);

    const int width = static_cast<int>(png_get_image_width(png, info));
    const int height = static_cast<int>(png_get_image_height(png, info));
    data.resize(static_cast<std::size_t>(width) * height * 4);
    row_ptrs.resize(height);
    for (int y = 0; y < height; ++y)
        row_ptrs[y] = &data[static_cast<std::size_t>(y) * width * 4];
    png_read_image(png, row_ptrs.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    ImageBuffer img(width, height);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const unsigned char* src = &data[(static_cast<std::size_t>(y) * width + x) * 4];
            const double a = src[3] / 255.0;
            // Composite over white.
            const int r = static_cast<int>(std::lround(src[0] * a + 255.0 * (1.0 - a)));
            const int g = static_cast<int>(std::lround(src[1] * a + 255.0 * (1.0 - a)));
            const int b = static_cast<int>(std::lround(src[2] * a + 255.0 * (1.0 - a)));
            const auto hsv = rgb_to_hsv(r, g, b);
            img.at(x, y) = {static_cast<std::uint8_t>(hsv[0]),
                            static_cast<std::uint8_t>(hsv[1]),
                            static_cast<std::uint8_t>(hsv[2])};
        }
    }
    return img;
}

}  // namespace evoart
