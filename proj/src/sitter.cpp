#include "evoart/sitter.hpp"

#include <cmath>

#include "evoart/errors.hpp"
#include "evoart/png_io.hpp"

namespace evoart {

std::vector<bool> default_face_mask(int width, int height) {
    std::vector<bool> mask(static_cast<std::size_t>(width) * height, false);
    const double cx = (width - 1) / 2.0, cy = (height - 1) / 2.0;
    const double rx = 0.35 * width, ry = 0.45 * height;
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const double nx = (x - cx) / rx, ny = (y - cy) / ry;
            if (nx * nx + ny * ny <= 1.0)
                mask[static_cast<std::size_t>(y) * width + x] = true;
        }
    }
    return mask;
}

double face_bg_contrast(const ImageBuffer& img, const std::vector<bool>& mask) {
    double face_sum = 0.0, bg_sum = 0.0, all_sum = 0.0;
    long face_n = 0, bg_n = 0;
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        const double v = img.pixels[i][2];
        all_sum += v;
        if (mask[i]) {
            face_sum += v;
            ++face_n;
        } else {
            bg_sum += v;
            ++bg_n;
        }
    }
    const double overall = all_sum / static_cast<double>(img.pixels.size());
    const double face_mean = face_n > 0 ? face_sum / face_n : overall;
    const double bg_mean = bg_n > 0 ? bg_sum / bg_n : overall;
    return std::fabs(face_mean - bg_mean) / 255.0;
}

SitterContext build_sitter(const ImageBuffer& image,
                           const std::optional<ImageBuffer>& mask) {
    if (mask && (mask->width != image.width || mask->height != image.height))
        throw ValidationError("mask dimensions " + std::to_string(mask->width) + "x" +
                              std::to_string(mask->height) + " do not match sitter " +
                              std::to_string(image.width) + "x" + std::to_string(image.height));

    SitterContext ctx;
    ctx.pyramid.push_back(image);
    for (int level = 1; level < kPyramidLevels; ++level)
        ctx.pyramid.push_back(downsample(ctx.pyramid.back()));

    // Mask carried as a 0/255 gray image so it downsamples with the
    // same box filter, then re-thresholded at 128 per level.
    ImageBuffer mask_img(image.width, image.height);
    if (mask) {
        for (std::size_t i = 0; i < mask->pixels.size(); ++i)
            mask_img.pixels[i] = {0, 0, static_cast<std::uint8_t>(mask->pixels[i][2] >= 128 ? 255 : 0)};
    } else {
        const auto def = default_face_mask(image.width, image.height);
        for (std::size_t i = 0; i < def.size(); ++i)
            mask_img.pixels[i] = {0, 0, static_cast<std::uint8_t>(def[i] ? 255 : 0)};
    }
    for (int level = 0; level < kPyramidLevels; ++level) {
        std::vector<bool> level_mask(mask_img.pixels.size());
        for (std::size_t i = 0; i < mask_img.pixels.size(); ++i)
            level_mask[i] = mask_img.pixels[i][2] >= 128;
        ctx.face_mask.push_back(std::move(level_mask));
        if (level + 1 < kPyramidLevels) mask_img = downsample(mask_img);
    }

    ctx.value_hist = value_histogram(ctx.pyramid[kQuarterLevel], 16);
    ctx.face_bg_contrast = face_bg_contrast(ctx.pyramid[kQuarterLevel],
                                            ctx.face_mask[kQuarterLevel]);
    return ctx;
}

SitterContext build_sitter_files(const std::string& image_path,
                                 const std::optional<std::string>& mask_path) {
    ImageBuffer image = load_png(image_path);
    std::optional<ImageBuffer> mask;
    if (mask_path) mask = load_png(*mask_path);
    return build_sitter(image, mask);
}

}  // namespace evoart
