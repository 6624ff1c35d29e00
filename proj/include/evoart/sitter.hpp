#pragma once

#include <optional>
#include <string>
#include <vector>

#include "evoart/image.hpp"

namespace evoart {

// Everything fitness needs to know about the sitter, precomputed once:
// a 4-level half-scale pyramid, a face mask at every level, the
// quarter-scale value histogram and the face/background V contrast.
struct SitterContext {
    std::vector<ImageBuffer> pyramid;            // full, 1/2, 1/4, 1/8
    std::vector<std::vector<bool>> face_mask;    // per level, row-major
    Histogram value_hist;                        // 16-bin, quarter scale
    double face_bg_contrast = 0.0;               // [0,1]

    int width() const { return pyramid.front().width; }
    int height() const { return pyramid.front().height; }
};

constexpr int kPyramidLevels = 4;
constexpr int kQuarterLevel = 2;

// Mask absent: centered ellipse with semi-axes 0.35*width and
// 0.45*height, the default portrait head placement.
std::vector<bool> default_face_mask(int width, int height);

// Mask image convention: luminance (V) >= 128 means face.
SitterContext build_sitter(const ImageBuffer& image,
                           const std::optional<ImageBuffer>& mask = std::nullopt);
SitterContext build_sitter_files(const std::string& image_path,
                                 const std::optional<std::string>& mask_path = std::nullopt);

// |meanV(face) - meanV(background)| / 255 on the given level; a
// degenerate mask falls back to the overall mean on the empty side.
double face_bg_contrast(const ImageBuffer& img, const std::vector<bool>& mask);

}  // namespace evoart
