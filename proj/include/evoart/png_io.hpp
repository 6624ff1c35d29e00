#pragma once

#include <string>

#include "evoart/image.hpp"

namespace evoart {

// 8-bit RGB PNG output; pixels converted HSV -> RGB. Encoder settings
// are fixed so equal buffers produce byte-identical files.
void save_png(const ImageBuffer& img, const std::string& path);

// Accepts 8-bit RGB/RGBA (gray expanded); alpha is composited over
// white before the RGB -> HSV conversion.
ImageBuffer load_png(const std::string& path);

}  // namespace evoart
