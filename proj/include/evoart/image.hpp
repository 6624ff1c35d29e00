#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace evoart {

// Row-major HSV image, every channel an integer in [0,255].
// Hue is circular with period 256.
struct ImageBuffer {
    int width = 0;
    int height = 0;
    std::vector<std::array<std::uint8_t, 3>> pixels;  // {h, s, v}

    ImageBuffer() = default;
    ImageBuffer(int w, int h) : width(w), height(h), pixels(static_cast<std::size_t>(w) * h) {}

    std::array<std::uint8_t, 3>& at(int x, int y) {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
    const std::array<std::uint8_t, 3>& at(int x, int y) const {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }

    bool operator==(const ImageBuffer&) const = default;
};

struct Histogram {
    std::vector<double> bins;
    bool normalized = false;
};

std::array<int, 3> rgb_to_hsv(int r, int g, int b);
std::array<int, 3> hsv_to_rgb(int h, int s, int v);

// Circular hue distance on the 256-wide wheel; result in [0,128].
int hue_distance(int a, int b);

// Half-size 2x2 box reduction; hue averaged circularly, odd edges
// average the available pixels.
ImageBuffer downsample(const ImageBuffer& img);

// Normalized V histogram (plain counting).
Histogram value_histogram(const ImageBuffer& img, int bins = 16);

// Saturation-weighted hue histogram; an image with zero total
// saturation yields the uniform histogram.
Histogram hue_histogram(const ImageBuffer& img, int bins = 36);

// FNV-1a 64-bit over raw H,S,V bytes in row-major order. The phenotype
// identity carrier for neutrality checks.
std::uint64_t image_digest(const ImageBuffer& img);

}  // namespace evoart
