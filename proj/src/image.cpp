#include "evoart/image.hpp"

#include <algorithm>
#include <cmath>

namespace evoart {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;
}

std::array<int, 3> rgb_to_hsv(int r, int g, int b) {
    const int mx = std::max({r, g, b});
    const int mn = std::min({r, g, b});
    const int delta = mx - mn;
    const int v = mx;
    const int s = mx == 0 ? 0 : static_cast<int>(std::lround(255.0 * delta / mx));
    int h = 0;
    if (delta > 0) {
        double hue6;  // sector position in [0,6)
        if (mx == r)
            hue6 = std::fmod((g - b) / static_cast<double>(delta) + 6.0, 6.0);
        else if (mx == g)
            hue6 = (b - r) / static_cast<double>(delta) + 2.0;
        else
            hue6 = (r - g) / static_cast<double>(delta) + 4.0;
        h = static_cast<int>(std::lround(hue6 * 256.0 / 6.0)) % 256;
    }
    return {h, s, v};
}

std::array<int, 3> hsv_to_rgb(int h, int s, int v) {
    if (s == 0) return {v, v, v};
    const double hue6 = h * 6.0 / 256.0;
    const int sector = static_cast<int>(hue6) % 6;
    const double f = hue6 - static_cast<int>(hue6);
    const double sf = s / 255.0;
    const int p = static_cast<int>(std::lround(v * (1.0 - sf)));
    const int q = static_cast<int>(std::lround(v * (1.0 - sf * f)));
    const int t = static_cast<int>(std::lround(v * (1.0 - sf * (1.0 - f))));
    switch (sector) {
        case 0: return {v, t, p};
        case 1: return {q, v, p};
        case 2: return {p, v, t};
        case 3: return {p, q, v};
        case 4: return {t, p, v};
        default: return {v, p, q};
    }
}

int hue_distance(int a, int b) {
    int d = std::abs(a - b);
    return std::min(d, 256 - d);
}

ImageBuffer downsample(const ImageBuffer& img) {
    const int ow = (img.width + 1) / 2;
    const int oh = (img.height + 1) / 2;
    ImageBuffer out(ow, oh);
    for (int oy = 0; oy < oh; ++oy) {
        for (int ox = 0; ox < ow; ++ox) {
            double hx = 0.0, hy = 0.0;
            int ssum = 0, vsum = 0, count = 0;
            for (int dy = 0; dy < 2; ++dy) {
                for (int dx = 0; dx < 2; ++dx) {
                    const int x = ox * 2 + dx, y = oy * 2 + dy;
                    if (x >= img.width || y >= img.height) continue;
                    const auto& px = img.at(x, y);
                    const double ang = px[0] * kTwoPi / 256.0;
                    hx += std::cos(ang);
                    hy += std::sin(ang);
                    ssum += px[1];
                    vsum += px[2];
                    ++count;
                }
            }
            int h = 0;
            if (hx * hx + hy * hy > 1e-18) {
                double frac = std::atan2(hy, hx) / kTwoPi;
                if (frac < 0.0) frac += 1.0;
                h = static_cast<int>(std::lround(frac * 256.0)) % 256;
            }
            out.at(ox, oy) = {static_cast<std::uint8_t>(h),
                              static_cast<std::uint8_t>(std::lround(ssum / static_cast<double>(count))),
                              static_cast<std::uint8_t>(std::lround(vsum / static_cast<double>(count)))};
        }
    }
    return out;
}

Histogram value_histogram(const ImageBuffer& img, int bins) {
    Histogram hist;
    hist.bins.assign(bins, 0.0);
    for (const auto& px : img.pixels) hist.bins[px[2] * bins / 256] += 1.0;
    const double total = static_cast<double>(img.pixels.size());
    for (double& b : hist.bins) b /= total;
    hist.normalized = true;
    return hist;
}

Histogram hue_histogram(const ImageBuffer& img, int bins) {
    Histogram hist;
    hist.bins.assign(bins, 0.0);
    double total = 0.0;
    for (const auto& px : img.pixels) {
        const double w = px[1] / 255.0;
        hist.bins[px[0] * bins / 256] += w;
        total += w;
    }
    if (total <= 0.0) {
        for (double& b : hist.bins) b = 1.0 / bins;
    } else {
        for (double& b : hist.bins) b /= total;
    }
    hist.normalized = true;
    return hist;
}

std::uint64_t image_digest(const ImageBuffer& img) {
    std::uint64_t h = 14695981039346656037ull;
    for (const auto& px : img.pixels) {
        for (int c = 0; c < 3; ++c) {
            h ^= px[c];
            h *= 1099511628211ull;
        }
    }
    return h;
}

}  // namespace evoart
