#include "evoart/fitness.hpp"

#include <algorithm>
#include <cmath>

#include "evoart/errors.hpp"
#include "evoart/program.hpp"

namespace evoart {

namespace {

double mean_channel_distance(const ImageBuffer& a, const ImageBuffer& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.pixels.size(); ++i) {
        const auto& pa = a.pixels[i];
        const auto& pb = b.pixels[i];
        sum += 0.2 * hue_distance(pa[0], pb[0]) / 128.0 +
               0.2 * std::abs(pa[1] - pb[1]) / 255.0 +
               0.6 * std::abs(pa[2] - pb[2]) / 255.0;
    }
    return sum / static_cast<double>(a.pixels.size());
}

void require_match(const ImageBuffer& candidate, const SitterContext& sitter) {
    if (candidate.width != sitter.width() || candidate.height != sitter.height())
        throw ValidationError("candidate " + std::to_string(candidate.width) + "x" +
                              std::to_string(candidate.height) + " does not match sitter " +
                              std::to_string(sitter.width()) + "x" +
                              std::to_string(sitter.height()));
}

}  // namespace

double resemblance_score(const ImageBuffer& candidate, const SitterContext& sitter) {
    require_match(candidate, sitter);
    double total = 0.0;
    ImageBuffer level = candidate;
    for (int k = 0; k < kPyramidLevels; ++k) {
        if (k > 0) level = downsample(level);
        total += mean_channel_distance(level, sitter.pyramid[k]);
    }
    return std::clamp(1.0 - total / kPyramidLevels, 0.0, 1.0);
}

double composition_score(const ImageBuffer& candidate, const SitterContext& sitter) {
    require_match(candidate, sitter);
    ImageBuffer quarter = downsample(downsample(candidate));
    const double c = face_bg_contrast(quarter, sitter.face_mask[kQuarterLevel]);
    return 1.0 - std::fabs(c - sitter.face_bg_contrast);
}

double tonality_score(const ImageBuffer& candidate, const SitterContext& sitter) {
    require_match(candidate, sitter);
    ImageBuffer quarter = downsample(downsample(candidate));
    const Histogram hist = value_histogram(quarter, 16);
    double intersection = 0.0;
    for (std::size_t i = 0; i < hist.bins.size(); ++i)
        intersection += std::min(hist.bins[i], sitter.value_hist.bins[i]);
    return std::clamp(intersection, 0.0, 1.0);
}

double harmony_score(const ImageBuffer& candidate) {
    const Histogram hist = hue_histogram(candidate, 36);
    const int bins = static_cast<int>(hist.bins.size());

    int dominant = 0;
    for (int i = 1; i < bins; ++i)
        if (hist.bins[i] > hist.bins[dominant]) dominant = i;

    auto arc_mass = [&](int center) {
        double m = 0.0;
        for (int d = -3; d <= 3; ++d)
            m += hist.bins[((center + d) % bins + bins) % bins];
        return m;
    };
    const double analogous = arc_mass(dominant);
    const double complementary = analogous + arc_mass(dominant + bins / 2);
    const double structure = std::max(analogous, std::min(1.0, complementary));

    // Warm fraction: bins whose center hue falls in [0,42] u [213,255].
    double warm = 0.0;
    for (int i = 0; i < bins; ++i) {
        const double center = (i + 0.5) * 256.0 / bins;
        if (center <= 42.0 || center >= 213.0) warm += hist.bins[i];
    }
    const double temperature = 2.0 * std::fabs(warm - 0.5);
    return std::clamp(0.5 * structure + 0.5 * temperature, 0.0, 1.0);
}

double painterly_combine(double composition, double tonality, double harmony) {
    const double mx = std::max({composition, tonality, harmony});
    const double mean = (composition + tonality + harmony) / 3.0;
    return 0.5 * mx + 0.5 * mean;
}

double combined_fitness(double resemblance, double painterly, double w_r) {
    return w_r * resemblance + (1.0 - w_r) * painterly;
}

Evaluation evaluate(const Genotype& g, const SitterContext& sitter, double w_r, Mode mode) {
    Evaluation ev;
    ev.phenotype = render(g, sitter.width(), sitter.height());
    FitnessReport& r = ev.report;
    r.resemblance = resemblance_score(ev.phenotype, sitter);
    r.composition = composition_score(ev.phenotype, sitter);
    r.tonality = tonality_score(ev.phenotype, sitter);
    r.harmony = harmony_score(ev.phenotype);
    r.painterly = painterly_combine(r.composition, r.tonality, r.harmony);
    r.w_r = w_r;
    r.mode = mode;
    r.combined = combined_fitness(r.resemblance, r.painterly, w_r);
    ev.digest = image_digest(ev.phenotype);
    return ev;
}

}  // namespace evoart
