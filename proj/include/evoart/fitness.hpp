#pragma once

#include <string>

#include "evoart/genotype.hpp"
#include "evoart/image.hpp"
#include "evoart/sitter.hpp"

namespace evoart {

enum class Mode { Focused, Associative };

inline const char* mode_name(Mode m) {
    return m == Mode::Focused ? "focused" : "associative";
}

// Four component scores plus the two combinations, all in [0,1].
//   painterly = 0.5*max + 0.5*mean of the three rule scores
//   combined  = w_r*resemblance + (1-w_r)*painterly
struct FitnessReport {
    double resemblance = 0.0;
    double composition = 0.0;
    double tonality = 0.0;
    double harmony = 0.0;
    double painterly = 0.0;
    double combined = 0.0;
    double w_r = 0.8;
    Mode mode = Mode::Focused;
};

// Mean weighted channel distance against the sitter, averaged over the
// 4 pyramid levels. Per pixel: 0.2*hueDist/128 + 0.2*|ds|/255 + 0.6*|dv|/255.
double resemblance_score(const ImageBuffer& candidate, const SitterContext& sitter);

// Face/background V-contrast match at quarter scale.
double composition_score(const ImageBuffer& candidate, const SitterContext& sitter);

// 16-bin V histogram intersection at quarter scale.
double tonality_score(const ImageBuffer& candidate, const SitterContext& sitter);

// Harmony structure (analogous/complementary mass around the dominant
// hue) plus warm-cool temperature imbalance, from the 36-bin
// saturation-weighted hue histogram. Warm arc: h in [0,42] u [213,255];
// a bin counts as warm when its center lies in the arc.
double harmony_score(const ImageBuffer& candidate);

double painterly_combine(double composition, double tonality, double harmony);
double combined_fitness(double resemblance, double painterly, double w_r);

struct Evaluation {
    ImageBuffer phenotype;
    FitnessReport report;
    std::uint64_t digest = 0;
};

Evaluation evaluate(const Genotype& g, const SitterContext& sitter, double w_r, Mode mode);

}  // namespace evoart
