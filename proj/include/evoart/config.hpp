#pragma once

#include <optional>
#include <string>

#include "evoart/focus.hpp"

namespace evoart {

// Every tunable of a run. File format: flat `key = value` lines with
// `#` comments; unknown keys are rejected; flag overrides win.
struct RunConfig {
    std::string sitter_path;
    std::optional<std::string> mask_path;
    std::string out_dir = "out";
    std::optional<int> width;    // render override for emitted PNGs
    std::optional<int> height;

    int node_count = 30;
    int population = 40;
    int generations = 100;
    std::uint64_t seed = 1;

    double base_mutation = 0.02;
    double crossover_prob = 0.6;
    double p_uncle = 0.15;
    int tournament = 3;

    FocusParams focus;
    UncleParams uncle;

    int snapshot_every = 25;
    std::optional<double> target_fitness;  // stop early when best combined reaches it
};

void validate(const RunConfig& cfg);

// Parses the config file into `cfg` (fields not present keep their
// current values). Throws ConfigError on unknown keys or bad values.
void load_config_file(RunConfig& cfg, const std::string& path);

// The effective config, in the same key = value format.
std::string config_to_string(const RunConfig& cfg);

}  // namespace evoart
