#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "evoart/config.hpp"
#include "evoart/fitness.hpp"
#include "evoart/focus.hpp"
#include "evoart/genotype.hpp"
#include "evoart/rng.hpp"
#include "evoart/sitter.hpp"

namespace evoart {

struct Individual {
    Genotype genotype;
    std::optional<FitnessReport> report;
    std::optional<std::uint64_t> digest;
};

struct Population {
    std::vector<Individual> members;
    int generation = 0;
};

// Per-gene resample at probability `rate`; replacement values are
// uniform over each gene's legal range.
Genotype mutate(const Genotype& g, double rate, Rng& rng);

// base * (1 + 0.15*min(stagnation,10)), capped at 0.25.
double adaptive_rate(double base, int stagnation);

// Whole-node crossover: child node i is a verbatim copy of one
// parent's node i (fair coin), each output address likewise.
Genotype crossover(const Genotype& a, const Genotype& b, Rng& rng);

// Neutral drift escape: when the elite phenotype has repeated for more
// than three generations, swap in an iso-phenotype peer with different
// genes, or re-randomize the incumbent's inactive genes (which cannot
// change the render).
Individual neutral_reselect(const Individual& incumbent,
                            const std::vector<Individual>& peers, Rng& rng);

// One generation record for run.log (comma-separated).
std::string log_record(int generation, const FitnessReport& best, const FocusState& focus,
                       double mutation_rate, std::size_t archive_size);

constexpr const char* kLogHeader =
    "generation,best_combined,best_resemblance,composition,tonality,harmony,"
    "painterly,mode,w_r,mutation_rate,stagnation,archive_size";

// Evaluates any unevaluated members under focus.w_r (already-evaluated
// members get their combined score re-stamped when w_r moved), feeds
// qualified uncles to the archive, and updates the focus state with
// the generation best. Returns the index of the best member.
std::size_t evaluate_generation(Population& pop, const SitterContext& sitter,
                                FocusState& focus, UncleArchive& archive,
                                const RunConfig& cfg);

// Breeds the next generation from an evaluated population: single
// elite (neutral-reselected when armed), remainder by tournament
// selection, optional archive mating, crossover and adaptive mutation.
// Then evaluates the new generation as above.
void generation_step(Population& pop, const SitterContext& sitter, FocusState& focus,
                     UncleArchive& archive, const RunConfig& cfg, Rng& rng);

struct RunResult {
    std::vector<Individual> best_per_generation;
    Population final_population;
    UncleArchive archive;
    std::vector<FocusState> focus_trace;
    std::vector<std::string> log_lines;  // header + one record per generation
};

// Optional hook called after each generation with the generation
// number and its best individual (used for snapshot emission).
using SnapshotHook = std::function<void(int, const Individual&)>;

RunResult run(const RunConfig& cfg, const SitterContext& sitter,
              const SnapshotHook& hook = {});

}  // namespace evoart
