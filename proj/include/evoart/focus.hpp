#pragma once

#include <cstdint>
#include <vector>

#include "evoart/fitness.hpp"
#include "evoart/genotype.hpp"
#include "evoart/rng.hpp"

namespace evoart {

struct FocusParams {
    int g_assoc = 5;            // stagnant generations before going associative
    double slide_step = 0.05;   // w_r decrement per further stagnant generation
    double w_r_floor = 0.35;
    double delta_return = 0.02; // resemblance jump that snaps back to focused
    double epsilon = 1e-6;      // improvement deadband for stagnation
    double w_r_focused = 0.8;
    double w_r_assoc_start = 0.75;
};

// Controller state. Focused holds w_r at 0.8; associative slides it
// down to the floor while stagnation persists.
struct FocusState {
    Mode mode = Mode::Focused;
    double w_r = 0.8;
    int stagnation = 0;
    double best_combined = -1.0;
    double best_resemblance = -1.0;
    int digest_repeat = 0;
    std::uint64_t last_digest = 0;
    bool has_digest = false;
};

FocusState update_focus(const FocusState& s, const FitnessReport& gen_best,
                        std::uint64_t gen_best_digest, const FocusParams& params = {});

struct UncleParams {
    double single_rule_threshold = 0.9;
    double painterly_threshold = 0.8;
    std::size_t capacity = 16;
};

bool is_uncle(const FitnessReport& r, const UncleParams& params = {});

struct UncleEntry {
    Genotype genotype;
    FitnessReport report;
    std::uint64_t digest = 0;
};

// Strange-uncle archive: high-painterly individuals kept aside and
// mated back into the population. Sorted by painterly descending,
// deduplicated by phenotype digest, bounded capacity.
class UncleArchive {
public:
    explicit UncleArchive(UncleParams params = {}) : params_(params) {}

    // Throws ValidationError when the report does not qualify.
    // Returns false when the digest is already archived.
    bool insert(const Genotype& g, const FitnessReport& report, std::uint64_t digest);

    // k entries without replacement, painterly-proportional.
    std::vector<Genotype> sample(int k, Rng& rng) const;

    const std::vector<UncleEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const UncleParams& params() const { return params_; }

private:
    UncleParams params_;
    std::vector<UncleEntry> entries_;
};

}  // namespace evoart
