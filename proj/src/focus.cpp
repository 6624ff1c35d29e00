#include "evoart/focus.hpp"

#include <algorithm>

#include "evoart/errors.hpp"

namespace evoart {

FocusState update_focus(const FocusState& s, const FitnessReport& gen_best,
                        std::uint64_t gen_best_digest, const FocusParams& params) {
    FocusState next = s;

    const bool stagnant = gen_best.combined <= s.best_combined + params.epsilon;
    next.stagnation = stagnant ? s.stagnation + 1 : 0;

    if (s.has_digest && gen_best_digest == s.last_digest)
        next.digest_repeat = s.digest_repeat + 1;
    else
        next.digest_repeat = 0;
    next.last_digest = gen_best_digest;
    next.has_digest = true;

    if (s.mode == Mode::Focused) {
        if (next.stagnation > params.g_assoc) {
            next.mode = Mode::Associative;
            next.w_r = params.w_r_assoc_start;
        }
    } else {
        if (gen_best.resemblance >= s.best_resemblance + params.delta_return) {
            // Marked resemblance improvement: snap back to focused.
            next.mode = Mode::Focused;
            next.w_r = params.w_r_focused;
            next.stagnation = 0;
        } else if (stagnant) {
            next.w_r = std::max(params.w_r_floor, s.w_r - params.slide_step);
        }
    }

    next.best_combined = std::max(s.best_combined, gen_best.combined);
    next.best_resemblance = std::max(s.best_resemblance, gen_best.resemblance);
    return next;
}

bool is_uncle(const FitnessReport& r, const UncleParams& params) {
    const double best_rule = std::max({r.composition, r.tonality, r.harmony});
    return best_rule >= params.single_rule_threshold ||
           r.painterly >= params.painterly_threshold;
}

bool UncleArchive::insert(const Genotype& g, const FitnessReport& report,
                          std::uint64_t digest) {
    if (!is_uncle(report, params_))
        throw ValidationError("archive insert: report does not qualify as an uncle");
    for (const UncleEntry& e : entries_)
        if (e.digest == digest) return false;

    auto pos = std::find_if(entries_.begin(), entries_.end(), [&](const UncleEntry& e) {
        return e.report.painterly < report.painterly;
    });
    entries_.insert(pos, UncleEntry{g, report, digest});
    if (entries_.size() > params_.capacity) entries_.pop_back();
    return true;
}

std::vector<Genotype> UncleArchive::sample(int k, Rng& rng) const {
    std::vector<Genotype> out;
    if (k <= 0 || entries_.empty()) return out;

    std::vector<double> weights;
    std::vector<std::size_t> index;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        weights.push_back(entries_[i].report.painterly);
        index.push_back(i);
    }
    const int draws = std::min<int>(k, static_cast<int>(entries_.size()));
    for (int d = 0; d < draws; ++d) {
        double total = 0.0;
        for (double w : weights) total += w;
        std::size_t pick = 0;
        if (total <= 0.0) {
            pick = static_cast<std::size_t>(rng.uniform(weights.size()));
        } else {
            const double target = rng.uniform_real() * total;
            double acc = 0.0;
            for (std::size_t i = 0; i < weights.size(); ++i) {
                acc += weights[i];
                pick = i;
                if (target < acc) break;
            }
        }
        out.push_back(entries_[index[pick]].genotype);
        weights.erase(weights.begin() + pick);
        index.erase(index.begin() + pick);
    }
    return out;
}

}  // namespace evoart
