#include "evoart/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "evoart/errors.hpp"
#include "evoart/functions.hpp"
#include "evoart/program.hpp"

namespace evoart {

Genotype mutate(const Genotype& g, double rate, Rng& rng) {
    Genotype out = g;
    for (int i = 0; i < out.node_count(); ++i) {
        NodeGene& n = out.nodes[i];
        if (rng.bernoulli(rate)) n.function = rng.uniform_int(1, kFunctionCount);
        if (rng.bernoulli(rate)) n.in_a = rng.uniform_int(0, i + 1);
        if (rng.bernoulli(rate)) n.in_b = rng.uniform_int(0, i + 1);
        if (rng.bernoulli(rate)) n.param = rng.uniform_int(0, 255);
    }
    for (int k = 0; k < 3; ++k)
        if (rng.bernoulli(rate)) out.outputs[k] = rng.uniform_int(0, out.address_count() - 1);
    return out;
}

double adaptive_rate(double base, int stagnation) {
    return std::min(0.25, base * (1.0 + 0.15 * std::min(stagnation, 10)));
}

Genotype crossover(const Genotype& a, const Genotype& b, Rng& rng) {
    if (a.node_count() != b.node_count())
        throw ValidationError("crossover: node counts differ (" +
                              std::to_string(a.node_count()) + " vs " +
                              std::to_string(b.node_count()) + ")");
    Genotype child;
    child.nodes.reserve(a.nodes.size());
    for (int i = 0; i < a.node_count(); ++i)
        child.nodes.push_back(rng.bernoulli(0.5) ? a.nodes[i] : b.nodes[i]);
    for (int k = 0; k < 3; ++k)
        child.outputs[k] = rng.bernoulli(0.5) ? a.outputs[k] : b.outputs[k];
    return child;
}

Individual neutral_reselect(const Individual& incumbent,
                            const std::vector<Individual>& peers, Rng& rng) {
    std::vector<const Individual*> iso;
    for (const Individual& p : peers) {
        if (p.digest && incumbent.digest && *p.digest == *incumbent.digest &&
            !(p.genotype == incumbent.genotype))
            iso.push_back(&p);
    }
    if (!iso.empty())
        return *iso[rng.uniform(iso.size())];

    // No iso-phenotype peer: re-randomize the inactive genes. Their
    // values never reach an output, so the render is unchanged.
    Individual out = incumbent;
    const ActiveProgram p = decode_active(out.genotype);
    for (int i = 0; i < out.genotype.node_count(); ++i) {
        if (p.is_active(i)) continue;
        NodeGene& n = out.genotype.nodes[i];
        n.function = rng.uniform_int(1, kFunctionCount);
        n.in_a = rng.uniform_int(0, i + 1);
        n.in_b = rng.uniform_int(0, i + 1);
        n.param = rng.uniform_int(0, 255);
    }
    return out;
}

std::string log_record(int generation, const FitnessReport& best, const FocusState& focus,
                       double mutation_rate, std::size_t archive_size) {
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "%d,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%s,%.4f,%.4f,%d,%zu",
                  generation, best.combined, best.resemblance, best.composition,
                  best.tonality, best.harmony, best.painterly, mode_name(focus.mode),
                  focus.w_r, mutation_rate, focus.stagnation, archive_size);
    return buf;
}

namespace {

std::size_t best_index(const Population& pop) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pop.members.size(); ++i)
        if (pop.members[i].report->combined > pop.members[best].report->combined)
            best = i;
    return best;
}

std::size_t tournament_select(const Population& pop, int size, Rng& rng) {
    std::size_t winner = rng.uniform(pop.members.size());
    for (int i = 1; i < size; ++i) {
        const std::size_t c = rng.uniform(pop.members.size());
        if (pop.members[c].report->combined > pop.members[winner].report->combined)
            winner = c;
    }
    return winner;
}

}  // namespace

std::size_t evaluate_generation(Population& pop, const SitterContext& sitter,
                                FocusState& focus, UncleArchive& archive,
                                const RunConfig& cfg) {
    for (Individual& ind : pop.members) {
        if (!ind.report) {
            Evaluation ev = evaluate(ind.genotype, sitter, focus.w_r, focus.mode);
            ind.report = ev.report;
            ind.digest = ev.digest;
        } else if (ind.report->w_r != focus.w_r) {
            // Component scores are w_r-independent; re-stamp the blend.
            ind.report->w_r = focus.w_r;
            ind.report->mode = focus.mode;
            ind.report->combined =
                combined_fitness(ind.report->resemblance, ind.report->painterly, focus.w_r);
        }
    }
    for (Individual& ind : pop.members)
        if (is_uncle(*ind.report, archive.params()))
            archive.insert(ind.genotype, *ind.report, *ind.digest);

    const std::size_t best = best_index(pop);
    focus = update_focus(focus, *pop.members[best].report, *pop.members[best].digest,
                         cfg.focus);
    return best;
}

void generation_step(Population& pop, const SitterContext& sitter, FocusState& focus,
                     UncleArchive& archive, const RunConfig& cfg, Rng& rng) {
    const std::size_t elite_idx = best_index(pop);
    Individual elite = pop.members[elite_idx];
    if (focus.digest_repeat > 3)
        elite = neutral_reselect(elite, pop.members, rng);

    const double rate = adaptive_rate(cfg.base_mutation, focus.stagnation);
    Population next;
    next.generation = pop.generation + 1;
    next.members.push_back(std::move(elite));

    // Draw order per slot: parent A tournament, archive coin, parent B
    // (archive sample or tournament), crossover coin, crossover draws,
    // mutation draws.
    while (next.members.size() < pop.members.size()) {
        const Genotype& parent_a = pop.members[tournament_select(pop, cfg.tournament, rng)].genotype;
        Genotype child;
        const bool from_archive = !archive.empty() && rng.bernoulli(cfg.p_uncle);
        Genotype parent_b = from_archive
                                ? archive.sample(1, rng).front()
                                : pop.members[tournament_select(pop, cfg.tournament, rng)].genotype;
        if (rng.bernoulli(cfg.crossover_prob))
            child = crossover(parent_a, parent_b, rng);
        else
            child = parent_a;
        child = mutate(child, rate, rng);
        next.members.push_back(Individual{std::move(child), std::nullopt, std::nullopt});
    }
    pop = std::move(next);
    evaluate_generation(pop, sitter, focus, archive, cfg);
}

RunResult run(const RunConfig& cfg, const SitterContext& sitter, const SnapshotHook& hook) {
    validate(cfg);
    Rng rng(cfg.seed);
    RunResult result;
    result.archive = UncleArchive(cfg.uncle);
    FocusState focus;
    focus.w_r = cfg.focus.w_r_focused;

    Population pop;
    pop.members.reserve(cfg.population);
    for (int i = 0; i < cfg.population; ++i)
        pop.members.push_back(Individual{random_genotype(cfg.node_count, rng),
                                         std::nullopt, std::nullopt});

    result.log_lines.push_back(kLogHeader);
    auto record = [&](double rate) {
        const std::size_t best = best_index(pop);
        result.best_per_generation.push_back(pop.members[best]);
        result.focus_trace.push_back(focus);
        result.log_lines.push_back(log_record(pop.generation, *pop.members[best].report,
                                              focus, rate, result.archive.size()));
        if (hook) hook(pop.generation, pop.members[best]);
        return pop.members[best].report->combined;
    };

    evaluate_generation(pop, sitter, focus, result.archive, cfg);
    double best_combined = record(adaptive_rate(cfg.base_mutation, 0));

    for (int g = 1; g <= cfg.generations; ++g) {
        if (cfg.target_fitness && best_combined >= *cfg.target_fitness) break;
        const double rate = adaptive_rate(cfg.base_mutation, focus.stagnation);
        generation_step(pop, sitter, focus, result.archive, cfg, rng);
        best_combined = record(rate);
    }
    result.final_population = std::move(pop);
    return result;
}

}  // namespace evoart
