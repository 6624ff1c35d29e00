#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "evoart/config.hpp"
#include "evoart/errors.hpp"
#include "evoart/evolve.hpp"
#include "evoart/png_io.hpp"
#include "evoart/program.hpp"
#include "evoart/sitter.hpp"

namespace fs = std::filesystem;
using namespace evoart;

namespace {

std::string genome_name(int generation) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "gen_%06d_best", generation);
    return buf;
}

int cmd_evolve(const std::optional<std::string>& config_path,
               const std::optional<std::string>& sitter_flag,
               const std::optional<std::string>& mask_flag,
               const std::optional<std::string>& out_flag,
               const std::optional<std::uint64_t>& seed_flag,
               const std::optional<int>& generations_flag) {
    RunConfig cfg;
    if (config_path) load_config_file(cfg, *config_path);
    if (sitter_flag) cfg.sitter_path = *sitter_flag;
    if (mask_flag) cfg.mask_path = *mask_flag;
    if (out_flag) cfg.out_dir = *out_flag;
    if (seed_flag) cfg.seed = *seed_flag;
    if (generations_flag) cfg.generations = *generations_flag;
    validate(cfg);

    const SitterContext sitter = build_sitter_files(cfg.sitter_path, cfg.mask_path);
    fs::create_directories(cfg.out_dir);
    const fs::path out_dir(cfg.out_dir);

    {
        std::ofstream cf(out_dir / "config.txt");
        if (!cf) throw IoError("cannot write " + (out_dir / "config.txt").string());
        cf << config_to_string(cfg);
    }

    const int out_w = cfg.width.value_or(sitter.width());
    const int out_h = cfg.height.value_or(sitter.height());
    auto hook = [&](int generation, const Individual& best) {
        if (generation % cfg.snapshot_every != 0 && generation != cfg.generations) return;
        const std::string stem = genome_name(generation);
        save_png(render(best.genotype, out_w, out_h), (out_dir / (stem + ".png")).string());
        write_genome_file(best.genotype, (out_dir / (stem + ".cgp")).string());
    };

    RunResult result = run(cfg, sitter, hook);

    {
        std::ofstream log(out_dir / "run.log");
        if (!log) throw IoError("cannot write " + (out_dir / "run.log").string());
        for (const std::string& line : result.log_lines) log << line << "\n";
    }
    for (std::size_t i = 0; i < result.final_population.members.size(); ++i) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "final_%03zu.cgp", i);
        write_genome_file(result.final_population.members[i].genotype,
                          (out_dir / buf).string());
    }
    const std::size_t final_best =
        result.best_per_generation.empty() ? 0 : result.best_per_generation.size() - 1;
    save_png(render(result.best_per_generation[final_best].genotype, out_w, out_h),
             (out_dir / "final_best.png").string());
    write_genome_file(result.best_per_generation[final_best].genotype,
                      (out_dir / "final_best.cgp").string());

    for (std::size_t i = 0; i < result.archive.entries().size(); ++i) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "uncle_%02zu", i);
        const Genotype& g = result.archive.entries()[i].genotype;
        save_png(render(g, out_w, out_h), (out_dir / (std::string(buf) + ".png")).string());
        write_genome_file(g, (out_dir / (std::string(buf) + ".cgp")).string());
    }
    std::cout << "completed " << result.best_per_generation.size() - 1
              << " generations, best combined "
              << result.best_per_generation[final_best].report->combined << "\n";
    return 0;
}

int cmd_render(const std::string& genome_path, int width, int height,
               const std::string& out_path) {
    const Genotype g = read_genome_file(genome_path);
    save_png(render(g, width, height), out_path);
    return 0;
}

int cmd_mate(const std::string& path_a, const std::string& path_b, int count,
             std::uint64_t seed, const std::string& out_dir,
             double mutation_rate, int width, int height) {
    const Genotype a = read_genome_file(path_a);
    const Genotype b = read_genome_file(path_b);
    Rng rng(seed);
    fs::create_directories(out_dir);
    for (int i = 0; i < count; ++i) {
        Genotype child = crossover(a, b, rng);
        child = mutate(child, mutation_rate, rng);
        char buf[64];
        std::snprintf(buf, sizeof(buf), "offspring_%03d", i);
        write_genome_file(child, (fs::path(out_dir) / (std::string(buf) + ".cgp")).string());
        save_png(render(child, width, height),
                 (fs::path(out_dir) / (std::string(buf) + ".png")).string());
    }
    return 0;
}

int cmd_score(const std::string& genome_path, const std::string& sitter_path,
              const std::optional<std::string>& mask_path, double w_r) {
    const Genotype g = read_genome_file(genome_path);
    const SitterContext sitter = build_sitter_files(sitter_path, mask_path);
    const Evaluation ev = evaluate(g, sitter, w_r, Mode::Focused);
    std::printf("%.6f %.6f %.6f %.6f %.6f %.6f\n", ev.report.resemblance,
                ev.report.composition, ev.report.tonality, ev.report.harmony,
                ev.report.painterly, ev.report.combined);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"CGP abstract portrait evolver"};
    app.require_subcommand(1);

    std::optional<std::string> config_path, sitter_flag, mask_flag, out_flag;
    std::optional<std::uint64_t> seed_flag;
    std::optional<int> generations_flag;
    auto* evolve_cmd = app.add_subcommand("evolve", "run an evolution");
    evolve_cmd->add_option("--config", config_path, "config file (key = value lines)");
    evolve_cmd->add_option("--sitter", sitter_flag, "sitter PNG (overrides config)");
    evolve_cmd->add_option("--mask", mask_flag, "face mask PNG (overrides config)");
    evolve_cmd->add_option("--out", out_flag, "output directory");
    evolve_cmd->add_option("--seed", seed_flag, "RNG seed");
    evolve_cmd->add_option("--generations", generations_flag, "generation count");

    std::string render_genome, render_out;
    int render_w = 256, render_h = 256;
    auto* render_cmd = app.add_subcommand("render", "render a saved genome");
    render_cmd->add_option("genome", render_genome, "CGP1 genome file")->required();
    render_cmd->add_option("--width", render_w, "output width");
    render_cmd->add_option("--height", render_h, "output height");
    render_cmd->add_option("--out", render_out, "output PNG path")->required();

    std::string mate_a, mate_b, mate_out = "offspring";
    int mate_count = 1, mate_w = 256, mate_h = 256;
    std::uint64_t mate_seed = 1;
    double mate_rate = 0.02;
    auto* mate_cmd = app.add_subcommand("mate", "recombine two saved genomes");
    mate_cmd->add_option("a", mate_a, "first parent genome")->required();
    mate_cmd->add_option("b", mate_b, "second parent genome")->required();
    mate_cmd->add_option("--count", mate_count, "number of offspring");
    mate_cmd->add_option("--seed", mate_seed, "RNG seed");
    mate_cmd->add_option("--out", mate_out, "output directory");
    mate_cmd->add_option("--mutation", mate_rate, "mutation rate after crossover");
    mate_cmd->add_option("--width", mate_w, "render width");
    mate_cmd->add_option("--height", mate_h, "render height");

    std::string score_genome, score_sitter;
    std::optional<std::string> score_mask;
    double score_wr = 0.8;
    auto* score_cmd = app.add_subcommand("score", "score a genome against a sitter");
    score_cmd->add_option("genome", score_genome, "CGP1 genome file")->required();
    score_cmd->add_option("--sitter", score_sitter, "sitter PNG")->required();
    score_cmd->add_option("--mask", score_mask, "face mask PNG");
    score_cmd->add_option("--w-r", score_wr, "resemblance weight");

    try {
        app.parse(argc, argv);
        if (evolve_cmd->parsed())
            return cmd_evolve(config_path, sitter_flag, mask_flag, out_flag, seed_flag,
                              generations_flag);
        if (render_cmd->parsed())
            return cmd_render(render_genome, render_w, render_h, render_out);
        if (mate_cmd->parsed())
            return cmd_mate(mate_a, mate_b, mate_count, mate_seed, mate_out, mate_rate,
                            mate_w, mate_h);
        if (score_cmd->parsed())
            return cmd_score(score_genome, score_sitter, score_mask, score_wr);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
