#include "evoart/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "evoart/errors.hpp"

namespace evoart {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

int parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': bad integer '" + value + "'");
    }
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size() || !std::isfinite(v)) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': bad number '" + value + "'");
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': bad integer '" + value + "'");
    }
}

}  // namespace

void validate(const RunConfig& cfg) {
    auto probability = [](const char* name, double v) {
        if (v < 0.0 || v > 1.0)
            throw ConfigError(std::string(name) + " must be in [0,1]");
    };
    if (cfg.sitter_path.empty()) throw ConfigError("sitter path is required");
    if (cfg.node_count < 1) throw ConfigError("nodes must be >= 1");
    if (cfg.population < 1) throw ConfigError("population must be >= 1");
    if (cfg.generations < 0) throw ConfigError("generations must be >= 0");
    if (cfg.tournament < 1) throw ConfigError("tournament must be >= 1");
    if (cfg.snapshot_every < 1) throw ConfigError("snapshot_every must be >= 1");
    if (cfg.width && *cfg.width < 1) throw ConfigError("width must be >= 1");
    if (cfg.height && *cfg.height < 1) throw ConfigError("height must be >= 1");
    probability("base_mutation", cfg.base_mutation);
    probability("crossover_prob", cfg.crossover_prob);
    probability("p_uncle", cfg.p_uncle);
    probability("w_r_floor", cfg.focus.w_r_floor);
    probability("delta_return", cfg.focus.delta_return);
    probability("slide_step", cfg.focus.slide_step);
    probability("uncle_single_threshold", cfg.uncle.single_rule_threshold);
    probability("uncle_painterly_threshold", cfg.uncle.painterly_threshold);
    if (cfg.focus.g_assoc < 1) throw ConfigError("g_assoc must be >= 1");
    if (cfg.focus.w_r_floor >= 0.8) throw ConfigError("w_r_floor must be < 0.8");
    if (cfg.uncle.capacity < 1) throw ConfigError("archive_capacity must be >= 1");
}

void load_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "sitter") cfg.sitter_path = value;
        else if (key == "mask") cfg.mask_path = value;
        else if (key == "out_dir") cfg.out_dir = value;
        else if (key == "width") cfg.width = parse_int(key, value);
        else if (key == "height") cfg.height = parse_int(key, value);
        else if (key == "nodes") cfg.node_count = parse_int(key, value);
        else if (key == "population") cfg.population = parse_int(key, value);
        else if (key == "generations") cfg.generations = parse_int(key, value);
        else if (key == "seed") cfg.seed = parse_u64(key, value);
        else if (key == "base_mutation") cfg.base_mutation = parse_double(key, value);
        else if (key == "crossover_prob") cfg.crossover_prob = parse_double(key, value);
        else if (key == "p_uncle") cfg.p_uncle = parse_double(key, value);
        else if (key == "tournament") cfg.tournament = parse_int(key, value);
        else if (key == "g_assoc") cfg.focus.g_assoc = parse_int(key, value);
        else if (key == "slide_step") cfg.focus.slide_step = parse_double(key, value);
        else if (key == "w_r_floor") cfg.focus.w_r_floor = parse_double(key, value);
        else if (key == "delta_return") cfg.focus.delta_return = parse_double(key, value);
        else if (key == "uncle_single_threshold") cfg.uncle.single_rule_threshold = parse_double(key, value);
        else if (key == "uncle_painterly_threshold") cfg.uncle.painterly_threshold = parse_double(key, value);
        else if (key == "archive_capacity") cfg.uncle.capacity = static_cast<std::size_t>(parse_int(key, value));
        else if (key == "snapshot_every") cfg.snapshot_every = parse_int(key, value);
        else if (key == "target_fitness") cfg.target_fitness = parse_double(key, value);
        else
            throw ConfigError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
}

std::string config_to_string(const RunConfig& cfg) {
    std::ostringstream out;
    out << "sitter = " << cfg.sitter_path << "\n";
    if (cfg.mask_path) out << "mask = " << *cfg.mask_path << "\n";
    out << "out_dir = " << cfg.out_dir << "\n";
    if (cfg.width) out << "width = " << *cfg.width << "\n";
    if (cfg.height) out << "height = " << *cfg.height << "\n";
    out << "nodes = " << cfg.node_count << "\n"
        << "population = " << cfg.population << "\n"
        << "generations = " << cfg.generations << "\n"
        << "seed = " << cfg.seed << "\n"
        << "base_mutation = " << cfg.base_mutation << "\n"
        << "crossover_prob = " << cfg.crossover_prob << "\n"
        << "p_uncle = " << cfg.p_uncle << "\n"
        << "tournament = " << cfg.tournament << "\n"
        << "g_assoc = " << cfg.focus.g_assoc << "\n"
        << "slide_step = " << cfg.focus.slide_step << "\n"
        << "w_r_floor = " << cfg.focus.w_r_floor << "\n"
        << "delta_return = " << cfg.focus.delta_return << "\n"
        << "uncle_single_threshold = " << cfg.uncle.single_rule_threshold << "\n"
        << "uncle_painterly_threshold = " << cfg.uncle.painterly_threshold << "\n"
        << "archive_capacity = " << cfg.uncle.capacity << "\n"
        << "snapshot_every = " << cfg.snapshot_every << "\n";
    if (cfg.target_fitness) out << "target_fitness = " << *cfg.target_fitness << "\n";
    return out.str();
}

}  // namespace evoart
