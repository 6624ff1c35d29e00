#include "evoart/genotype.hpp"

#include <fstream>
#include <sstream>

#include "evoart/errors.hpp"
#include "evoart/functions.hpp"

namespace evoart {

void validate(const Genotype& g) {
    if (g.nodes.empty())
        throw ValidationError("genotype has no nodes");
    for (int i = 0; i < g.node_count(); ++i) {
        const NodeGene& n = g.nodes[i];
        const int limit = i + 2;
        if (n.function < 1 || n.function > kFunctionCount)
            throw ValidationError("node " + std::to_string(i) + ": function id " +
                                  std::to_string(n.function) + " out of range 1.." +
                                  std::to_string(kFunctionCount));
        if (n.in_a < 0 || n.in_a >= limit)
            throw ValidationError("node " + std::to_string(i) + ": input a address " +
                                  std::to_string(n.in_a) + " not in [0," +
                                  std::to_string(limit) + ")");
        if (n.in_b < 0 || n.in_b >= limit)
            throw ValidationError("node " + std::to_string(i) + ": input b address " +
                                  std::to_string(n.in_b) + " not in [0," +
                                  std::to_string(limit) + ")");
        if (n.param < 0 || n.param > 255)
            throw ValidationError("node " + std::to_string(i) + ": param " +
                                  std::to_string(n.param) + " not in [0,255]");
    }
    for (int k = 0; k < 3; ++k) {
        if (g.outputs[k] < 0 || g.outputs[k] >= g.address_count())
            throw ValidationError("output " + std::to_string(k) + ": address " +
                                  std::to_string(g.outputs[k]) + " not in [0," +
                                  std::to_string(g.address_count()) + ")");
    }
}

Genotype random_genotype(int node_count, Rng& rng) {
    Genotype g;
    g.nodes.reserve(node_count);
    for (int i = 0; i < node_count; ++i) {
        NodeGene n;
        n.function = rng.uniform_int(1, kFunctionCount);
        n.in_a = rng.uniform_int(0, i + 1);
        n.in_b = rng.uniform_int(0, i + 1);
        n.param = rng.uniform_int(0, 255);
        g.nodes.push_back(n);
    }
    for (int k = 0; k < 3; ++k)
        g.outputs[k] = rng.uniform_int(0, g.address_count() - 1);
    return g;
}

std::vector<int> to_integers(const Genotype& g) {
    std::vector<int> flat;
    flat.reserve(g.nodes.size() * 4 + 3);
    for (const NodeGene& n : g.nodes) {
        flat.push_back(n.function);
        flat.push_back(n.in_a);
        flat.push_back(n.in_b);
        flat.push_back(n.param);
    }
    for (int k = 0; k < 3; ++k) flat.push_back(g.outputs[k]);
    return flat;
}

Genotype from_integers(const std::vector<int>& flat) {
    if (flat.size() < 7 || flat.size() % 4 != 3)
        throw ValidationError("flat genotype length " + std::to_string(flat.size()) +
                              " is not (n*4)+3 with n >= 1");
    Genotype g;
    const std::size_t n = (flat.size() - 3) / 4;
    g.nodes.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        g.nodes.push_back(NodeGene{flat[i * 4], flat[i * 4 + 1],
                                   flat[i * 4 + 2], flat[i * 4 + 3]});
    }
    for (int k = 0; k < 3; ++k) g.outputs[k] = flat[n * 4 + k];
    validate(g);
    return g;
}

void write_genome(const Genotype& g, std::ostream& out) {
    out << "CGP1\n" << g.node_count() << "\n";
    for (const NodeGene& n : g.nodes)
        out << n.function << ' ' << n.in_a << ' ' << n.in_b << ' ' << n.param << '\n';
    out << g.outputs[0] << ' ' << g.outputs[1] << ' ' << g.outputs[2] << '\n';
}

void write_genome_file(const Genotype& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open genome file for writing: " + path);
    write_genome(g, out);
    if (!out) throw IoError("write failed: " + path);
}

Genotype read_genome(std::istream& in, const std::string& context) {
    std::string magic;
    if (!(in >> magic) || magic != "CGP1")
        throw ValidationError(context + ": missing CGP1 magic");
    int n = 0;
    if (!(in >> n) || n < 1)
        throw ValidationError(context + ": bad node count");
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(n) * 4 + 3);
    for (int i = 0; i < n * 4 + 3; ++i) {
        int v;
        if (!(in >> v))
            throw ValidationError(context + ": expected " + std::to_string(n * 4 + 3) +
                                  " integers, got " + std::to_string(i));
        flat.push_back(v);
    }
    try {
        return from_integers(flat);
    } catch (const ValidationError& e) {
        throw ValidationError(context + ": " + e.what());
    }
}

Genotype read_genome_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open genome file: " + path);
    return read_genome(in, path);
}

}  // namespace evoart
