#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "evoart/rng.hpp"

namespace evoart {

// One indexed node of the program graph. Addresses: 0 = input x,
// 1 = input y, node j sits at address j+2. Node i may only reference
// addresses < i+2 (feed-forward).
struct NodeGene {
    int function;  // 1..13
    int in_a;
    int in_b;
    int param;     // 0..255

    bool operator==(const NodeGene&) const = default;
};

// Integer-encoded program: n node blocks plus three output addresses
// (H, S, V). Flat serialization is (n*4)+3 integers.
struct Genotype {
    std::vector<NodeGene> nodes;
    std::array<int, 3> outputs{0, 0, 0};

    int node_count() const { return static_cast<int>(nodes.size()); }
    int address_count() const { return node_count() + 2; }

    bool operator==(const Genotype&) const = default;
};

// Throws ValidationError naming the offending gene on any structural
// violation (bad function id, forward reference, out-of-range value).
void validate(const Genotype& g);

Genotype random_genotype(int node_count, Rng& rng);

std::vector<int> to_integers(const Genotype& g);
Genotype from_integers(const std::vector<int>& flat);

// CGP1 genome file: line 1 literal "CGP1", line 2 node count, then the
// flat serialization as whitespace-separated integers.
void write_genome(const Genotype& g, std::ostream& out);
void write_genome_file(const Genotype& g, const std::string& path);
Genotype read_genome(std::istream& in, const std::string& context);
Genotype read_genome_file(const std::string& path);

}  // namespace evoart
