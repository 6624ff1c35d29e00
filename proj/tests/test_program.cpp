#include <doctest.h>

#include <functional>
#include <set>
#include <vector>

#include "evoart/functions.hpp"
#include "evoart/image.hpp"
#include "evoart/program.hpp"

using namespace evoart;

namespace {

// Independent oracle: naive recursive backward reachability.
std::set<int> reachable_oracle(const Genotype& g) {
    std::set<int> active;
    std::function<void(int)> visit = [&](int addr) {
        if (addr < 2) return;
        const int pos = addr - 2;
        if (active.count(pos)) return;
        active.insert(pos);
        visit(g.nodes[pos].in_a);
        visit(g.nodes[pos].in_b);
    };
    for (int out : g.outputs) visit(out);
    return active;
}

// Oracle: evaluate every node regardless of activity, read outputs.
std::array<double, 3> evaluate_all_oracle(const Genotype& g, double x, double y) {
    std::vector<double> values(g.address_count(), 0.0);
    values[0] = x;
    values[1] = y;
    for (int i = 0; i < g.node_count(); ++i) {
        const NodeGene& n = g.nodes[i];
        values[i + 2] = apply_function(n.function, values[n.in_a], values[n.in_b], n.param);
    }
    return {values[g.outputs[0]], values[g.outputs[1]], values[g.outputs[2]]};
}

std::set<int> active_set(const ActiveProgram& p) {
    return std::set<int>(p.order.begin(), p.order.end());
}

}  // namespace

TEST_CASE("outputs on inputs bypass all nodes") {
    Genotype g;
    g.nodes = {{1, 0, 1, 0}, {5, 2, 0, 0}};
    g.outputs = {0, 0, 0};
    CHECK(decode_active(g).order.empty());
}

TEST_CASE("full chain activates every node") {
    const int n = 6;
    Genotype g;
    for (int i = 0; i < n; ++i) g.nodes.push_back({5, i + 1, i + 1, 0});
    g.outputs = {n + 1, n + 1, n + 1};
    CHECK(decode_active(g).order.size() == static_cast<std::size_t>(n));
}

TEST_CASE("decoder matches reachability oracle on random genotypes") {
    Rng rng(17);
    for (int i = 0; i < 1000; ++i) {
        const Genotype g = random_genotype(8, rng);
        CHECK(active_set(decode_active(g)) == reachable_oracle(g));
    }
}

TEST_CASE("evaluate_pixel: passthrough and inverted input") {
    Genotype pass;
    pass.nodes = {{1, 0, 1, 0}};
    pass.outputs = {0, 1, 0};
    const auto v = evaluate_pixel(decode_active(pass), {10.0, 20.0});
    CHECK(v[0] == doctest::Approx(10.0));
    CHECK(v[1] == doctest::Approx(20.0));
    CHECK(v[2] == doctest::Approx(10.0));

    Genotype inv;
    inv.nodes = {{5, 0, 0, 0}};  // 255 - x
    inv.outputs = {2, 2, 2};
    const auto w = evaluate_pixel(decode_active(inv), {255.0, 33.0});
    CHECK(w[0] == doctest::Approx(0.0));
    CHECK(w[1] == doctest::Approx(0.0));
    CHECK(w[2] == doctest::Approx(0.0));
}

TEST_CASE("evaluate_pixel matches evaluate-everything oracle") {
    Rng rng(23);
    for (int i = 0; i < 500; ++i) {
        const Genotype g = random_genotype(12, rng);
        const ActiveProgram p = decode_active(g);
        const double x = rng.uniform_real() * 255.0;
        const double y = rng.uniform_real() * 255.0;
        const auto got = evaluate_pixel(p, {x, y});
        const auto want = evaluate_all_oracle(g, x, y);
        for (int c = 0; c < 3; ++c) CHECK(got[c] == doctest::Approx(want[c]).epsilon(1e-12));
    }
}

TEST_CASE("constant program renders a uniform image") {
    Genotype c;
    c.nodes = {{5, 0, 0, 0}, {5, 2, 0, 0}, {4, 3, 3, 0}};  // |u - u| = 0 for any x
    c.outputs = {4, 4, 4};
    const ImageBuffer img = render(c, 9, 7);
    for (const auto& px : img.pixels) {
        CHECK(px[0] == img.pixels[0][0]);
        CHECK(px[1] == img.pixels[0][1]);
        CHECK(px[2] == img.pixels[0][2]);
    }
}

TEST_CASE("coordinate map is resolution independent") {
    // 16x16 coordinates at index 5k equal 64x64 coordinates at index 20k+... the
    // shared points are col/15 == col'/63 for col'=21*col/5; instead check the
    // closed form directly: corners agree at any size.
    Rng rng(31);
    const Genotype g = random_genotype(10, rng);
    const ImageBuffer small = render(g, 16, 16);
    const ImageBuffer big = render(g, 64, 64);
    // Corners share exact coordinates (0 and 255).
    CHECK(small.at(0, 0) == big.at(0, 0));
    CHECK(small.at(15, 0) == big.at(63, 0));
    CHECK(small.at(0, 15) == big.at(0, 63));
    CHECK(small.at(15, 15) == big.at(63, 63));
    // Interior shared points: col 5 of 16 (5/15=1/3) vs col 21 of 64 (21/63).
    CHECK(small.at(5, 5) == big.at(21, 21));
    CHECK(small.at(10, 10) == big.at(42, 42));
}

TEST_CASE("render is deterministic") {
    Rng rng(37);
    const Genotype g = random_genotype(16, rng);
    CHECK(render(g, 24, 24) == render(g, 24, 24));
    CHECK(image_digest(render(g, 24, 24)) == image_digest(render(g, 24, 24)));
}

TEST_CASE("width or height of 1 maps to coordinate 0") {
    Genotype g;
    g.nodes = {{1, 0, 1, 0}};
    g.outputs = {0, 1, 1};
    const ImageBuffer row = render(g, 4, 1);
    for (int x = 0; x < 4; ++x) CHECK(row.at(x, 0)[1] == 0);  // y stays 0
    const ImageBuffer col = render(g, 1, 4);
    for (int y = 0; y < 4; ++y) CHECK(col.at(0, y)[0] == 0);  // x stays 0
}

TEST_CASE("digest: equality, sensitivity, inactive-gene neutrality") {
    Rng rng(41);
    const Genotype g = random_genotype(10, rng);
    ImageBuffer img = render(g, 16, 16);
    const ImageBuffer copy = img;
    CHECK(image_digest(img) == image_digest(copy));

    // Single-pixel perturbation sweep.
    int collisions = 0;
    const std::uint64_t base = image_digest(img);
    for (int i = 0; i < 10000; ++i) {
        const std::size_t px = rng.uniform(img.pixels.size());
        const int ch = static_cast<int>(rng.uniform(3));
        const std::uint8_t old = img.pixels[px][ch];
        img.pixels[px][ch] = static_cast<std::uint8_t>(old ^ (1 + rng.uniform(255)));
        if (image_digest(img) == base) ++collisions;
        img.pixels[px][ch] = old;
    }
    CHECK(collisions == 0);
}
