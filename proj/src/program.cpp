#include "evoart/program.hpp"

#include <cmath>

#include "evoart/errors.hpp"
#include "evoart/functions.hpp"

namespace evoart {

ActiveProgram decode_active(const Genotype& g) {
    validate(g);
    const int n = g.node_count();
    ActiveProgram p;
    p.genotype = &g;
    p.active.assign(n, false);

    // Backward reachability from the three outputs; addresses 0/1 are
    // the inputs, node j sits at address j+2.
    std::vector<int> stack;
    for (int addr : g.outputs)
        if (addr >= 2) stack.push_back(addr - 2);
    while (!stack.empty()) {
        const int pos = stack.back();
        stack.pop_back();
        if (p.active[pos]) continue;
        p.active[pos] = true;
        const NodeGene& node = g.nodes[pos];
        if (node.in_a >= 2) stack.push_back(node.in_a - 2);
        if (node.in_b >= 2) stack.push_back(node.in_b - 2);
    }
    for (int i = 0; i < n; ++i)
        if (p.active[i]) p.order.push_back(i);
    return p;
}

std::array<double, 3> evaluate_pixel(const ActiveProgram& p, PixelCoord c) {
    const Genotype& g = *p.genotype;
    std::vector<double> values(g.address_count(), 0.0);
    values[0] = c.x;
    values[1] = c.y;
    for (int pos : p.order) {
        const NodeGene& node = g.nodes[pos];
        values[pos + 2] = apply_function(node.function, values[node.in_a],
                                         values[node.in_b], node.param);
    }
    return {values[g.outputs[0]], values[g.outputs[1]], values[g.outputs[2]]};
}

ImageBuffer render(const Genotype& g, int width, int height) {
    if (width < 1 || height < 1)
        throw ValidationError("render: dimensions must be >= 1");
    const ActiveProgram p = decode_active(g);
    ImageBuffer img(width, height);
    std::vector<double> values(g.address_count(), 0.0);  // reused per pixel
    for (int row = 0; row < height; ++row) {
        const double y = height == 1 ? 0.0 : 255.0 * row / (height - 1);
        for (int col = 0; col < width; ++col) {
            const double x = width == 1 ? 0.0 : 255.0 * col / (width - 1);
            values[0] = x;
            values[1] = y;
            for (int pos : p.order) {
                const NodeGene& node = g.nodes[pos];
                values[pos + 2] = apply_function(node.function, values[node.in_a],
                                                 values[node.in_b], node.param);
            }
            const std::array<double, 3> hsv = {values[g.outputs[0]],
                                               values[g.outputs[1]],
                                               values[g.outputs[2]]};
            img.at(col, row) = {static_cast<std::uint8_t>(std::lround(hsv[0])),
                                static_cast<std::uint8_t>(std::lround(hsv[1])),
                                static_cast<std::uint8_t>(std::lround(hsv[2]))};
        }
    }
    return img;
}

}  // namespace evoart
