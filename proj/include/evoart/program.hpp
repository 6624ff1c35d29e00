#pragma once

#include <vector>

#include "evoart/genotype.hpp"
#include "evoart/image.hpp"

namespace evoart {

// Pixel coordinate in program space: column/row scaled to [0,255].
struct PixelCoord {
    double x;
    double y;
};

// The expressed part of a genotype: node positions reachable backward
// from the three outputs, in ascending evaluation order. Inactive
// nodes never touch any pixel value.
struct ActiveProgram {
    const Genotype* genotype = nullptr;
    std::vector<int> order;             // active positions, ascending
    std::vector<bool> active;           // indexed by node position

    bool is_active(int position) const { return active[position]; }
};

ActiveProgram decode_active(const Genotype& g);

// Evaluates active nodes in order; addresses 0/1 read c.x/c.y.
// Returns the H,S,V values at the output addresses, each in [0,255].
std::array<double, 3> evaluate_pixel(const ActiveProgram& p, PixelCoord c);

// Pixel (col,row) is evaluated at x = 255*col/(width-1),
// y = 255*row/(height-1); a 1-wide/1-tall axis maps to coordinate 0.
// Channels round to nearest integer.
ImageBuffer render(const Genotype& g, int width, int height);

}  // namespace evoart
