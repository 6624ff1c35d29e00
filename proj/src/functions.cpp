#include "evoart/functions.hpp"

#include <algorithm>
#include <cmath>

namespace evoart {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Floored real modulo; always in [0, m) for m > 0.
double fmod_floor(double a, double m) {
    double r = std::fmod(a, m);
    return r < 0.0 ? r + m : r;
}

int round_byte(double v) {
    return std::clamp(static_cast<int>(std::lround(v)), 0, 255);
}

}  // namespace

double apply_function(int function_id, double x, double y, int param) {
    double out = 0.0;
    switch (function_id) {
        case 1:
            out = static_cast<double>(round_byte(x) | round_byte(y));
            break;
        case 2:
            out = static_cast<double>(param & round_byte(x));
            break;
        case 3:
            out = fmod_floor(x + y, 255.0);
            break;
        case 4:
            out = std::fabs(x - y);
            break;
        case 5:
            out = 255.0 - x;
            break;
        case 6:
            out = std::fabs(std::cos(x)) * 255.0;
            break;
        case 7:
            out = std::fabs(std::tan(fmod_floor(x, 45.0) * kPi / 180.0)) * 255.0;
            break;
        case 8: {
            double t = std::tan(x);
            out = std::isfinite(t) ? fmod_floor(std::fabs(t) * 255.0, 255.0) : 0.0;
            break;
        }
        case 9: {
            double dx = x - param, dy = y - param;
            out = std::min(std::sqrt(dx * dx + dy * dy), 255.0);
            break;
        }
        case 10:
            out = fmod_floor(x, static_cast<double>(param) + 1.0) + (255.0 - param);
            break;
        case 11:
            out = (x + y) / 2.0;
            break;
        case 12:
            out = x > y ? 255.0 * (y + 1.0) / (x + 1.0)
                        : 255.0 * (x + 1.0) / (y + 1.0);
            break;
        case 13: {
            double dx = x - param, dy = y - param;
            out = fmod_floor(std::sqrt(dx * dx + dy * dy), 255.0);
            break;
        }
        default:
            break;
    }
    if (!std::isfinite(out)) out = 0.0;
    return std::clamp(out, 0.0, 255.0);
}

}  // namespace evoart
