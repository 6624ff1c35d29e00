#include <doctest.h>

#include <cmath>

#include "evoart/functions.hpp"
#include "evoart/rng.hpp"

using namespace evoart;

TEST_CASE("listed formula endpoints") {
    CHECK(apply_function(5, 0.0, 0.0, 0) == doctest::Approx(255.0));
    CHECK(apply_function(11, 100.0, 200.0, 0) == doctest::Approx(150.0));
    CHECK(apply_function(9, 77.0, 77.0, 77) == doctest::Approx(0.0));
    CHECK(apply_function(1, 12.0, 10.0, 0) == doctest::Approx(14.0));  // 0b1100 | 0b1010
}

TEST_CASE("spot values per function") {
    CHECK(apply_function(2, 255.0, 0.0, 0x0F) == doctest::Approx(15.0));
    CHECK(apply_function(3, 200.0, 100.0, 0) == doctest::Approx(45.0));
    CHECK(apply_function(4, 30.0, 100.0, 0) == doctest::Approx(70.0));
    CHECK(apply_function(6, 0.0, 0.0, 0) == doctest::Approx(255.0));
    CHECK(apply_function(12, 100.0, 100.0, 0) == doctest::Approx(255.0));
    CHECK(apply_function(12, 255.0, 0.0, 0) == doctest::Approx(255.0 / 256.0));
    // 10: x mod (param+1) + (255 - param)
    CHECK(apply_function(10, 7.0, 0.0, 3) == doctest::Approx(3.0 + 252.0).epsilon(1e-12));
    CHECK(apply_function(13, 100.0, 100.0, 100) == doctest::Approx(0.0));
}

TEST_CASE("function 7 stays under 255 (45-degree cap)") {
    Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
        const double x = rng.uniform_real() * 255.0;
        const double v = apply_function(7, x, 0.0, 0);
        CHECK(v >= 0.0);
        CHECK(v <= 255.0);
    }
}

TEST_CASE("totality: all functions finite in [0,255] over 1e5 points each") {
    Rng rng(42);
    for (int f = 1; f <= kFunctionCount; ++f) {
        int violations = 0;
        for (int i = 0; i < 100000; ++i) {
            const double x = rng.uniform_real() * 255.0;
            const double y = rng.uniform_real() * 255.0;
            const int param = rng.uniform_int(0, 255);
            const double v = apply_function(f, x, y, param);
            if (!std::isfinite(v) || v < 0.0 || v > 255.0) ++violations;
        }
        CHECK(violations == 0);
    }
}

TEST_CASE("pure and deterministic") {
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        const int f = rng.uniform_int(1, kFunctionCount);
        const double x = rng.uniform_real() * 255.0;
        const double y = rng.uniform_real() * 255.0;
        const int param = rng.uniform_int(0, 255);
        CHECK(apply_function(f, x, y, param) == apply_function(f, x, y, param));
    }
}
