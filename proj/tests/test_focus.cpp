#include <doctest.h>

#include <cmath>
#include <map>

#include "evoart/errors.hpp"
#include "evoart/focus.hpp"

using namespace evoart;

namespace {

FitnessReport report(double resemblance, double painterly, double w_r = 0.8) {
    FitnessReport r;
    r.resemblance = resemblance;
    r.composition = r.tonality = r.harmony = painterly;
    r.painterly = painterly;
    r.w_r = w_r;
    r.combined = w_r * resemblance + (1 - w_r) * painterly;
    return r;
}

FitnessReport rule_report(double composition, double tonality, double harmony) {
    FitnessReport r;
    r.composition = composition;
    r.tonality = tonality;
    r.harmony = harmony;
    r.painterly = painterly_combine(composition, tonality, harmony);
    r.combined = r.painterly;
    return r;
}

}  // namespace

TEST_CASE("focused -> associative after G_assoc+1 stagnant generations") {
    FocusState s;
    s.best_combined = 0.5;
    s.best_resemblance = 0.5;
    const FitnessReport flat = report(0.5, 0.5);
    for (int i = 0; i < 5; ++i) {
        s = update_focus(s, flat, 1);
        CHECK(s.mode == Mode::Focused);
        CHECK(s.w_r == doctest::Approx(0.8));
        CHECK(s.stagnation == i + 1);
    }
    s = update_focus(s, flat, 1);  // sixth stagnant generation
    CHECK(s.mode == Mode::Associative);
    CHECK(s.w_r == doctest::Approx(0.75));
}

TEST_CASE("associative slide clamps at the floor") {
    FocusState s;
    s.mode = Mode::Associative;
    s.w_r = 0.40;
    s.best_combined = 0.9;
    s.best_resemblance = 0.9;
    const FitnessReport flat = report(0.5, 0.5);
    s = update_focus(s, flat, 1);
    CHECK(s.w_r == doctest::Approx(0.35));
    s = update_focus(s, flat, 1);
    CHECK(s.w_r == doctest::Approx(0.35));
    CHECK(s.mode == Mode::Associative);
}

TEST_CASE("resemblance jump returns to focused in one update") {
    FocusState s;
    s.mode = Mode::Associative;
    s.w_r = 0.55;
    s.best_combined = 0.9;
    s.best_resemblance = 0.50;
    s = update_focus(s, report(0.53, 0.2), 1);
    CHECK(s.mode == Mode::Focused);
    CHECK(s.w_r == doctest::Approx(0.8));
    CHECK(s.stagnation == 0);
    CHECK(s.best_resemblance == doctest::Approx(0.53));
}

TEST_CASE("improvement resets stagnation; best_* track maxima") {
    FocusState s;
    s.best_combined = 0.4;
    s.best_resemblance = 0.4;
    s.stagnation = 3;
    s = update_focus(s, report(0.6, 0.6), 1);
    CHECK(s.stagnation == 0);
    CHECK(s.best_combined == doctest::Approx(0.6));
    s = update_focus(s, report(0.1, 0.1), 2);
    CHECK(s.best_combined == doctest::Approx(0.6));  // maxima retained
    CHECK(s.stagnation == 1);
}

TEST_CASE("digest repeat counter") {
    FocusState s;
    s.best_combined = 1.0;
    s.best_resemblance = 1.0;
    const FitnessReport flat = report(0.5, 0.5);
    s = update_focus(s, flat, 42);
    CHECK(s.digest_repeat == 0);  // first sighting
    for (int i = 1; i <= 4; ++i) {
        s = update_focus(s, flat, 42);
        CHECK(s.digest_repeat == i);
    }
    s = update_focus(s, flat, 43);
    CHECK(s.digest_repeat == 0);
}

TEST_CASE("state machine fuzz keeps the mode/weight invariant") {
    Rng rng(211);
    FocusState s;
    for (int i = 0; i < 5000; ++i) {
        const FitnessReport r = report(rng.uniform_real(), rng.uniform_real(), s.w_r);
        s = update_focus(s, r, rng.uniform(4));
        if (s.mode == Mode::Focused) {
            CHECK(s.w_r == doctest::Approx(0.8));
        } else {
            CHECK(s.w_r >= 0.35 - 1e-12);
            CHECK(s.w_r < 0.8);
        }
        CHECK(s.stagnation >= 0);
        CHECK(s.digest_repeat >= 0);
    }
}

TEST_CASE("update_focus is deterministic") {
    FocusState s;
    s.best_combined = 0.3;
    s.best_resemblance = 0.3;
    const FitnessReport r = report(0.35, 0.9);
    const FocusState a = update_focus(s, r, 7);
    const FocusState b = update_focus(s, r, 7);
    CHECK(a.mode == b.mode);
    CHECK(a.w_r == b.w_r);
    CHECK(a.stagnation == b.stagnation);
    CHECK(a.digest_repeat == b.digest_repeat);
}

TEST_CASE("uncle qualification") {
    CHECK(is_uncle(rule_report(0.95, 0.1, 0.1)));
    CHECK_FALSE(is_uncle(rule_report(0.5, 0.5, 0.5)));
    CHECK(is_uncle(rule_report(0.8, 0.8, 0.8)));  // painterly == 0.8, boundary inclusive
}

TEST_CASE("archive: insert, capacity eviction, dedup") {
    Rng rng(223);
    UncleArchive archive;
    Genotype g = random_genotype(4, rng);

    CHECK(archive.insert(g, rule_report(0.95, 0.1, 0.1), 1));
    CHECK(archive.size() == 1);

    // Duplicate digest ignored.
    CHECK_FALSE(archive.insert(g, rule_report(0.99, 0.1, 0.1), 1));
    CHECK(archive.size() == 1);

    // Unqualified rejected.
    CHECK_THROWS_AS(archive.insert(g, rule_report(0.2, 0.2, 0.2), 2), ValidationError);

    // 17 qualified inserts with distinct scores: capacity 16, minimum evicted.
    UncleArchive full;
    for (int i = 0; i < 17; ++i) {
        const double c = 0.90 + 0.005 * i;
        full.insert(random_genotype(4, rng), rule_report(c, 0.0, 0.0),
                    static_cast<std::uint64_t>(100 + i));
    }
    CHECK(full.size() == 16);
    double min_kept = 1.0;
    for (const auto& e : full.entries()) {
        min_kept = std::min(min_kept, e.report.composition);
        CHECK(is_uncle(e.report));
    }
    CHECK(min_kept == doctest::Approx(0.905));  // 0.90 entry evicted

    // Sorted by painterly descending.
    for (std::size_t i = 1; i < full.entries().size(); ++i)
        CHECK(full.entries()[i - 1].report.painterly >= full.entries()[i].report.painterly);
}

TEST_CASE("archive sampling") {
    Rng rng(227);
    UncleArchive empty;
    CHECK(empty.sample(3, rng).empty());

    UncleArchive one;
    const Genotype g = random_genotype(4, rng);
    one.insert(g, rule_report(0.95, 0.0, 0.0), 5);
    const auto got = one.sample(2, rng);
    REQUIRE(got.size() == 1);
    CHECK(got[0] == g);
}

TEST_CASE("sampling frequency proportional to painterly within 2% absolute") {
    Rng rng(229);
    UncleArchive archive;
    std::map<std::uint64_t, int> counts;
    std::map<std::uint64_t, double> weights;
    double total = 0.0;
    std::vector<Genotype> genotypes;
    for (int i = 0; i < 4; ++i) {
        const double c = 0.91 + 0.02 * i;
        Genotype g = random_genotype(3, rng);
        const FitnessReport r = rule_report(c, 0.0, 0.0);
        archive.insert(g, r, static_cast<std::uint64_t>(i));
        genotypes.push_back(g);
        weights[i] = r.painterly;
        total += r.painterly;
    }
    const int draws = 100000;
    for (int d = 0; d < draws; ++d) {
        const auto got = archive.sample(1, rng);
        for (std::size_t i = 0; i < genotypes.size(); ++i)
            if (got[0] == genotypes[i]) ++counts[i];
    }
    for (int i = 0; i < 4; ++i)
        CHECK(std::fabs(counts[i] / static_cast<double>(draws) - weights[i] / total) < 0.02);
}
