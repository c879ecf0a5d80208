#include <colorstat/cooccurrence.hpp>

#include <colorstat/rng.hpp>

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace colorstat;

namespace {

CodePlane plane_1xn(const std::vector<std::uint8_t>& codes, int levels) {
    CodePlane p(static_cast<int>(codes.size()), 1, levels);
    p.codes = codes;
    return p;
}

}  // namespace

TEST_CASE("cooccurrence on tiny planes") {
    const CooccurrenceMatrix m = cooccurrence(plane_1xn({0, 0, 0}, 2), 3, {1, 0});
    REQUIRE(m.bins.size() == 8);
    CHECK(m.bins[0] == doctest::Approx(1.0));
    for (std::size_t i = 1; i < 8; ++i) CHECK(m.bins[i] == 0.0);

    const CooccurrenceMatrix m2 = cooccurrence(plane_1xn({0, 1, 0, 1}, 2), 3, {1, 0});
    // chains 010 and 101
    CHECK(m2.bins[0b010] == doctest::Approx(0.5));
    CHECK(m2.bins[0b101] == doctest::Approx(0.5));
    CHECK(std::accumulate(m2.bins.begin(), m2.bins.end(), 0.0) == doctest::Approx(1.0));
}

TEST_CASE("cooccurrence plane too small") {
    CodePlane p(5, 2, 2);  // height 2 < order 3 along (0,1)
    CHECK_THROWS_AS(cooccurrence(p, 3, {0, 1}), PlaneTooSmall);
    CHECK_NOTHROW(cooccurrence(p, 3, {1, 0}));
}

TEST_CASE("merged lengths match the closed form") {
    CHECK(merged_length(8, 3) == 288);
    CHECK(merged_length(5, 3) == 75);
    CHECK(merged_length(2, 3) == 6);   // (8 + 4) / 2
    CHECK(merged_length(3, 2) == 6);   // (9 + 3) / 2
}

TEST_CASE("symmetric merge of the palindrome pair") {
    CooccurrenceMatrix m;
    m.levels = 2;
    m.order = 3;
    m.bins.assign(8, 0.0);
    m.bins[0b010] = 0.5;
    m.bins[0b101] = 0.5;

    const std::vector<double> merged = symmetric_merge(m);
    REQUIRE(merged.size() == 6);
    // representatives in lexicographic order: 000 001 010 011 101 111
    CHECK(merged[2] == doctest::Approx(0.5));  // palindrome 010 passes through
    CHECK(merged[4] == doctest::Approx(0.5));  // palindrome 101 passes through
    CHECK(std::accumulate(merged.begin(), merged.end(), 0.0) == doctest::Approx(1.0));
}

TEST_CASE("symmetric merge pairs distinct reversals") {
    CooccurrenceMatrix m;
    m.levels = 2;
    m.order = 3;
    m.bins.assign(8, 0.0);
    m.bins[0b001] = 0.25;
    m.bins[0b100] = 0.75;

    const std::vector<double> merged = symmetric_merge(m);
    CHECK(merged[1] == doctest::Approx(1.0));  // entry keyed by 001
}

TEST_CASE("symmetric merge preserves total mass") {
    Rng rng(99);
    for (int levels : {2, 5, 8}) {
        CooccurrenceMatrix m;
        m.levels = levels;
        m.order = 3;
        m.bins.resize(static_cast<std::size_t>(levels * levels * levels));
        double total = 0.0;
        for (double& b : m.bins) {
            b = rng.uniform01();
            total += b;
        }
        for (double& b : m.bins) b /= total;

        const std::vector<double> merged = symmetric_merge(m);
        CHECK(merged.size() == merged_length(levels, 3));
        const double mass = std::accumulate(merged.begin(), merged.end(), 0.0);
        CHECK(std::fabs(mass - 1.0) < 1e-12);
    }
}

TEST_CASE("cooccurrence counts match a direct count on random planes") {
    Rng rng(123);
    CodePlane p(13, 11, 5);
    for (auto& c : p.codes) c = static_cast<std::uint8_t>(rng.below(5));

    for (Offset off : {Offset{1, 0}, Offset{0, 1}, Offset{1, 1}}) {
        const CooccurrenceMatrix m = cooccurrence(p, 3, off);
        const int xmax = p.width - 2 * off.dx;
        const int ymax = p.height - 2 * off.dy;

        // independent recount of one specific chain value
        for (std::size_t probe : {std::size_t{0}, std::size_t{31}, std::size_t{124}}) {
            const int v1 = static_cast<int>(probe / 25);
            const int v2 = static_cast<int>((probe / 5) % 5);
            const int v3 = static_cast<int>(probe % 5);
            double count = 0;
            for (int y = 0; y < ymax; ++y) {
                for (int x = 0; x < xmax; ++x) {
                    if (p.at(x, y) == v1 && p.at(x + off.dx, y + off.dy) == v2 &&
                        p.at(x + 2 * off.dx, y + 2 * off.dy) == v3) {
                        count += 1;
                    }
                }
            }
            CHECK(m.bins[probe] == doctest::Approx(count / (xmax * ymax)));
        }
    }
}
