// Regenerates tests/data/golden_features_8x8.txt from the brute-force
// reference pipeline. Run manually when the fixture definition changes:
//   make_golden <output-path>

#include "fixtures.hpp"
#include "reference_extractor.hpp"

#include <cstdio>
#include <fstream>

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: make_golden <output-path>\n");
        return 2;
    }
    const colorstat::RgbImage img = colorstat::testing::make_random_image(8001, 8, 8);
    const std::vector<double> ref = colorstat::reference::extract(img);

    std::ofstream out(argv[1]);
    if (!out) {
        std::fprintf(stderr, "cannot open %s\n", argv[1]);
        return 1;
    }
    char buf[40];
    for (double v : ref) {
        std::snprintf(buf, sizeof(buf), "%.17g\n", v);
        out << buf;
    }
    return out ? 0 : 1;
}
