// Develops torus tilings into SVG: a translation torus whose tiles fill
// the plane, next to a shear torus whose tiles lean over and crowd near
// the horizontal axis. Writes develop_translation.svg and
// develop_shear.svg into the working directory.
#include <cstdio>
#include <fstream>
#include <numbers>

#include "heis/svg.hpp"
#include "heis/tori.hpp"

using namespace heis;

namespace {

void write_file(const char* path, const std::string& body) {
    std::ofstream out(path);
    out << body;
    std::printf("wrote %s\n", path);
}

void report(const char* label, const RepParams& p) {
    auto tiles = develop_tiling(p, Vec2::Zero(), 3);
    double sep = min_interior_separation(p, Vec2::Zero(), 3);
    DichotomyReport d = dichotomy_report(p, 5);
    std::printf("%s: %zu tiles, interior separation %.4f, %d closed classes in %zu directions\n",
                label, tiles.size(), sep, d.closed_count, d.directions.size());
}

} // namespace

int main() {
    const double pi = std::numbers::pi;
    RepParams translation{2.0, 0.0, pi / 2.0, 1.0};
    RepParams shear{1.0, 0.0, pi / 4.0, 1.0};

    report("translation", translation);
    report("shear      ", shear);

    write_file("develop_translation.svg",
               svg::render_tiling(develop_tiling(translation, Vec2::Zero(), 3)));
    write_file("develop_shear.svg",
               svg::render_tiling(develop_tiling(shear, Vec2::Zero(), 3)));
    return 0;
}
