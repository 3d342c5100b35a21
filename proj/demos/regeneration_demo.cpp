// Regenerates the standard translation torus through hyperbolic and
// spherical cone tori, printing how the side pairings, cone angle and
// midpoint drift converge to the flat data, then shows why the shear
// torus admits no such schedule. Writes regeneration_hyp.svg.
#include <cstdio>
#include <fstream>
#include <numbers>

#include "heis/regeneration.hpp"
#include "heis/svg.hpp"

using namespace heis;

namespace {

void print_table(const char* label, const ConvergenceReport& rep) {
    std::printf("%s  (exponents %.0f, %.0f)\n", label, rep.pe, rep.qe);
    std::printf("  %10s %12s %12s %12s %14s\n", "t", "dist A", "dist B", "drift",
                "cone angle");
    for (const ConvergenceRow& row : rep.rows) {
        std::printf("  %10.0f %12.3e %12.3e %12.3e %14.8f%s\n", row.t, row.dist_a,
                    row.dist_b, row.midpoint_drift, row.cone_angle,
                    row.domain_ok ? "" : "  (outside domain)");
    }
}

} // namespace

int main() {
    const double pi = std::numbers::pi;
    RepParams flat{2.0, 0.0, pi / 2.0, 1.0};
    std::vector<double> times{10.0, 100.0, 1000.0, 10000.0};

    print_table("hyperbolic", regenerate_sequence(flat, GeomKind::Hyperbolic, 2.0,
                                                  1.0, times));
    print_table("spherical ", regenerate_sequence(flat, GeomKind::Spherical, 2.0,
                                                  1.0, times));

    std::ofstream("regeneration_hyp.svg")
        << svg::render_regeneration(flat, GeomKind::Hyperbolic, 2.0, 1.0, times);
    std::printf("wrote regeneration_hyp.svg\n\n");

    RepParams shear{1.0, 0.0, pi / 4.0, 1.0};
    ShearObstruction obs = shear_limit_obstruction(shear, 5);
    std::printf("shear torus (r=1, theta=pi/4): %d closed class%s, parallel_only=%s\n",
                obs.closed_count, obs.closed_count == 1 ? "" : "es",
                obs.parallel_only ? "true" : "false");
    std::printf("  %s\n", obs.statement.c_str());
    return 0;
}
