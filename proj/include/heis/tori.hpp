#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "heis/rep_variety.hpp"

namespace heis {

// Developing map of the affine torus: the holonomy of the parameter point
// (x, y) applied to the base point. Exact because the generators commute.
inline Vec2 develop_point(const RepZ2& rep, const Vec2& base, double x, double y) {
    return apply_point(exp_heis(rep.Xa * x + rep.Xb * y), base);
}

// One developed fundamental tile, the image of the unit parameter square
// at (m, n). Boundary curves run counterclockwise in the parameter square;
// edges[k] starts at the developed corner k and is sampled along the
// parameter gridline, which develops to a straight or parabolic arc.
struct TilePatch {
    int m = 0;
    int n = 0;
    std::array<std::vector<Vec2>, 4> edges;

    const Vec2& corner(int k) const { return edges[k % 4].front(); }
};

namespace detail {

inline constexpr double kCornerS[4] = {0.0, 1.0, 1.0, 0.0};
inline constexpr double kCornerT[4] = {0.0, 0.0, 1.0, 1.0};

} // namespace detail

// Develop the (2N+1)^2 block of tiles around the base tile. Requires a
// complete holonomy. Shared edges of adjacent tiles sample the same
// parameter gridline at the same points, so they coincide exactly.
inline std::vector<TilePatch> develop_tiling(const RepParams& params,
                                             const Vec2& base, int range,
                                             int samples_per_edge = 32) {
    if (!is_complete(classify(params))) {
        throw IncompleteHolonomy("tiling requires a complete holonomy");
    }
    RepZ2 rep = canonical_rep(params);

    std::vector<TilePatch> tiles;
    tiles.reserve(std::size_t(2 * range + 1) * std::size_t(2 * range + 1));
    for (int m = -range; m <= range; ++m) {
        for (int n = -range; n <= range; ++n) {
            TilePatch tile;
            tile.m = m;
            tile.n = n;
            for (int k = 0; k < 4; ++k) {
                int k2 = (k + 1) % 4;
                auto& edge = tile.edges[k];
                edge.reserve(samples_per_edge + 1);
                for (int i = 0; i <= samples_per_edge; ++i) {
                    double t = double(i) / samples_per_edge;
                    double s0 = detail::kCornerS[k] +
                                t * (detail::kCornerS[k2] - detail::kCornerS[k]);
                    double t0 = detail::kCornerT[k] +
                                t * (detail::kCornerT[k2] - detail::kCornerT[k]);
                    edge.push_back(develop_point(rep, base, m + s0, n + t0));
                }
            }
            tiles.push_back(std::move(tile));
        }
    }
    return tiles;
}

// Probe of developing-map injectivity: minimum distance between interior
// samples (a 3x3 grid per tile) of distinct tiles. Coincidences witness an
// overlap; for complete holonomies the gap stays bounded away from zero.
inline double min_interior_separation(const RepParams& params, const Vec2& base,
                                      int range) {
    if (!is_complete(classify(params))) {
        throw IncompleteHolonomy("tiling requires a complete holonomy");
    }
    RepZ2 rep = canonical_rep(params);

    std::vector<Vec2> interior;
    for (int m = -range; m <= range; ++m) {
        for (int n = -range; n <= range; ++n) {
            for (double s : {0.25, 0.5, 0.75}) {
                for (double t : {0.25, 0.5, 0.75}) {
                    interior.push_back(develop_point(rep, base, m + s, n + t));
                }
            }
        }
    }

    double min_gap = std::numeric_limits<double>::infinity();
    const std::size_t per_tile = 9;
    for (std::size_t i = 0; i < interior.size(); ++i) {
        for (std::size_t j = i + 1; j < interior.size(); ++j) {
            if (i / per_tile == j / per_tile) continue;
            min_gap = std::min(min_gap, (interior[i] - interior[j]).norm());
        }
    }
    return min_gap;
}

// Free homotopy class (m, n) of the torus together with the geometry of
// its holonomy: whether some line is translated along itself, and if so
// in which direction (unit vector, first nonzero component positive).
struct GeodesicClass {
    long long m = 0;
    long long n = 0;
    HeisElem hol;
    bool closed = false;
    Vec2 direction = Vec2::Zero();
};

namespace detail {

inline Vec2 canonical_direction(Vec2 d) {
    double n = d.norm();
    if (n == 0.0) return d;
    d /= n;
    if (d.x() < -1e-12 || (std::abs(d.x()) <= 1e-12 && d.y() < 0.0)) d = -d;
    if (std::abs(d.x()) <= 1e-12) d.x() = 0.0;
    if (std::abs(d.y()) <= 1e-12) d.y() = 0.0;
    return d;
}

} // namespace detail

// Enumerate primitive classes with |m|, |n| <= max_class, one per +-pair
// (m > 0, or m = 0 and n > 0). The holonomy (1, a, b, c) translates the
// plane when a = 0, moving points by (c, b); with a != 0 it shears, and
// only horizontal lines can be carried to themselves.
inline std::vector<GeodesicClass> closed_geodesic_classes(const RepParams& params,
                                                          int max_class,
                                                          double tol = kTol) {
    if (!is_complete(classify(params))) {
        throw IncompleteHolonomy("geodesic classes require a complete holonomy");
    }
    RepZ2 rep = canonical_rep(params);

    std::vector<GeodesicClass> out;
    for (int m = 0; m <= max_class; ++m) {
        for (int n = -max_class; n <= max_class; ++n) {
            if (m == 0 && n <= 0) continue;
            if (std::gcd(m, std::abs(n)) != 1) continue;
            GeodesicClass cls;
            cls.m = m;
            cls.n = n;
            cls.hol = exp_heis(rep.Xa * double(m) + rep.Xb * double(n));
            double a = cls.hol.a, b = cls.hol.b, c = cls.hol.c;
            if (std::abs(a) <= tol) {
                if (std::abs(b) > tol || std::abs(c) > tol) {
                    cls.closed = true;
                    cls.direction = detail::canonical_direction(Vec2(c, b));
                }
            } else if (std::abs(b) <= tol) {
                // Shear with horizontal translation part: every horizontal
                // line is preserved, the axis itself is translated.
                cls.closed = true;
                cls.direction = Vec2(1.0, 0.0);
            }
            out.push_back(cls);
        }
    }
    return out;
}

struct DichotomyReport {
    RepClass type = RepClass::Central;
    bool holds = false;
    int closed_count = 0;
    int checked_classes = 0;
    std::vector<Vec2> directions; // distinct closed directions found
};

// Translation-type holonomies should close up geodesics in at least two
// non-parallel directions; shear-type holonomies in at most one. Verified
// on all primitive classes up to max_class.
inline DichotomyReport dichotomy_report(const RepParams& params, int max_class,
                                        double tol = kTol) {
    DichotomyReport res;
    res.type = classify(params);
    auto classes = closed_geodesic_classes(params, max_class, tol);
    res.checked_classes = int(classes.size());

    for (const auto& cls : classes) {
        if (!cls.closed) continue;
        ++res.closed_count;
        bool fresh = true;
        for (const auto& d : res.directions) {
            if (std::abs(d.x() * cls.direction.y() - d.y() * cls.direction.x()) <=
                1e-9) {
                fresh = false;
                break;
            }
        }
        if (fresh) res.directions.push_back(cls.direction);
    }

    if (res.type == RepClass::CompleteTranslation) {
        res.holds = res.directions.size() >= 2;
    } else {
        res.holds = res.directions.size() <= 1;
    }
    return res;
}

inline bool dichotomy_check(const RepParams& params, int max_class,
                            double tol = kTol) {
    return dichotomy_report(params, max_class, tol).holds;
}

} // namespace heis
