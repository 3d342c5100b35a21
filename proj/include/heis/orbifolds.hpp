#pragma once

#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "heis/rep_variety.hpp"

namespace heis {

// The nine affine orbifolds covered by the torus, including itself.
enum class OrbifoldType {
    Torus,
    KleinBottle,
    Annulus,
    MobiusBand,
    Pillowcase,
    DiskTwoCones,
    DiskFourCorners,
    DiskConeCorners,
    RP2TwoCones,
};

inline const char* to_string(OrbifoldType o) {
    switch (o) {
        case OrbifoldType::Torus: return "Torus";
        case OrbifoldType::KleinBottle: return "KleinBottle";
        case OrbifoldType::Annulus: return "Annulus";
        case OrbifoldType::MobiusBand: return "MobiusBand";
        case OrbifoldType::Pillowcase: return "Pillowcase";
        case OrbifoldType::DiskTwoCones: return "DiskTwoCones";
        case OrbifoldType::DiskFourCorners: return "DiskFourCorners";
        case OrbifoldType::DiskConeCorners: return "DiskConeCorners";
        case OrbifoldType::RP2TwoCones: return "RP2TwoCones";
    }
    return "?";
}

inline const std::vector<OrbifoldType>& all_orbifold_types() {
    static const std::vector<OrbifoldType> types = {
        OrbifoldType::Torus,          OrbifoldType::KleinBottle,
        OrbifoldType::Annulus,        OrbifoldType::MobiusBand,
        OrbifoldType::Pillowcase,     OrbifoldType::DiskTwoCones,
        OrbifoldType::DiskFourCorners, OrbifoldType::DiskConeCorners,
        OrbifoldType::RP2TwoCones,
    };
    return types;
}

// Which torus holonomies admit an extension by the orbifold's extra
// symmetries. Each predicate is an angular condition on the holonomy
// coordinates, checked on sines and cosines so representatives of the
// same angle agree; completeness of the torus structure is required
// throughout.
inline bool deformation_membership(OrbifoldType o, const RepParams& p,
                                   double tol = kTol) {
    if (!is_complete(classify(p))) return false;
    double sphi = std::abs(std::sin(p.phi));
    double cphi = std::abs(std::cos(p.phi));
    double ctheta = std::abs(std::cos(p.theta));
    bool right_angle = ctheta <= tol;
    bool axis = sphi <= tol;      // rho(a) purely vertical at theta = pi/2
    bool horizontal = cphi <= tol; // rho(a) purely horizontal

    switch (o) {
        case OrbifoldType::Torus:
            return true;
        case OrbifoldType::KleinBottle:
        case OrbifoldType::Annulus:
        case OrbifoldType::MobiusBand:
            return horizontal || (axis && right_angle);
        case OrbifoldType::Pillowcase:
            return right_angle;
        case OrbifoldType::DiskTwoCones:
        case OrbifoldType::DiskFourCorners:
        case OrbifoldType::RP2TwoCones:
            return right_angle && (axis || horizontal);
        case OrbifoldType::DiskConeCorners:
            return right_angle && std::abs(std::cos(2.0 * p.phi)) <= tol;
    }
    return false;
}

// Extension of a torus holonomy by the extra generators of an orbifold
// group. extras maps generator letters (among r, f, x, y) to their matrix
// images; component indexes the Table-1 family the parameters sit in.
struct OrbifoldExtension {
    OrbifoldType type = OrbifoldType::Torus;
    RepParams base;
    int component = 0;
    std::map<char, Mat3> extras;
};

// A relator is a word in the generator letters with integer exponents;
// its image must be the identity.
using Word = std::vector<std::pair<char, int>>;

namespace detail {

inline Mat3 point_rotation() {
    Mat3 m = Mat3::Identity();
    m(0, 0) = -1.0;
    m(1, 1) = -1.0;
    return m;
}

inline Mat3 mirror_x() { // fixes the vertical axis
    Mat3 m = Mat3::Identity();
    m(0, 0) = -1.0;
    return m;
}

inline Mat3 mirror_y() { // fixes the horizontal axis
    Mat3 m = Mat3::Identity();
    m(1, 1) = -1.0;
    return m;
}

inline Mat3 vertical_glide(double v) {
    Mat3 m = mirror_x();
    m(1, 2) = 0.5 * v;
    return m;
}

inline Mat3 horizontal_glide(double h) {
    Mat3 m = mirror_y();
    m(0, 2) = 0.5 * h;
    return m;
}

inline Mat3 offset_mirror_y(double v) {
    Mat3 m = mirror_y();
    m(1, 2) = 0.5 * v;
    return m;
}

// Translation parts of the generator holonomies: rho(a) moves points by
// t_a, rho(b) by t_b, exact on the right-angle and axis strata.
inline Vec2 translation_a(const RepParams& p) {
    return {-p.lambda * std::sin(p.phi), p.r * std::cos(p.phi)};
}

inline Vec2 translation_b(const RepParams& p) {
    return {p.lambda * std::cos(p.phi), p.r * std::sin(p.phi)};
}

} // namespace detail

// Defining relations of each orbifold group over the generators
// {a, b} + extras. Components with swapped vertical/horizontal roles
// swap which translation the extra generators invert.
inline std::vector<Word> orbifold_relators(OrbifoldType o, int component) {
    using W = Word;
    const W comm_ab = {{'a', 1}, {'b', 1}, {'a', -1}, {'b', -1}};
    const W rr = {{'r', 2}};
    const W ff = {{'f', 2}};
    const W r_inverts_a = {{'r', 1}, {'a', 1}, {'r', -1}, {'a', 1}};
    const W r_inverts_b = {{'r', 1}, {'b', 1}, {'r', -1}, {'b', 1}};
    const W glide_sq_a = {{'x', 2}, {'a', -1}};
    const W x_inverts_b = {{'x', 1}, {'b', 1}, {'x', -1}, {'b', 1}};
    const W f_fixes_a = {{'f', 1}, {'a', 1}, {'f', -1}, {'a', -1}};
    const W f_inverts_a = {{'f', 1}, {'a', 1}, {'f', -1}, {'a', 1}};
    const W f_fixes_b = {{'f', 1}, {'b', 1}, {'f', -1}, {'b', -1}};
    const W f_inverts_b = {{'f', 1}, {'b', 1}, {'f', -1}, {'b', 1}};
    const W fx_commute = {{'f', 1}, {'x', 1}, {'f', -1}, {'x', -1}};
    const W rf_commute = {{'f', 1}, {'r', 1}, {'f', 1}, {'r', 1}};

    switch (o) {
        case OrbifoldType::Torus:
            return {comm_ab};
        case OrbifoldType::KleinBottle:
            return {comm_ab, glide_sq_a, x_inverts_b};
        case OrbifoldType::Annulus:
            return {comm_ab, ff, f_fixes_a, f_inverts_b};
        case OrbifoldType::MobiusBand:
            return {comm_ab, glide_sq_a,   x_inverts_b, ff,
                    f_fixes_a, f_inverts_b, fx_commute};
        case OrbifoldType::Pillowcase:
            return {comm_ab, rr, r_inverts_a, r_inverts_b};
        case OrbifoldType::DiskTwoCones: {
            // (rf)^2 equals the inverse of the vertical translation.
            W rfrf_v = {{'r', 1}, {'f', 1}, {'r', 1}, {'f', 1},
                        {component == 0 ? 'a' : 'b', 1}};
            if (component == 0) {
                return {comm_ab, rr, ff, r_inverts_a, r_inverts_b,
                        f_inverts_a, f_fixes_b, rfrf_v};
            }
            return {comm_ab, rr, ff, r_inverts_a, r_inverts_b,
                    f_fixes_a, f_inverts_b, rfrf_v};
        }
        case OrbifoldType::DiskFourCorners: {
            W rfrf = {{'r', 1}, {'f', 1}, {'r', 1}, {'f', 1}};
            if (component == 0) {
                return {comm_ab, rr, ff, rfrf, r_inverts_a, r_inverts_b,
                        f_inverts_a, f_fixes_b};
            }
            return {comm_ab, rr, ff, rfrf, r_inverts_a, r_inverts_b,
                    f_fixes_a, f_inverts_b};
        }
        case OrbifoldType::DiskConeCorners: {
            W f_swaps_ab = {{'f', 1}, {'a', 1}, {'f', -1}, {'b', -1}};
            W f_swaps_ba = {{'f', 1}, {'b', 1}, {'f', -1}, {'a', -1}};
            return {comm_ab, rr, ff, rf_commute, r_inverts_a, r_inverts_b,
                    f_swaps_ab, f_swaps_ba};
        }
        case OrbifoldType::RP2TwoCones: {
            W glide_sq_b = {{'y', 2}, {'b', -1}};
            W xyxy = {{'x', 1}, {'y', 1}, {'x', 1}, {'y', 1}};
            W y_inverts_a = {{'y', 1}, {'a', 1}, {'y', -1}, {'a', 1}};
            return {comm_ab, glide_sq_a, glide_sq_b, xyxy, x_inverts_b,
                    y_inverts_a};
        }
    }
    return {};
}

// Canonical extension representative for parameters inside the orbifold's
// Table-1 stratum. The matrices are built from the actual translation
// vectors of the holonomy, so the group relations hold on the nose.
inline OrbifoldExtension extend_holonomy(OrbifoldType o, const RepParams& p,
                                         double tol = kTol) {
    if (!deformation_membership(o, p, tol)) {
        throw NotExtendable("holonomy lies outside the orbifold's stratum");
    }
    using namespace detail;
    const double pi = std::numbers::pi;
    bool horizontal = std::abs(std::cos(p.phi)) <= tol;

    OrbifoldExtension e;
    e.type = o;
    e.base = p;
    e.component = horizontal ? 1 : 0;

    Vec2 ta = translation_a(p);
    Vec2 tb = translation_b(p);

    switch (o) {
        case OrbifoldType::Torus:
            e.component = 0;
            break;
        case OrbifoldType::KleinBottle:
            e.extras['x'] = horizontal ? horizontal_glide(ta.x())
                                       : vertical_glide(ta.y());
            break;
        case OrbifoldType::Annulus:
            e.extras['f'] = horizontal ? mirror_y() : mirror_x();
            break;
        case OrbifoldType::MobiusBand:
            e.extras['x'] = horizontal ? horizontal_glide(ta.x())
                                       : vertical_glide(ta.y());
            e.extras['f'] = horizontal ? mirror_y() : mirror_x();
            break;
        case OrbifoldType::Pillowcase:
            e.component = 0;
            e.extras['r'] = point_rotation();
            break;
        case OrbifoldType::DiskTwoCones:
            e.extras['r'] = point_rotation();
            e.extras['f'] = offset_mirror_y(horizontal ? tb.y() : ta.y());
            break;
        case OrbifoldType::DiskFourCorners:
            e.extras['r'] = point_rotation();
            e.extras['f'] = mirror_y();
            break;
        case OrbifoldType::DiskConeCorners: {
            // Four diagonal components phi = (2k+1) pi/4; the mirror axis
            // alternates with the sign of sin(2 phi).
            long k = std::lround((p.phi * 4.0 / pi - 1.0) / 2.0);
            e.component = int(((k % 4) + 4) % 4);
            e.extras['r'] = point_rotation();
            e.extras['f'] = std::sin(2.0 * p.phi) > 0.0 ? mirror_x() : mirror_y();
            break;
        }
        case OrbifoldType::RP2TwoCones:
            if (horizontal) {
                e.extras['x'] = horizontal_glide(ta.x());
                e.extras['y'] = vertical_glide(tb.y());
            } else {
                e.extras['x'] = vertical_glide(ta.y());
                e.extras['y'] = horizontal_glide(tb.x());
            }
            break;
    }
    return e;
}

// Evaluate every defining relation on the stored generator images; true
// iff each relator's image is the identity within the tolerance.
inline bool check_relations(OrbifoldType o, const OrbifoldExtension& e,
                            double tol = 1e-10) {
    Mat3 A = rho_a(e.base);
    Mat3 B = rho_b(e.base);
    auto image = [&](char c) -> Mat3 {
        if (c == 'a') return A;
        if (c == 'b') return B;
        return e.extras.at(c);
    };

    for (const Word& w : orbifold_relators(o, e.component)) {
        Mat3 prod = Mat3::Identity();
        for (auto [letter, expo] : w) {
            Mat3 g = image(letter);
            if (expo < 0) g = Mat3(g.inverse());
            for (int k = 0; k < std::abs(expo); ++k) prod = prod * g;
        }
        if ((prod - Mat3::Identity()).cwiseAbs().maxCoeff() > tol) return false;
    }
    return true;
}

} // namespace heis
