#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <set>
#include <vector>

#include "heis/orbifolds.hpp"

using namespace heis;

namespace {

constexpr double pi = std::numbers::pi;

RepParams at(double r, double phi, double theta, double lambda) {
    return RepParams{r, phi, theta, lambda};
}

bool is_identity(const Mat3& m, double tol = 1e-14) {
    return (m - Mat3::Identity()).cwiseAbs().maxCoeff() <= tol;
}

} // namespace

TEST_CASE("membership follows the angular strata") {
    RepParams axis = at(1.0, 0.0, pi / 2.0, 0.8);
    RepParams horizontal = at(1.0, pi / 2.0, pi / 2.0, 0.8);
    RepParams diagonal = at(1.0, pi / 4.0, pi / 2.0, 0.8);
    RepParams generic = at(1.0, 0.3, 1.0, 0.5);

    CHECK(deformation_membership(OrbifoldType::Torus, generic));
    CHECK(deformation_membership(OrbifoldType::Torus, axis));

    for (OrbifoldType o : {OrbifoldType::KleinBottle, OrbifoldType::Annulus,
                           OrbifoldType::MobiusBand}) {
        CHECK(deformation_membership(o, axis));
        CHECK(deformation_membership(o, horizontal));
        // The horizontal family allows any translation length ratio.
        CHECK(deformation_membership(o, at(1.0, pi / 2.0, 0.8, 0.7)));
        CHECK_FALSE(deformation_membership(o, generic));
        CHECK_FALSE(deformation_membership(o, diagonal));
        // Off the axis, a right angle alone is not enough.
        CHECK_FALSE(deformation_membership(o, at(1.0, 0.3, pi / 2.0, 0.5)));
    }

    CHECK(deformation_membership(OrbifoldType::Pillowcase, at(1.0, pi / 3.0, pi / 2.0, 1.0)));
    CHECK(deformation_membership(OrbifoldType::Pillowcase, diagonal));
    CHECK_FALSE(deformation_membership(OrbifoldType::Pillowcase, at(1.0, pi / 3.0, pi / 4.0, 1.0)));

    for (OrbifoldType o : {OrbifoldType::DiskTwoCones, OrbifoldType::DiskFourCorners,
                           OrbifoldType::RP2TwoCones}) {
        CHECK(deformation_membership(o, axis));
        CHECK(deformation_membership(o, horizontal));
        CHECK_FALSE(deformation_membership(o, diagonal));
        CHECK_FALSE(deformation_membership(o, at(1.0, 0.0, pi / 4.0, 0.8)));
    }

    CHECK(deformation_membership(OrbifoldType::DiskConeCorners, diagonal));
    CHECK(deformation_membership(OrbifoldType::DiskConeCorners,
                                 at(1.0, 3.0 * pi / 4.0, pi / 2.0, 0.8)));
    CHECK_FALSE(deformation_membership(OrbifoldType::DiskConeCorners, axis));
    CHECK_FALSE(deformation_membership(OrbifoldType::DiskConeCorners, horizontal));

    // Only complete structures belong to the deformation space.
    RepParams central = at(0.0, 0.0, 0.0, 0.0);
    RepParams nonfaithful = at(1.0, 0.0, pi / 2.0, 0.0);
    RepParams degenerate = at(1.0, 0.3, 0.0, 0.5);
    for (OrbifoldType o : all_orbifold_types()) {
        CHECK_FALSE(deformation_membership(o, central));
        CHECK_FALSE(deformation_membership(o, nonfaithful));
        CHECK_FALSE(deformation_membership(o, degenerate));
    }

    // The angular predicate only sees the angles mod 2 pi.
    CHECK(deformation_membership(OrbifoldType::DiskConeCorners,
                                 at(1.0, pi / 4.0 + 2.0 * pi, pi / 2.0, 0.8)));
}

TEST_CASE("extension matrices at canonical representatives") {
    Mat3 I = Mat3::Identity();

    OrbifoldExtension pc =
        extend_holonomy(OrbifoldType::Pillowcase, at(1.0, pi / 3.0, pi / 2.0, 0.8));
    Mat3 r = pc.extras.at('r');
    CHECK(r(0, 0) == -1.0);
    CHECK(r(1, 1) == -1.0);
    CHECK(r(2, 2) == 1.0);
    CHECK(is_identity(r * r));
    CHECK(pc.component == 0);

    OrbifoldExtension kb_axis =
        extend_holonomy(OrbifoldType::KleinBottle, at(1.4, 0.0, pi / 2.0, 0.9));
    Mat3 x = kb_axis.extras.at('x');
    CHECK(kb_axis.component == 0);
    CHECK(x(0, 0) == -1.0);
    CHECK(x(1, 1) == 1.0);
    CHECK(x(1, 2) == 0.7); // half the vertical translation length r
    CHECK((x * x - rho_a(kb_axis.base)).cwiseAbs().maxCoeff() < 1e-12);

    OrbifoldExtension kb_h =
        extend_holonomy(OrbifoldType::KleinBottle, at(1.4, pi / 2.0, 0.8, 0.9));
    Mat3 xh = kb_h.extras.at('x');
    CHECK(kb_h.component == 1);
    CHECK(xh(0, 0) == 1.0);
    CHECK(xh(1, 1) == -1.0);
    CHECK(xh(0, 2) == -0.45); // half the horizontal translation length -lambda
    CHECK((xh * xh - rho_a(kb_h.base)).cwiseAbs().maxCoeff() < 1e-12);

    OrbifoldExtension an_axis =
        extend_holonomy(OrbifoldType::Annulus, at(1.0, 0.0, pi / 2.0, 0.8));
    CHECK((an_axis.extras.at('f') - Eigen::Vector3d(-1, 1, 1).asDiagonal().toDenseMatrix())
              .cwiseAbs()
              .maxCoeff() == 0.0);
    OrbifoldExtension an_h =
        extend_holonomy(OrbifoldType::Annulus, at(1.0, pi / 2.0, pi / 2.0, 0.8));
    CHECK((an_h.extras.at('f') - Eigen::Vector3d(1, -1, 1).asDiagonal().toDenseMatrix())
              .cwiseAbs()
              .maxCoeff() == 0.0);
    CHECK(is_identity(an_axis.extras.at('f') * an_axis.extras.at('f')));

    OrbifoldExtension dtc =
        extend_holonomy(OrbifoldType::DiskTwoCones, at(1.2, 0.0, pi / 2.0, 0.8));
    Mat3 f = dtc.extras.at('f');
    CHECK(f(0, 0) == 1.0);
    CHECK(f(1, 1) == -1.0);
    CHECK(f(1, 2) == 0.6); // half the vertical translation length r
    CHECK(is_identity(f * f));

    OrbifoldExtension rp = extend_holonomy(OrbifoldType::RP2TwoCones,
                                           at(1.1, 0.0, pi / 2.0, 0.6));
    Mat3 gx = rp.extras.at('x');
    Mat3 gy = rp.extras.at('y');
    CHECK(gx(1, 2) == 0.55); // vertical glide, half of r
    CHECK(gy(0, 2) == 0.3);  // horizontal glide, half of lambda
    CHECK(is_identity((gx * gy) * (gx * gy), 1e-12));

    CHECK((I - I).norm() == 0.0);
}

TEST_CASE("diagonal components and mirror choice") {
    double phis[4] = {pi / 4.0, 3.0 * pi / 4.0, 5.0 * pi / 4.0, 7.0 * pi / 4.0};
    for (int k = 0; k < 4; ++k) {
        OrbifoldExtension e = extend_holonomy(OrbifoldType::DiskConeCorners,
                                              at(1.0, phis[k], pi / 2.0, 0.8));
        CHECK(e.component == k);
        Mat3 f = e.extras.at('f');
        if (k % 2 == 0) {
            CHECK(f(0, 0) == -1.0); // mirror across the vertical axis
            CHECK(f(1, 1) == 1.0);
        } else {
            CHECK(f(0, 0) == 1.0);
            CHECK(f(1, 1) == -1.0);
        }
    }
}

TEST_CASE("relations hold across every stratum component") {
    std::vector<std::pair<OrbifoldType, RepParams>> cases;
    auto add = [&](OrbifoldType o, RepParams p) { cases.emplace_back(o, p); };

    add(OrbifoldType::Torus, at(1.3, 0.7, 1.1, 0.9));
    add(OrbifoldType::Torus, at(1.3, 0.0, pi / 2.0, 0.9));
    for (OrbifoldType o : {OrbifoldType::KleinBottle, OrbifoldType::Annulus,
                           OrbifoldType::MobiusBand}) {
        add(o, at(1.3, 0.0, pi / 2.0, 0.8));
        add(o, at(1.3, pi, pi / 2.0, 0.8));
        add(o, at(1.3, pi / 2.0, 1.1, 0.8));
        add(o, at(1.3, 3.0 * pi / 2.0, 1.1, 0.8));
    }
    add(OrbifoldType::Pillowcase, at(1.3, 0.7, pi / 2.0, 0.9));
    add(OrbifoldType::Pillowcase, at(1.3, 4.0, pi / 2.0, 0.9));
    for (OrbifoldType o : {OrbifoldType::DiskTwoCones, OrbifoldType::DiskFourCorners,
                           OrbifoldType::RP2TwoCones}) {
        add(o, at(1.3, 0.0, pi / 2.0, 0.9));
        add(o, at(1.3, pi / 2.0, pi / 2.0, 0.9));
        add(o, at(1.3, pi, pi / 2.0, 0.9));
        add(o, at(1.3, 3.0 * pi / 2.0, pi / 2.0, 0.9));
    }
    for (int k = 0; k < 4; ++k) {
        add(OrbifoldType::DiskConeCorners,
            at(1.3, (2.0 * k + 1.0) * pi / 4.0, pi / 2.0, 0.9));
    }

    for (const auto& [o, p] : cases) {
        INFO(to_string(o) << " at phi=" << p.phi << " theta=" << p.theta);
        REQUIRE(deformation_membership(o, p));
        OrbifoldExtension e = extend_holonomy(o, p);
        CHECK(e.type == o);
        CHECK(check_relations(o, e));
    }
}

TEST_CASE("relations detect off-stratum holonomies") {
    OrbifoldExtension kb =
        extend_holonomy(OrbifoldType::KleinBottle, at(1.3, 0.0, pi / 2.0, 0.8));
    kb.base.phi += 1e-3;
    CHECK_FALSE(check_relations(OrbifoldType::KleinBottle, kb));

    OrbifoldExtension pc =
        extend_holonomy(OrbifoldType::Pillowcase, at(1.3, 0.7, pi / 2.0, 0.9));
    pc.base.theta += 1e-3;
    CHECK_FALSE(check_relations(OrbifoldType::Pillowcase, pc));
}

TEST_CASE("extension succeeds exactly on the membership locus") {
    double phis[] = {0.0,      pi / 6.0, pi / 4.0,       pi / 2.0, 3.0 * pi / 4.0,
                     pi,       5.0 * pi / 4.0, 3.0 * pi / 2.0, 7.0 * pi / 4.0};
    double thetas[] = {pi / 4.0, pi / 2.0};
    for (OrbifoldType o : all_orbifold_types()) {
        for (double phi : phis) {
            for (double theta : thetas) {
                RepParams p = at(1.1, phi, theta, 0.8);
                INFO(to_string(o) << " phi=" << phi << " theta=" << theta);
                if (deformation_membership(o, p)) {
                    OrbifoldExtension e = extend_holonomy(o, p);
                    CHECK(check_relations(o, e));
                } else {
                    CHECK_THROWS_AS(extend_holonomy(o, p), NotExtendable);
                }
            }
        }
    }
}

TEST_CASE("relator words are well formed") {
    std::set<char> allowed = {'a', 'b', 'r', 'f', 'x', 'y'};
    for (OrbifoldType o : all_orbifold_types()) {
        int components = 1;
        if (o == OrbifoldType::DiskConeCorners) components = 4;
        else if (o != OrbifoldType::Torus && o != OrbifoldType::Pillowcase)
            components = 2;
        for (int c = 0; c < components; ++c) {
            auto rels = orbifold_relators(o, c);
            CHECK_FALSE(rels.empty());
            for (const Word& w : rels) {
                CHECK_FALSE(w.empty());
                for (const auto& [letter, power] : w) {
                    CHECK(allowed.count(letter) == 1);
                    CHECK(power != 0);
                }
            }
        }
    }
    CHECK(orbifold_relators(OrbifoldType::Torus, 0).size() == 1);
    CHECK(orbifold_relators(OrbifoldType::KleinBottle, 0).size() == 3);
}

TEST_CASE("torus and pillowcase extensions ignore the family split") {
    OrbifoldExtension t =
        extend_holonomy(OrbifoldType::Torus, at(1.0, pi / 2.0, 1.0, 0.5));
    CHECK(t.component == 0);
    CHECK(t.extras.empty());
    OrbifoldExtension pc =
        extend_holonomy(OrbifoldType::Pillowcase, at(1.0, pi / 2.0, pi / 2.0, 0.5));
    CHECK(pc.component == 0);
}
