#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>

#include "heis/limits.hpp"

using namespace heis;

namespace {

Mat3 E(int i, int j) {
    Mat3 m = Mat3::Zero();
    m(i, j) = 1.0;
    return m;
}

} // namespace

TEST_CASE("diagonal path stretches entries by rate differences") {
    DiagPath path(2.0, 1.0);
    Mat3 c = path.at(10.0);
    CHECK(c(0, 0) == 100.0);
    CHECK(c(1, 1) == 10.0);
    CHECK(c(2, 2) == 1.0);
    CHECK(path.rate(0, 1) == 1.0);
    CHECK(path.rate(0, 2) == 2.0);
    CHECK(path.rate(1, 2) == 1.0);
    CHECK(path.rate(2, 0) == -2.0);

    Subalgebra3 s = conjugated_algebra_at(AlgebraBase::so3, path, 10.0);
    CHECK(std::abs(s.basis[0](0, 1) - 10.0) < 1e-12);
    CHECK(std::abs(s.basis[0](1, 0) + 0.1) < 1e-12);
    CHECK(std::abs(s.basis[1](0, 2) - 100.0) < 1e-12);
    CHECK(std::abs(s.basis[1](2, 0) + 0.01) < 1e-12);
    CHECK(std::abs(s.basis[2](1, 2) - 10.0) < 1e-12);
    CHECK(std::abs(s.basis[2](2, 1) + 0.1) < 1e-12);

    Subalgebra3 u = conjugated_algebra_at(AlgebraBase::so21, path, 10.0);
    CHECK(std::abs(u.basis[1](2, 0) - 0.01) < 1e-12);
    CHECK(std::abs(u.basis[2](2, 1) - 0.1) < 1e-12);

    CHECK_THROWS_AS(DiagPath(1.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(DiagPath(2.0, -1.0), std::invalid_argument);
}

TEST_CASE("limit algebra keeps only the dominant entries") {
    for (AlgebraBase base : {AlgebraBase::so3, AlgebraBase::so21, AlgebraBase::euc2}) {
        Subalgebra3 lim = limit_algebra(base, DiagPath(2.0, 1.0));
        CHECK((lim.basis[0] - E(0, 1)).norm() == 0.0);
        CHECK((lim.basis[1] - E(0, 2)).norm() == 0.0);
        CHECK((lim.basis[2] - E(1, 2)).norm() == 0.0);
    }

    // Isotropic stretching keeps the rotation block whole.
    Subalgebra3 iso = limit_algebra(AlgebraBase::so3, DiagPath(1.0, 1.0));
    CHECK((iso.basis[0] - (E(0, 1) - E(1, 0))).norm() == 0.0);
    CHECK((iso.basis[1] - E(0, 2)).norm() == 0.0);
    CHECK((iso.basis[2] - E(1, 2)).norm() == 0.0);

    // A path that fixes the second direction keeps the lower-right block.
    Subalgebra3 half = limit_algebra(AlgebraBase::so21, DiagPath(1.0, 0.0));
    CHECK((half.basis[0] - E(0, 1)).norm() == 0.0);
    CHECK((half.basis[1] - E(0, 2)).norm() == 0.0);
    CHECK((half.basis[2] - (E(1, 2) + E(2, 1))).norm() == 0.0);

    // The trivial path changes nothing.
    Subalgebra3 fixed = limit_algebra(AlgebraBase::so3, DiagPath(0.0, 0.0));
    for (int k = 0; k < 3; ++k) {
        CHECK((fixed.basis[k] - standard_basis(AlgebraBase::so3).basis[k]).norm() ==
              0.0);
    }
}

TEST_CASE("limit tags match the contraction table") {
    using enum AlgebraBase;
    auto tag_of = [](AlgebraBase b, double pe, double qe) {
        return classify_algebra(limit_algebra(b, DiagPath(pe, qe)));
    };

    for (AlgebraBase b : {so3, so21, euc2}) {
        CHECK(tag_of(b, 2.0, 1.0) == AlgebraTag::heis);
        CHECK(tag_of(b, 3.0, 1.0) == AlgebraTag::heis);
    }
    CHECK(tag_of(so3, 1.0, 1.0) == AlgebraTag::euc2);
    CHECK(tag_of(so21, 1.0, 1.0) == AlgebraTag::euc2);
    CHECK(tag_of(euc2, 1.0, 1.0) == AlgebraTag::euc2);
    CHECK(tag_of(so21, 1.0, 0.0) == AlgebraTag::halfpipe);
    CHECK(tag_of(so3, 1.0, 0.0) == AlgebraTag::euc2);
    CHECK(tag_of(so3, 0.0, 0.0) == AlgebraTag::so3);
    CHECK(tag_of(so21, 0.0, 0.0) == AlgebraTag::so21);
    for (double pe : {1.0, 2.0, 3.0}) {
        for (double qe : {0.0, 1.0}) {
            if (qe > pe) continue;
            CHECK(tag_of(heis, pe, qe) == AlgebraTag::heis);
        }
    }
}

TEST_CASE("classification recognizes hand-built bases") {
    Subalgebra3 so3h{{2.0 * (E(0, 1) - E(1, 0)),
                      (E(0, 2) - E(2, 0)) + (E(0, 1) - E(1, 0)),
                      E(1, 2) - E(2, 1)},
                     false};
    CHECK(classify_algebra(so3h) == AlgebraTag::so3);

    Subalgebra3 so21h{{E(0, 1) - E(1, 0), E(0, 2) + E(2, 0), E(1, 2) + E(2, 1)},
                      false};
    CHECK(classify_algebra(so21h) == AlgebraTag::so21);

    Subalgebra3 euch{{E(0, 1) - E(1, 0), E(0, 2) + 0.5 * E(1, 2), E(1, 2)}, false};
    CHECK(classify_algebra(euch) == AlgebraTag::euc2);

    Subalgebra3 heish{{E(0, 1) + E(0, 2), E(0, 2), E(1, 2)}, false};
    CHECK(classify_algebra(heish) == AlgebraTag::heis);

    Subalgebra3 halfh{{E(0, 1), E(0, 2), E(1, 2) + E(2, 1)}, false};
    CHECK(classify_algebra(halfh) == AlgebraTag::halfpipe);

    // Rank-one derived algebra that is not central.
    Subalgebra3 branch{{E(0, 0) - E(1, 1), E(0, 1), E(2, 2)}, false};
    CHECK(classify_algebra(branch) == AlgebraTag::other);

    Subalgebra3 open{{E(0, 1) - E(1, 0), E(0, 2), E(1, 2) + E(2, 1)}, false};
    CHECK_THROWS_AS(classify_algebra(open), NotClosed);

    Subalgebra3 dependent{{E(0, 1), E(0, 1), E(0, 2)}, false};
    CHECK_THROWS_AS(classify_algebra(dependent), std::invalid_argument);
}

TEST_CASE("subspace distance vanishes exactly on equal spans") {
    Subalgebra3 s = standard_basis(AlgebraBase::so21);
    CHECK(subspace_distance(s, s) < 1e-15);

    Subalgebra3 rescaled{{3.0 * s.basis[0], -0.5 * s.basis[1] + s.basis[0],
                          2.0 * s.basis[2]},
                         false};
    CHECK(subspace_distance(s, rescaled) < 1e-14);
    CHECK(subspace_distance(rescaled, s) < 1e-14);

    Subalgebra3 ortho = orthonormalize(s);
    CHECK(ortho.orthonormalized);
    CHECK(subspace_distance(s, ortho) < 1e-14);

    double d = subspace_distance(standard_basis(AlgebraBase::so3),
                                 standard_basis(AlgebraBase::so21));
    CHECK(d > 0.1);
    CHECK(std::abs(d - subspace_distance(standard_basis(AlgebraBase::so21),
                                         standard_basis(AlgebraBase::so3))) < 1e-12);
}

TEST_CASE("conjugated algebras converge to their limits") {
    using enum AlgebraBase;
    for (AlgebraBase b : {so3, so21, euc2}) {
        DiagPath path(2.0, 1.0);
        Subalgebra3 lim = limit_algebra(b, path);
        double prev = 10.0;
        for (double t : {10.0, 100.0, 1000.0}) {
            double d = subspace_distance(conjugated_algebra_at(b, path, t), lim);
            CHECK(d < prev);
            prev = d;
        }
        CHECK(prev < 1e-3);
    }

    DiagPath slow(1.0, 0.0);
    Subalgebra3 hp = limit_algebra(AlgebraBase::so21, slow);
    double prev = 10.0;
    for (double t : {10.0, 100.0, 1000.0, 10000.0}) {
        double d = subspace_distance(conjugated_algebra_at(AlgebraBase::so21, slow, t),
                                     hp);
        CHECK(d < prev);
        prev = d;
    }
    CHECK(prev < 1e-3);
}

TEST_CASE("the nilpotent algebra is a fixed point of every path") {
    Subalgebra3 std_heis = standard_basis(AlgebraBase::heis);
    for (double t : {2.0, 10.0, 50.0, 1000.0}) {
        double d = subspace_distance(
            conjugated_algebra_at(AlgebraBase::heis, DiagPath(2.0, 1.0), t), std_heis);
        CHECK(d < 1e-12);
    }
    CHECK(subspace_distance(limit_algebra(AlgebraBase::heis, DiagPath(3.0, 1.0)),
                            std_heis) < 1e-14);
}

TEST_CASE("algebra names are stable") {
    CHECK(std::string(to_string(AlgebraTag::so3)) == "so3");
    CHECK(std::string(to_string(AlgebraTag::so21)) == "so21");
    CHECK(std::string(to_string(AlgebraTag::euc2)) == "euc2");
    CHECK(std::string(to_string(AlgebraTag::heis)) == "heis");
    CHECK(std::string(to_string(AlgebraTag::halfpipe)) == "halfpipe");
    CHECK(std::string(to_string(AlgebraBase::so3)) == "so3");
    CHECK(std::string(to_string(AlgebraBase::heis)) == "heis");
}
