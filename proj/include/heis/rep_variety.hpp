#pragma once

#include <cmath>
#include <numbers>
#include <optional>

#include "heis/lie_core.hpp"

namespace heis {

// Tolerance separating translation-like from shear-like holonomy when
// classifying. Coarser than kTol so that nearly-right angles written with
// few decimal digits still land on the translation side.
inline constexpr double kSplitTol = 1e-6;

// Representation of Z^2 recorded by the logarithms of the generator
// images a |-> exp(Xa), b |-> exp(Xb). Commutativity is the variety
// condition Xa.u Xb.v = Xa.v Xb.u.
struct RepZ2 {
    HeisAlgVec Xa;
    HeisAlgVec Xb;
};

inline bool in_variety(const HeisAlgVec& Xa, const HeisAlgVec& Xb,
                       double tol = kTol) {
    return std::abs(Xa.u * Xb.v - Xa.v * Xb.u) <= tol;
}

inline bool in_variety(const RepZ2& rep, double tol = kTol) {
    return in_variety(rep.Xa, rep.Xb, tol);
}

// Conjugacy coordinates (r, phi, theta, lambda). r >= 0 scales the
// derivative part, (phi, theta) locate the plane spanned by the
// derivative rows, lambda the central offset transverse to that plane.
// For central representations (r = 0) the full offset pair survives
// conjugation and is kept in uvec.
struct RepParams {
    double r = 0.0;
    double phi = 0.0;
    double theta = 0.0;
    double lambda = 0.0;
    std::optional<Vec2> uvec;

    bool central() const { return uvec.has_value() && r == 0.0; }
};

// The doubled-angle embedding of the torus: rows of the derivative part
// at unit scale, flattened to (Xa.u, Xa.v, Xb.u, Xb.v) / r.
inline Vec4 psi(double phi, double theta) {
    return {std::cos(phi) * std::cos(theta),
            std::cos(phi) * std::sin(theta),
            std::sin(phi) * std::cos(theta),
            std::sin(phi) * std::sin(theta)};
}

// General point of the representation variety: derivative rows along
// psi(phi, theta) at scale r, central parts given directly by uvec.
inline RepZ2 params_to_rep(double r, double phi, double theta, const Vec2& uvec) {
    Vec4 d = psi(phi, theta);
    return {{r * d(0), r * d(1), uvec.x()}, {r * d(2), r * d(3), uvec.y()}};
}

// Canonical slice: central offset of size lambda placed transverse to the
// derivative plane, along (-sin phi, cos phi).
inline RepZ2 canonical_rep(double r, double phi, double theta, double lambda) {
    return params_to_rep(r, phi, theta,
                         Vec2(-lambda * std::sin(phi), lambda * std::cos(phi)));
}

inline RepZ2 canonical_rep(const RepParams& p) {
    if (p.central()) return params_to_rep(0.0, 0.0, 0.0, *p.uvec);
    return canonical_rep(p.r, p.phi, p.theta, p.lambda);
}

// The parametrization by (phi, theta) is 2:1; this is the nontrivial deck
// transformation, fixing the representation exactly.
inline RepParams deck_involution(const RepParams& p) {
    RepParams q = p;
    q.phi = p.phi + std::numbers::pi;
    q.theta = p.theta + std::numbers::pi;
    q.lambda = -p.lambda;
    return q;
}

// Holonomy matrices of the standard generators.
inline Mat3 rho_a(const RepParams& p) { return exp_heis(canonical_rep(p).Xa).matrix(); }
inline Mat3 rho_b(const RepParams& p) { return exp_heis(canonical_rep(p).Xb).matrix(); }

// Reduce a representation to canonical coordinates. The output satisfies
// theta in [0, pi); for theta in (0, pi) additionally phi in [0, pi), and
// the sign of lambda is itself a conjugacy invariant; at theta ~ 0 the
// full circle of phi is kept and lambda is made nonnegative, which is the
// residual action of the component-swapping diagonal conjugation there.
// Central representations come back with r = 0 and the raw offset pair.
inline RepParams normal_form(const RepZ2& rep, double tol = kTol) {
    const double pi = std::numbers::pi;
    Vec4 rows(rep.Xa.u, rep.Xa.v, rep.Xb.u, rep.Xb.v);
    double r = rows.norm();

    if (r <= tol) {
        RepParams nf;
        nf.uvec = Vec2(rep.Xa.w, rep.Xb.w);
        return nf;
    }

    Vec2 pa(rep.Xa.u, rep.Xa.v);
    Vec2 pb(rep.Xb.u, rep.Xb.v);

    // Both rows are parallel on the variety; take the dominant one as the
    // direction and orient it into the upper half plane, so theta lands in
    // [0, pi). An all-zero Xa row makes phi come out as pi/2 exactly.
    Vec2 d = (pa.norm() >= pb.norm()) ? pa.normalized() : pb.normalized();
    if (d.y() < 0.0 || (d.y() == 0.0 && d.x() < 0.0)) d = -d;
    double theta = std::atan2(d.y(), d.x());

    double cphi = pa.dot(d) / r;
    double sphi = pb.dot(d) / r;
    double phi = std::atan2(sphi, cphi);
    if (phi < 0.0) phi += 2.0 * pi;

    // Component of the central offsets transverse to the derivative plane;
    // the component along it is killed by inner conjugation.
    double lambda = -rep.Xa.w * sphi + rep.Xb.w * cphi;

    if (d.y() > tol) {
        if (phi >= pi) {
            phi -= pi;
            theta = pi - theta;
        }
    } else {
        if (lambda < 0.0) lambda = -lambda;
    }

    RepParams nf;
    nf.r = r;
    nf.phi = phi;
    nf.theta = theta;
    nf.lambda = lambda;
    nf.uvec = Vec2(-lambda * std::sin(phi), lambda * std::cos(phi));
    return nf;
}

inline RepParams normal_form(const RepParams& p, double tol = kTol) {
    return normal_form(canonical_rep(p), tol);
}

enum class RepClass {
    Central,
    ShearDegenerate,
    NonFaithful,
    CompleteTranslation,
    CompleteShear,
};

inline const char* to_string(RepClass c) {
    switch (c) {
        case RepClass::Central: return "Central";
        case RepClass::ShearDegenerate: return "ShearDegenerate";
        case RepClass::NonFaithful: return "NonFaithful";
        case RepClass::CompleteTranslation: return "CompleteTranslation";
        case RepClass::CompleteShear: return "CompleteShear";
    }
    return "?";
}

// Classification by the canonical invariants, checked in order of
// degeneracy; the holonomy extends to a free, faithful plane action
// exactly when r, sin(theta) and lambda are all away from zero. The last
// test separates pure-translation holonomy (theta at a right angle) from
// genuinely shearing holonomy.
inline RepClass classify(const RepZ2& rep, double tol = kTol,
                         double split_tol = kSplitTol) {
    RepParams nf = normal_form(rep, tol);
    if (nf.central()) return RepClass::Central;
    if (std::abs(std::sin(nf.theta)) <= tol) return RepClass::ShearDegenerate;
    if (std::abs(nf.lambda) <= tol) return RepClass::NonFaithful;
    if (std::abs(std::cos(nf.theta)) <= split_tol) return RepClass::CompleteTranslation;
    return RepClass::CompleteShear;
}

inline RepClass classify(const RepParams& p, double tol = kTol,
                         double split_tol = kSplitTol) {
    return classify(canonical_rep(p), tol, split_tol);
}

inline bool is_complete(RepClass c) {
    return c == RepClass::CompleteTranslation || c == RepClass::CompleteShear;
}

inline RepZ2 conjugate(const HeisElem& g, const RepZ2& rep) {
    return {adjoint(g, rep.Xa), adjoint(g, rep.Xb)};
}

inline RepZ2 conjugate(const Mat3& g, const RepZ2& rep) {
    return {adjoint(g, rep.Xa), adjoint(g, rep.Xb)};
}

} // namespace heis
