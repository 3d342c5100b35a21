#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "heis/lie_core.hpp"

namespace heis {

enum class GeomKind { Spherical, Euclidean, Hyperbolic };

inline const char* to_string(GeomKind k) {
    switch (k) {
        case GeomKind::Spherical: return "spherical";
        case GeomKind::Euclidean: return "euclidean";
        case GeomKind::Hyperbolic: return "hyperbolic";
    }
    return "?";
}

// Projective model of a constant-curvature plane, presented in an affine
// chart stretched by C = diag(alpha, beta, 1). The standard chart
// (alpha = beta = 1) is the Klein disk, the gnomonic hemisphere chart, or
// the flat plane; geodesics are straight lines in every chart.
struct GeometryModel {
    GeomKind kind = GeomKind::Euclidean;
    double alpha = 1.0;
    double beta = 1.0;

    GeometryModel() = default;

    GeometryModel(GeomKind k, double a, double b) : kind(k), alpha(a), beta(b) {
        if (!(a >= b && b >= 1.0)) {
            throw std::invalid_argument("stretch factors must satisfy alpha >= beta >= 1");
        }
    }

    Mat3 C() const {
        Mat3 c = Mat3::Identity();
        c(0, 0) = alpha;
        c(1, 1) = beta;
        return c;
    }

    Vec2 to_std(const Vec2& p) const { return {p.x() / alpha, p.y() / beta}; }
    Vec2 from_std(const Vec2& p) const { return {p.x() * alpha, p.y() * beta}; }

    // Signature matrix of the ambient bilinear form in the standard chart.
    Mat3 J() const {
        switch (kind) {
            case GeomKind::Spherical: return Mat3::Identity();
            case GeomKind::Hyperbolic: {
                Mat3 j = Mat3::Identity();
                j(2, 2) = -1.0;
                return j;
            }
            case GeomKind::Euclidean:
                throw std::invalid_argument("the flat model has no ambient bilinear form");
        }
        throw std::invalid_argument("bad kind");
    }

    // Quadric preserved by isometries, in model coordinates.
    Mat3 absolute_quadric() const {
        Mat3 ci = C().inverse();
        return ci.transpose() * J() * ci;
    }

    bool contains(const Vec2& p) const {
        if (kind != GeomKind::Hyperbolic) return true;
        return to_std(p).squaredNorm() < 1.0;
    }

    void require_inside(const Vec2& p) const {
        if (!contains(p)) {
            throw OutsideDomain("point lies on or beyond the boundary conic");
        }
    }
};

namespace detail {

inline double wedge(const Vec2& u, const Vec2& v) {
    return u.x() * v.y() - u.y() * v.x();
}

// B(X, Y) = X^T J Y with J = diag(1, 1, sigma).
inline double bilinear(const Vec3& x, const Vec3& y, double sigma) {
    return x.x() * y.x() + x.y() * y.y() + sigma * x.z() * y.z();
}

inline double form_sign(GeomKind k) {
    return k == GeomKind::Hyperbolic ? -1.0 : 1.0;
}

} // namespace detail

// Geodesic distance. Written so that nearby points lose no precision:
// every branch reduces to a norm of a difference, never to acosh or acos
// of a quantity tending to 1.
inline double dist(const GeometryModel& g, const Vec2& p, const Vec2& q) {
    g.require_inside(p);
    g.require_inside(q);
    Vec2 u = g.to_std(p), v = g.to_std(q);
    switch (g.kind) {
        case GeomKind::Euclidean:
            return (u - v).norm();
        case GeomKind::Hyperbolic: {
            double diff2 = (u - v).squaredNorm();
            double w = detail::wedge(u, v - u); // equals wedge(u, v)
            double num = diff2 - w * w;
            double den = (1.0 - u.squaredNorm()) * (1.0 - v.squaredNorm());
            double s2 = num / den;
            return std::asinh(std::sqrt(std::max(0.0, s2)));
        }
        case GeomKind::Spherical: {
            // Lifts (u, 1), (v, 1); cross product written with differences.
            Vec3 cr(u.y() - v.y(), v.x() - u.x(), detail::wedge(u, v - u));
            double dot = u.dot(v) + 1.0;
            return std::atan2(cr.norm(), dot);
        }
    }
    return 0.0;
}

// Midpoint of the geodesic segment. Chart geodesics are affine segments,
// so this bisects the equidistance function along the segment itself.
inline Vec2 midpoint(const GeometryModel& g, const Vec2& p, const Vec2& q) {
    g.require_inside(p);
    g.require_inside(q);
    double d = dist(g, p, q);
    if (d <= 1e-15) return p;
    if (g.kind == GeomKind::Spherical && std::numbers::pi - d <= kTol) {
        throw AntipodalAmbiguity("midpoint of a near-antipodal pair is not unique");
    }
    if (g.kind == GeomKind::Euclidean) return 0.5 * (p + q);

    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
        double t = 0.5 * (lo + hi);
        Vec2 m = p + t * (q - p);
        double f = dist(g, p, m) - dist(g, m, q);
        if (f < 0.0) {
            lo = t;
        } else {
            hi = t;
        }
    }
    double t = 0.5 * (lo + hi);
    return p + t * (q - p);
}

// Interior angle at `vertex` between the geodesics toward p1 and p2.
// Chart directions are projected onto the tangent space of the lifted
// vertex with respect to the ambient form.
inline double angle(const GeometryModel& g, const Vec2& vertex, const Vec2& p1,
                    const Vec2& p2) {
    g.require_inside(vertex);
    g.require_inside(p1);
    g.require_inside(p2);
    Vec2 vs = g.to_std(vertex);
    Vec2 w1 = g.to_std(p1) - vs;
    Vec2 w2 = g.to_std(p2) - vs;
    if (w1.norm() <= 1e-14 || w2.norm() <= 1e-14) {
        throw DegenerateSegment("angle requires distinct endpoints at the vertex");
    }

    if (g.kind == GeomKind::Euclidean) {
        double c = w1.dot(w2) / (w1.norm() * w2.norm());
        return std::acos(std::clamp(c, -1.0, 1.0));
    }

    double sigma = detail::form_sign(g.kind);
    Vec3 P(vs.x(), vs.y(), 1.0);
    double bpp = detail::bilinear(P, P, sigma);
    auto tangential = [&](const Vec2& w) {
        Vec3 W(w.x(), w.y(), 0.0);
        return Vec3(W - (detail::bilinear(W, P, sigma) / bpp) * P);
    };
    Vec3 t1 = tangential(w1), t2 = tangential(w2);
    double n1 = detail::bilinear(t1, t1, sigma);
    double n2 = detail::bilinear(t2, t2, sigma);
    double c = detail::bilinear(t1, t2, sigma) / std::sqrt(n1 * n2);
    return std::acos(std::clamp(c, -1.0, 1.0));
}

struct OrientedSegment {
    Vec2 start;
    Vec2 end;
};

namespace detail {

// J-orthonormal frame at the start of a segment: e0 the normalized lift,
// e1 the unit tangent toward the far endpoint, e2 completing the frame so
// that det > 0. Its inverse is J' F^T J by orthonormality.
inline Mat3 frame(const GeometryModel& g, const OrientedSegment& s) {
    double sigma = form_sign(g.kind);
    Vec2 ps = g.to_std(s.start), qs = g.to_std(s.end);
    Vec3 P(ps.x(), ps.y(), 1.0);
    double bpp = bilinear(P, P, sigma);
    Vec3 e0 = P / std::sqrt(std::abs(bpp));

    Vec3 W(qs.x() - ps.x(), qs.y() - ps.y(), 0.0);
    Vec3 t = W - (bilinear(W, P, sigma) / bpp) * P;
    double ntt = bilinear(t, t, sigma);
    if (ntt <= 0.0) {
        throw DegenerateSegment("tangent direction is not spacelike");
    }
    Vec3 e1 = t / std::sqrt(ntt);

    Vec3 c = e0.cross(e1);
    Vec3 jc(c.x(), c.y(), sigma * c.z());
    double njj = bilinear(jc, jc, sigma);
    Vec3 e2 = jc / std::sqrt(std::abs(njj));

    Mat3 f;
    f.col(0) = e0;
    f.col(1) = e1;
    f.col(2) = e2;
    return f;
}

inline Mat3 frame_inverse_factor(GeomKind k) {
    Mat3 jp = Mat3::Identity();
    if (k == GeomKind::Hyperbolic) jp(0, 0) = -1.0;
    return jp;
}

} // namespace detail

// Orientation-preserving isometry carrying the oriented segment s1 onto s2.
// The segments must have equal length up to tol relative to their size.
inline ProjMat segment_isometry(const GeometryModel& g, const OrientedSegment& s1,
                                const OrientedSegment& s2, double tol = kTol) {
    double d1 = dist(g, s1.start, s1.end);
    double d2 = dist(g, s2.start, s2.end);
    if (d1 <= 1e-12 || d2 <= 1e-12) {
        throw DegenerateSegment("segment endpoints coincide");
    }
    if (std::abs(d1 - d2) > tol * std::max(1.0, std::max(d1, d2))) {
        throw LengthMismatch("segments have different lengths");
    }

    Mat3 c = g.C();
    if (g.kind == GeomKind::Euclidean) {
        Vec2 a0 = g.to_std(s1.start), a1 = g.to_std(s1.end);
        Vec2 b0 = g.to_std(s2.start), b1 = g.to_std(s2.end);
        double rot = std::atan2((b1 - b0).y(), (b1 - b0).x()) -
                     std::atan2((a1 - a0).y(), (a1 - a0).x());
        Eigen::Rotation2D<double> R(rot);
        Mat3 m = Mat3::Identity();
        m.block<2, 2>(0, 0) = R.toRotationMatrix();
        m.block<2, 1>(0, 2) = b0 - R.toRotationMatrix() * a0;
        return ProjMat::from(c * m * c.inverse());
    }

    Mat3 f1 = detail::frame(g, s1);
    Mat3 f2 = detail::frame(g, s2);
    Mat3 jp = detail::frame_inverse_factor(g.kind);
    Mat3 m_std = f2 * jp * f1.transpose() * g.J();
    return ProjMat::from(c * m_std * c.inverse());
}

// Rotation by pi about a point: the unique nontrivial isometry fixing the
// point with differential -I.
inline ProjMat pi_rotation(const GeometryModel& g, const Vec2& center) {
    g.require_inside(center);
    Mat3 c = g.C();
    if (g.kind == GeomKind::Euclidean) {
        Mat3 m = -Mat3::Identity();
        m(2, 2) = 1.0;
        m(0, 2) = 2.0 * center.x() / g.alpha;
        m(1, 2) = 2.0 * center.y() / g.beta;
        return ProjMat::from(c * m * c.inverse());
    }
    double sigma = detail::form_sign(g.kind);
    Vec2 cs = g.to_std(center);
    Vec3 ch(cs.x(), cs.y(), 1.0);
    double b = detail::bilinear(ch, ch, sigma);
    Mat3 m = 2.0 * (ch * (g.J() * ch).transpose()) / b - Mat3::Identity();
    return ProjMat::from(c * m * c.inverse());
}

// One-parameter motion translating the x-axis through the origin. Used as
// a reference family in tests and distortion experiments.
inline Mat3 standard_translation(const GeometryModel& g, double tau) {
    Mat3 m = Mat3::Identity();
    switch (g.kind) {
        case GeomKind::Euclidean:
            m(0, 2) = tau;
            break;
        case GeomKind::Hyperbolic:
            m(0, 0) = std::cosh(tau);
            m(0, 2) = std::sinh(tau);
            m(2, 0) = std::sinh(tau);
            m(2, 2) = std::cosh(tau);
            break;
        case GeomKind::Spherical:
            m(0, 0) = std::cos(tau);
            m(0, 2) = std::sin(tau);
            m(2, 0) = -std::sin(tau);
            m(2, 2) = std::cos(tau);
            break;
    }
    Mat3 c = g.C();
    return c * m * c.inverse();
}

// Rotation about the chart origin by omega, an isometry for every kind
// when alpha = beta; exposed for building tilted test isometries.
inline Mat3 origin_rotation(double omega) {
    Mat3 m = Mat3::Identity();
    m(0, 0) = std::cos(omega);
    m(0, 1) = -std::sin(omega);
    m(1, 0) = std::sin(omega);
    m(1, 1) = std::cos(omega);
    return m;
}

// Determinant of the affine differential of a projective map at p.
inline double projective_jacobian_det(const Mat3& m, const Vec2& p) {
    Vec3 ph(p.x(), p.y(), 1.0);
    double w = m.row(2).dot(ph);
    if (std::abs(w) <= 1e-12 * ph.norm() * m.norm()) {
        throw AtInfinity("differential undefined on the preimage of infinity");
    }
    return m.determinant() / (w * w * w);
}

} // namespace heis
