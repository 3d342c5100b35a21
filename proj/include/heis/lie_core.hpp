#pragma once

#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "heis/errors.hpp"

namespace heis {

using Mat3 = Eigen::Matrix3d;
using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;

inline constexpr double kTol = 1e-9;

// Element of the nilpotent algebra of upper-triangular matrices,
// stored in the shorthand (u, v | w):
//
//   [ 0  u  w ]
//   [ 0  0  v ]
//   [ 0  0  0 ]
struct HeisAlgVec {
    double u = 0.0;
    double v = 0.0;
    double w = 0.0;

    Mat3 matrix() const {
        Mat3 m = Mat3::Zero();
        m(0, 1) = u;
        m(0, 2) = w;
        m(1, 2) = v;
        return m;
    }

    HeisAlgVec operator+(const HeisAlgVec& o) const { return {u + o.u, v + o.v, w + o.w}; }
    HeisAlgVec operator-(const HeisAlgVec& o) const { return {u - o.u, v - o.v, w - o.w}; }
    HeisAlgVec operator-() const { return {-u, -v, -w}; }
    HeisAlgVec operator*(double s) const { return {s * u, s * v, s * w}; }

    double norm() const { return std::sqrt(u * u + v * v + w * w); }
};

inline HeisAlgVec operator*(double s, const HeisAlgVec& x) { return x * s; }

// [X, Y] = XY - YX lands in the center: (0, 0 | Xu Yv - Xv Yu).
inline HeisAlgVec bracket(const HeisAlgVec& x, const HeisAlgVec& y) {
    return {0.0, 0.0, x.u * y.v - x.v * y.u};
}

// Group element
//
//   [ eps   a    c  ]
//   [  0   eps   b  ]
//   [  0    0    1  ]
//
// with eps = +-1. eps = +1 is the identity component; eps = -1 is the
// second component of the orientation-preserving group (conjugation by
// diag(-1,-1,1) composed with a component-one element).
struct HeisElem {
    double eps = 1.0;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    Mat3 matrix() const {
        Mat3 m = Mat3::Identity();
        m(0, 0) = eps;
        m(1, 1) = eps;
        m(0, 1) = a;
        m(0, 2) = c;
        m(1, 2) = b;
        return m;
    }

    HeisElem operator*(const HeisElem& o) const {
        return {eps * o.eps,
                eps * o.a + o.eps * a,
                eps * o.b + b,
                eps * o.c + a * o.b + c};
    }

    HeisElem inverse() const {
        return {eps, -a, -eps * b, a * b - eps * c};
    }

    bool approx_identity(double tol = kTol) const {
        return eps > 0.0 && std::abs(a) <= tol && std::abs(b) <= tol && std::abs(c) <= tol;
    }
};

// exp of the nilpotent algebra: exact at second order.
inline HeisElem exp_heis(const HeisAlgVec& x) {
    return {1.0, x.u, x.v, x.w + 0.5 * x.u * x.v};
}

// Inverse of exp_heis on the identity component.
inline HeisAlgVec log_heis(const HeisElem& g) {
    if (g.eps < 0.0) {
        throw OrientationError("log is defined only on the identity component (eps = +1)");
    }
    return {g.a, g.b, g.c - 0.5 * g.a * g.b};
}

// Ad_g X for g = (eps, a, b, c): closed form of g X g^{-1}.
inline HeisAlgVec adjoint(const HeisElem& g, const HeisAlgVec& x) {
    return {x.u,
            g.eps * x.v,
            g.eps * x.w + g.a * x.v - g.b * x.u};
}

// Conjugation by an arbitrary invertible matrix. The result is read off the
// strictly upper-triangular entries; callers are expected to pass matrices
// normalizing the algebra (diagonal sign matrices, group elements).
inline HeisAlgVec adjoint(const Mat3& g, const HeisAlgVec& x) {
    Mat3 m = g * x.matrix() * g.inverse();
    return {m(0, 1), m(1, 2), m(0, 2)};
}

// Projective matrix: representative of a class in PGL(3,R), kept at unit
// Frobenius norm with the first row-major entry of magnitude above 1e-12
// made positive. normalize() is idempotent.
struct ProjMat {
    Mat3 m = Mat3::Identity();

    static ProjMat from(const Mat3& raw) {
        ProjMat p;
        p.m = raw;
        p.normalize();
        return p;
    }

    void normalize() {
        double n = m.norm();
        if (n < 1e-300) {
            throw SingularMatrix("cannot normalize null matrix");
        }
        m /= n;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                double e = m(i, j);
                if (std::abs(e) > 1e-12) {
                    if (e < 0.0) m = -m;
                    return;
                }
            }
        }
    }

    ProjMat operator*(const ProjMat& o) const { return from(m * o.m); }

    ProjMat inverse() const {
        if (std::abs(m.determinant()) < 1e-12) {
            throw SingularMatrix("projective representative is numerically singular");
        }
        return from(m.inverse());
    }
};

// Distance between classes: minimum over the sign ambiguity of the
// Frobenius distance of unit-norm representatives.
inline double pgl_distance(const ProjMat& p, const ProjMat& q) {
    Mat3 a = p.m / p.m.norm();
    Mat3 b = q.m / q.m.norm();
    return std::min((a - b).norm(), (a + b).norm());
}

inline double pgl_distance(const Mat3& p, const Mat3& q) {
    return pgl_distance(ProjMat::from(p), ProjMat::from(q));
}

// Action of a projective matrix on an affine point (x, y) ~ (x, y, 1).
inline Vec2 apply_point(const Mat3& g, const Vec2& p) {
    Vec3 h = g * Vec3(p.x(), p.y(), 1.0);
    if (std::abs(h.z()) <= 1e-12 * h.norm()) {
        throw AtInfinity("image of point lies on the line at infinity");
    }
    return {h.x() / h.z(), h.y() / h.z()};
}

inline Vec2 apply_point(const HeisElem& g, const Vec2& p) {
    return apply_point(g.matrix(), p);
}

inline Vec2 apply_point(const ProjMat& g, const Vec2& p) {
    return apply_point(g.m, p);
}

} // namespace heis
