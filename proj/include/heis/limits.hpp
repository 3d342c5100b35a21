#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

#include "heis/lie_core.hpp"

namespace heis {

// Diagonal conjugation path t -> diag(t^pe, t^qe, 1), normalized so the
// stretches satisfy a_t >= b_t >= 1 for t >= 1.
struct DiagPath {
    double pe = 0.0;
    double qe = 0.0;

    DiagPath(double p, double q) : pe(p), qe(q) {
        if (!(p >= q && q >= 0.0)) {
            throw std::invalid_argument("exponents must satisfy pe >= qe >= 0");
        }
    }

    Mat3 at(double t) const {
        Mat3 c = Mat3::Identity();
        c(0, 0) = std::pow(t, pe);
        c(1, 1) = std::pow(t, qe);
        return c;
    }

    // Growth exponent of matrix entry (i, j) under conjugation.
    double rate(int i, int j) const {
        std::array<double, 3> e{pe, qe, 0.0};
        return e[i] - e[j];
    }
};

enum class AlgebraBase { so3, so21, euc2, heis };
enum class AlgebraTag { so3, so21, euc2, heis, halfpipe, other };

inline const char* to_string(AlgebraTag t) {
    switch (t) {
        case AlgebraTag::so3: return "so3";
        case AlgebraTag::so21: return "so21";
        case AlgebraTag::euc2: return "euc2";
        case AlgebraTag::heis: return "heis";
        case AlgebraTag::halfpipe: return "halfpipe";
        case AlgebraTag::other: return "other";
    }
    return "?";
}

inline const char* to_string(AlgebraBase b) {
    switch (b) {
        case AlgebraBase::so3: return "so3";
        case AlgebraBase::so21: return "so21";
        case AlgebraBase::euc2: return "euc2";
        case AlgebraBase::heis: return "heis";
    }
    return "?";
}

// Three-dimensional subspace of the 3x3 matrices, spanned by basis.
struct Subalgebra3 {
    std::array<Mat3, 3> basis;
    bool orthonormalized = false;
};

namespace detail {

inline Mat3 elem(int i, int j) {
    Mat3 m = Mat3::Zero();
    m(i, j) = 1.0;
    return m;
}

using Mat93 = Eigen::Matrix<double, 9, 3>;

inline Mat93 flatten(const Subalgebra3& s) {
    Mat93 m;
    for (int k = 0; k < 3; ++k) {
        m.col(k) = Eigen::Map<const Eigen::Matrix<double, 9, 1>>(s.basis[k].data());
    }
    return m;
}

inline Subalgebra3 unflatten(const Mat93& m, bool ortho) {
    Subalgebra3 s;
    for (int k = 0; k < 3; ++k) {
        s.basis[k] = Eigen::Map<const Mat3>(m.col(k).data());
    }
    s.orthonormalized = ortho;
    return s;
}

inline Mat93 orthonormal_columns(const Subalgebra3& s) {
    Mat93 m = flatten(s);
    Eigen::HouseholderQR<Mat93> qr(m);
    Eigen::Matrix<double, 9, 9> qfull = qr.householderQ();
    Eigen::Matrix<double, 3, 3> r =
        qr.matrixQR().topRows(3).template triangularView<Eigen::Upper>();
    double scale = m.norm();
    for (int k = 0; k < 3; ++k) {
        if (std::abs(r(k, k)) <= 1e-12 * std::max(1.0, scale)) {
            throw std::invalid_argument("basis is linearly dependent");
        }
    }
    return qfull.leftCols(3);
}

} // namespace detail

inline Subalgebra3 orthonormalize(const Subalgebra3& s) {
    return detail::unflatten(detail::orthonormal_columns(s), true);
}

// Reference bases, chosen as elementary (skew-)symmetric generators so
// that diagonal conjugation scales single entries.
inline Subalgebra3 standard_basis(AlgebraBase b) {
    using detail::elem;
    Mat3 r01 = elem(0, 1) - elem(1, 0);
    switch (b) {
        case AlgebraBase::so3:
            return {{r01, elem(0, 2) - elem(2, 0), elem(1, 2) - elem(2, 1)}, false};
        case AlgebraBase::so21:
            return {{r01, elem(0, 2) + elem(2, 0), elem(1, 2) + elem(2, 1)}, false};
        case AlgebraBase::euc2:
            return {{r01, elem(0, 2), elem(1, 2)}, false};
        case AlgebraBase::heis:
            return {{elem(0, 1), elem(0, 2), elem(1, 2)}, false};
    }
    throw std::invalid_argument("bad base");
}

inline Subalgebra3 conjugated_algebra_at(AlgebraBase base, const DiagPath& path,
                                         double t) {
    Mat3 c = path.at(t);
    Mat3 ci = Mat3::Identity();
    ci(0, 0) = 1.0 / c(0, 0);
    ci(1, 1) = 1.0 / c(1, 1);
    Subalgebra3 s = standard_basis(base);
    for (Mat3& x : s.basis) x = c * x * ci;
    return s;
}

// The t -> infinity subspace, computed symbolically: each basis element is
// rescaled by its dominant entry growth rate t^(e_i - e_j) and every
// sub-dominant entry is zeroed.
inline Subalgebra3 limit_algebra(AlgebraBase base, const DiagPath& path) {
    Subalgebra3 s = standard_basis(base);
    for (Mat3& x : s.basis) {
        double top = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                if (x(i, j) != 0.0) top = std::max(top, path.rate(i, j));
            }
        }
        Mat3 lim = Mat3::Zero();
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                if (x(i, j) != 0.0 && path.rate(i, j) >= top - 1e-12) {
                    lim(i, j) = x(i, j);
                }
            }
        }
        x = lim;
    }
    return s;
}

// Largest principal angle between the spanned subspaces of 9-space;
// formed from sines, so identical subspaces give zero to full precision.
inline double subspace_distance(const Subalgebra3& s1, const Subalgebra3& s2) {
    detail::Mat93 q1 = detail::orthonormal_columns(s1);
    detail::Mat93 q2 = detail::orthonormal_columns(s2);
    detail::Mat93 resid = q2 - q1 * (q1.transpose() * q2);
    Eigen::JacobiSVD<detail::Mat93> svd(resid);
    double s = std::clamp(svd.singularValues()(0), 0.0, 1.0);
    return std::asin(s);
}

// Classification of a closed 3-dimensional subalgebra by its structure:
// dimension of the derived algebra, centrality, and either the Killing
// signature (semisimple case) or the determinant of the adjoint action on
// the derived plane (solvable case), which separates rotation-type euc2
// from boost-type halfpipe limits.
inline AlgebraTag classify_algebra(const Subalgebra3& s, double tol = kTol) {
    detail::Mat93 q = detail::orthonormal_columns(s);
    std::array<Mat3, 3> b;
    for (int k = 0; k < 3; ++k) {
        b[k] = Eigen::Map<const Mat3>(q.col(k).data());
    }

    std::array<Mat3, 3> br = {b[0] * b[1] - b[1] * b[0], b[0] * b[2] - b[2] * b[0],
                              b[1] * b[2] - b[2] * b[1]};
    detail::Mat93 brm;
    for (int k = 0; k < 3; ++k) {
        brm.col(k) = Eigen::Map<const Eigen::Matrix<double, 9, 1>>(br[k].data());
    }

    detail::Mat93 out_of_span = brm - q * (q.transpose() * brm);
    if (out_of_span.colwise().norm().maxCoeff() > tol) {
        throw NotClosed("bracket leaves the spanned subspace");
    }

    Eigen::JacobiSVD<detail::Mat93> svd(brm, Eigen::ComputeFullU);
    Eigen::Vector3d sv = svd.singularValues();
    int rank = 0;
    for (int k = 0; k < 3; ++k) {
        if (sv(k) > tol * std::max(1.0, sv(0))) ++rank;
    }

    if (rank == 3) {
        // Semisimple: structure constants and Killing form in the
        // orthonormal basis.
        Eigen::Matrix3d ad[3];
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                Mat3 cij = b[i] * b[j] - b[j] * b[i];
                Eigen::Matrix<double, 9, 1> v =
                    Eigen::Map<const Eigen::Matrix<double, 9, 1>>(cij.data());
                ad[i].col(j) = q.transpose() * v;
            }
        }
        Eigen::Matrix3d killing;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                killing(i, j) = (ad[i] * ad[j]).trace();
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(0.5 *
                                                          (killing + killing.transpose()));
        int neg = 0, pos = 0;
        for (int k = 0; k < 3; ++k) {
            if (es.eigenvalues()(k) < -tol) ++neg;
            if (es.eigenvalues()(k) > tol) ++pos;
        }
        if (neg == 3) return AlgebraTag::so3;
        if (neg > 0 && pos > 0 && neg + pos == 3) return AlgebraTag::so21;
        return AlgebraTag::other;
    }

    if (rank == 1) {
        // Two-step nilpotent iff the derived line is central.
        Mat3 d = Eigen::Map<const Mat3>(svd.matrixU().col(0).data());
        for (int k = 0; k < 3; ++k) {
            if ((d * b[k] - b[k] * d).norm() > tol) return AlgebraTag::other;
        }
        return AlgebraTag::heis;
    }

    if (rank == 2) {
        Mat3 d0 = Eigen::Map<const Mat3>(svd.matrixU().col(0).data());
        Mat3 d1 = Eigen::Map<const Mat3>(svd.matrixU().col(1).data());
        if ((d0 * d1 - d1 * d0).norm() > tol) return AlgebraTag::other;

        // Direction of S transverse to the derived plane.
        Eigen::Matrix<double, 9, 1> v0 =
            Eigen::Map<const Eigen::Matrix<double, 9, 1>>(d0.data());
        Eigen::Matrix<double, 9, 1> v1 =
            Eigen::Map<const Eigen::Matrix<double, 9, 1>>(d1.data());
        Mat3 x = Mat3::Zero();
        double best = -1.0;
        for (int k = 0; k < 3; ++k) {
            Eigen::Matrix<double, 9, 1> v = q.col(k);
            v -= v0 * (v0.dot(q.col(k)));
            v -= v1 * (v1.dot(q.col(k)));
            if (v.norm() > best) {
                best = v.norm();
                Eigen::Matrix<double, 9, 1> vn = v / v.norm();
                x = Eigen::Map<const Mat3>(vn.data());
            }
        }

        // ad_x on the derived plane: rotation-like (det > 0) is the
        // Euclidean algebra, boost-like (det < 0) the half-pipe one.
        auto coords = [&](const Mat3& w) {
            Eigen::Matrix<double, 9, 1> vw =
                Eigen::Map<const Eigen::Matrix<double, 9, 1>>(w.data());
            return Eigen::Vector2d(v0.dot(vw), v1.dot(vw));
        };
        Eigen::Vector2d c0 = coords(x * d0 - d0 * x);
        Eigen::Vector2d c1 = coords(x * d1 - d1 * x);
        double det = c0(0) * c1(1) - c0(1) * c1(0);
        if (det > tol) return AlgebraTag::euc2;
        if (det < -tol) return AlgebraTag::halfpipe;
        return AlgebraTag::other;
    }

    return AlgebraTag::other;
}

} // namespace heis
