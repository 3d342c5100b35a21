#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "heis/models.hpp"
#include "heis/tori.hpp"

namespace heis {

// Affine parallelogram with vertices in counterclockwise cyclic order.
// Edge k joins vertex k to vertex k+1; edges k and k+2 are opposite.
struct MarkedParallelogram {
    std::array<Vec2, 4> vertices;

    Vec2 centroid() const {
        return 0.25 * (vertices[0] + vertices[1] + vertices[2] + vertices[3]);
    }

    OrientedSegment edge(int k) const {
        return {vertices[k % 4], vertices[(k + 1) % 4]};
    }
};

namespace detail {

// Opposite edge midpoints must agree through the centroid; equivalently
// the diagonals share their affine midpoint.
inline void require_parallelogram(const MarkedParallelogram& q) {
    double scale = 0.0;
    for (const Vec2& v : q.vertices) scale = std::max(scale, v.norm());
    Vec2 gap = (q.vertices[0] + q.vertices[2]) - (q.vertices[1] + q.vertices[3]);
    if (gap.norm() > 1e-9 * std::max(1.0, scale)) {
        throw std::invalid_argument("vertices do not form a parallelogram");
    }
}

} // namespace detail

struct TranslationDomain {
    MarkedParallelogram Q;
    HeisElem A;
    HeisElem B;
};

// Origin-centered fundamental parallelogram of a translation torus. The
// side pairings are the generator holonomies themselves: A translates by
// p = (A.c, A.b), carrying edge 0 onto edge 2, and B by q = (B.c, B.b),
// carrying edge 3 onto edge 1. Vertex 0 sits at -(p+q)/2 and the cycle
// runs through q first, which is counterclockwise when lambda > 0.
inline TranslationDomain translation_fundamental_domain(const RepParams& params) {
    if (classify(params) != RepClass::CompleteTranslation) {
        throw NotTranslation("fundamental parallelogram requires translation holonomy");
    }
    RepZ2 rep = canonical_rep(params);
    HeisElem A = exp_heis(rep.Xa);
    HeisElem B = exp_heis(rep.Xb);
    Vec2 p(A.c, A.b);
    Vec2 q(B.c, B.b);

    MarkedParallelogram Q;
    Q.vertices = {-0.5 * (p + q), 0.5 * (q - p), 0.5 * (p + q), 0.5 * (p - q)};
    return {Q, A, B};
}

struct ConeTorusData {
    MarkedParallelogram Q;
    ProjMat A;
    ProjMat B;
    double cone_angle = 0.0;
    GeometryModel geometry;
};

// Build a cone torus from a parallelogram inside a model: pair opposite
// sides by the unique orientation-preserving isometries (A: edge 0 onto
// edge 2 reversed, B: edge 3 onto edge 1 reversed) and add up the four
// interior angles, whose excess over 2*pi carries the curvature sign.
inline ConeTorusData cone_torus_from_parallelogram(const GeometryModel& m,
                                                   const MarkedParallelogram& q,
                                                   double tol = kTol) {
    detail::require_parallelogram(q);
    for (const Vec2& v : q.vertices) m.require_inside(v);

    for (int k = 0; k < 2; ++k) {
        OrientedSegment e1 = q.edge(k), e2 = q.edge(k + 2);
        double d1 = dist(m, e1.start, e1.end);
        double d2 = dist(m, e2.start, e2.end);
        if (std::abs(d1 - d2) > 1e-9 * std::max(1.0, std::max(d1, d2))) {
            throw SideMismatch("opposite sides are not congruent in the model");
        }
    }

    ConeTorusData ct;
    ct.Q = q;
    ct.geometry = m;
    OrientedSegment e0 = q.edge(0);
    OrientedSegment e2r{q.vertices[3], q.vertices[2]};
    ct.A = segment_isometry(m, e0, e2r, tol);
    OrientedSegment e3 = q.edge(3);
    OrientedSegment e1r{q.vertices[2], q.vertices[1]};
    ct.B = segment_isometry(m, e3, e1r, tol);

    double total = 0.0;
    for (int k = 0; k < 4; ++k) {
        total += angle(m, q.vertices[k], q.vertices[(k + 3) % 4],
                       q.vertices[(k + 1) % 4]);
    }
    ct.cone_angle = total;
    return ct;
}

struct ConvergenceRow {
    double t = 0.0;
    bool domain_ok = false;
    double dist_a = 0.0;
    double dist_b = 0.0;
    double midpoint_drift = 0.0;
    double cone_angle = 0.0;
    double commutator_residual = 0.0;
};

struct ConvergenceReport {
    GeomKind kind = GeomKind::Euclidean;
    double pe = 0.0;
    double qe = 0.0;
    std::vector<ConvergenceRow> rows;
};

// Drive the regeneration schedule: the parallelogram stays fixed while the
// model is stretched by diag(t^pe, t^qe, 1). Each row compares the model's
// side pairings against the flat holonomies A, B, tracks how far model
// midpoints drift from affine ones, and watches the commutator die off.
// Rows whose parallelogram pokes outside the model domain are flagged
// rather than dropped, since containment only holds for large t.
inline ConvergenceReport regenerate_sequence(const RepParams& params, GeomKind kind,
                                             double pe, double qe,
                                             const std::vector<double>& times) {
    TranslationDomain dom = translation_fundamental_domain(params);
    if (times.empty()) {
        throw EmptySchedule("regeneration schedule has no time values");
    }
    if (!(pe >= qe && qe >= 0.0)) {
        throw std::invalid_argument("exponents must satisfy pe >= qe >= 0");
    }
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (times[i] < 1.0 || (i > 0 && times[i] <= times[i - 1])) {
            throw std::invalid_argument("times must be >= 1 and strictly increasing");
        }
    }

    Mat3 a_flat = dom.A.matrix();
    Mat3 b_flat = dom.B.matrix();

    ConvergenceReport report;
    report.kind = kind;
    report.pe = pe;
    report.qe = qe;

    for (double t : times) {
        ConvergenceRow row;
        row.t = t;
        GeometryModel m(kind, std::pow(t, pe), std::pow(t, qe));

        bool inside = true;
        for (const Vec2& v : dom.Q.vertices) inside = inside && m.contains(v);
        if (!inside) {
            report.rows.push_back(row);
            continue;
        }
        row.domain_ok = true;

        ConeTorusData ct = cone_torus_from_parallelogram(m, dom.Q);
        row.dist_a = pgl_distance(ct.A.m, a_flat);
        row.dist_b = pgl_distance(ct.B.m, b_flat);
        row.cone_angle = ct.cone_angle;
        row.commutator_residual = pgl_distance(ct.A.m * ct.B.m, ct.B.m * ct.A.m);

        double drift = 0.0;
        for (int k = 0; k < 4; ++k) {
            OrientedSegment e = dom.Q.edge(k);
            Vec2 mid = midpoint(m, e.start, e.end);
            drift = std::max(drift, (mid - 0.5 * (e.start + e.end)).norm());
        }
        row.midpoint_drift = drift;
        report.rows.push_back(row);
    }
    return report;
}

struct Midlines {
    Vec3 alpha;        // invariant line of the A pairing
    Vec3 beta;         // invariant line of the B pairing
    Vec2 intersection; // their common point, the center of the parallelogram
};

namespace detail {

inline Vec3 line_through(const Vec2& p, const Vec2& q) {
    Vec3 l = Vec3(p.x(), p.y(), 1.0).cross(Vec3(q.x(), q.y(), 1.0));
    return l / l.norm();
}

inline void require_line_invariant(const Mat3& g, const Vec3& line,
                                   const char* which) {
    Vec3 mapped = g.inverse().transpose() * line;
    mapped /= mapped.norm();
    double d = std::min((line - mapped).norm(), (line + mapped).norm());
    if (d > 1e-10) {
        throw InvarianceViolation(std::string(which) +
                                  " pairing does not preserve its midline");
    }
}

} // namespace detail

// Lines through the model midpoints of paired edges. Each side pairing
// preserves its own midline; the two midlines cross at the centroid.
inline Midlines midlines(const ConeTorusData& ct) {
    const GeometryModel& m = ct.geometry;
    auto mid = [&](int k) {
        OrientedSegment e = ct.Q.edge(k);
        return midpoint(m, e.start, e.end);
    };
    Midlines out;
    out.alpha = detail::line_through(mid(0), mid(2));
    out.beta = detail::line_through(mid(1), mid(3));

    detail::require_line_invariant(ct.A.m, out.alpha, "A");
    detail::require_line_invariant(ct.B.m, out.beta, "B");

    Vec3 x = out.alpha.cross(out.beta);
    if (std::abs(x.z()) <= 1e-12 * x.norm()) {
        throw AtInfinity("midlines are parallel");
    }
    out.intersection = Vec2(x.x() / x.z(), x.y() / x.z());
    return out;
}

struct ShearObstruction {
    std::vector<GeodesicClass> classes;
    int closed_count = 0;
    bool parallel_only = false;
    std::string statement;
};

// Witness that a shear torus cannot regenerate: all of its closed
// geodesic classes are parallel (horizontal), while midlines give every
// constant-curvature cone torus two transverse closed geodesics, a
// property that survives limits.
inline ShearObstruction shear_limit_obstruction(const RepParams& params, int max_class) {
    if (classify(params) != RepClass::CompleteShear) {
        throw NotShear("obstruction witness requires shear holonomy");
    }
    ShearObstruction w;
    w.classes = closed_geodesic_classes(params, max_class);
    w.parallel_only = true;
    for (const auto& cls : w.classes) {
        if (!cls.closed) continue;
        ++w.closed_count;
        if ((cls.direction - Vec2(1, 0)).norm() > 1e-12) w.parallel_only = false;
    }
    w.statement =
        "all closed geodesic classes are mutually parallel, but cone tori "
        "carry transverse invariant midlines, so no sequence of cone tori "
        "can converge to this structure";
    return w;
}

} // namespace heis
