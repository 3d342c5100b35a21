#pragma once

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "heis/regeneration.hpp"
#include "heis/tori.hpp"

namespace heis::svg {

// Minimal SVG assembler. Elements are collected in user coordinates with a
// y-flip applied at render time; the viewBox is fitted to everything drawn.
class Canvas {
public:
    void polygon(const std::vector<Vec2>& pts, const std::string& fill,
                 const std::string& stroke, double width) {
        std::string d;
        for (const Vec2& p : pts) {
            d += d.empty() ? "" : " ";
            d += fmt(p.x()) + "," + fmt(-p.y());
            grow(p);
        }
        body_ += "<polygon points=\"" + d + "\" fill=\"" + fill + "\" stroke=\"" +
                 stroke + "\" stroke-width=\"" + fmt(width) + "\"/>\n";
    }

    void line(const Vec2& a, const Vec2& b, const std::string& stroke, double width,
              const std::string& dash = "") {
        grow(a);
        grow(b);
        body_ += "<line x1=\"" + fmt(a.x()) + "\" y1=\"" + fmt(-a.y()) + "\" x2=\"" +
                 fmt(b.x()) + "\" y2=\"" + fmt(-b.y()) + "\" stroke=\"" + stroke +
                 "\" stroke-width=\"" + fmt(width) + "\"";
        if (!dash.empty()) body_ += " stroke-dasharray=\"" + dash + "\"";
        body_ += "/>\n";
    }

    void circle(const Vec2& c, double r, const std::string& fill) {
        grow(c + Vec2(r, r));
        grow(c - Vec2(r, r));
        body_ += "<circle cx=\"" + fmt(c.x()) + "\" cy=\"" + fmt(-c.y()) + "\" r=\"" +
                 fmt(r) + "\" fill=\"" + fill + "\"/>\n";
    }

    std::string document() const {
        double w = std::max(max_x_ - min_x_, 1e-9);
        double h = std::max(max_y_ - min_y_, 1e-9);
        double pad = 0.05 * std::max(w, h);
        std::string vb = fmt(min_x_ - pad) + " " + fmt(-max_y_ - pad) + " " +
                         fmt(w + 2 * pad) + " " + fmt(h + 2 * pad);
        return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
               "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" +
               vb + "\">\n" + body_ + "</svg>\n";
    }

private:
    static std::string fmt(double v) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6g", v);
        return buf;
    }

    void grow(const Vec2& p) {
        min_x_ = std::min(min_x_, p.x());
        max_x_ = std::max(max_x_, p.x());
        min_y_ = std::min(min_y_, p.y());
        max_y_ = std::max(max_y_, p.y());
    }

    std::string body_;
    double min_x_ = 0.0, max_x_ = 0.0, min_y_ = 0.0, max_y_ = 0.0;
};

// Developing-map tessellation: one polygon per tile, checkerboard fill
// keyed by the parity of m + n.
inline std::string render_tiling(const std::vector<TilePatch>& tiles) {
    Canvas c;
    for (const TilePatch& tile : tiles) {
        std::vector<Vec2> pts;
        for (int k = 0; k < 4; ++k) {
            for (const Vec2& p : tile.edges[k]) pts.push_back(p);
        }
        bool odd = ((tile.m + tile.n) & 1) != 0;
        c.polygon(pts, odd ? "#dce7f5" : "#f5ead8", "#30343a", 0.01);
    }
    return c.document();
}

// One panel per schedule time: the fixed parallelogram plus its midlines,
// stroked apart from the outline so the invariant lines stand out.
inline std::string render_regeneration(const RepParams& params, GeomKind kind,
                                       double pe, double qe,
                                       const std::vector<double>& times) {
    TranslationDomain dom = translation_fundamental_domain(params);
    Canvas c;
    double span = 0.0;
    for (const Vec2& v : dom.Q.vertices) span = std::max(span, 2.5 * v.norm());

    int panel = 0;
    for (double t : times) {
        Vec2 shift(panel * span, 0.0);
        std::vector<Vec2> pts;
        for (int k = 0; k < 4; ++k) pts.push_back(dom.Q.vertices[k] + shift);
        c.polygon(pts, "#f5ead8", "#30343a", 0.015);

        GeometryModel m(kind, std::pow(t, pe), std::pow(t, qe));
        bool inside = true;
        for (const Vec2& v : dom.Q.vertices) inside = inside && m.contains(v);
        if (inside) {
            auto mid = [&](int k) {
                OrientedSegment e = dom.Q.edge(k);
                return midpoint(m, e.start, e.end) + shift;
            };
            c.line(mid(0), mid(2), "#b03030", 0.02, "0.05,0.03");
            c.line(mid(1), mid(3), "#3050b0", 0.02, "0.05,0.03");
            Midlines ml = midlines(cone_torus_from_parallelogram(m, dom.Q));
            c.circle(ml.intersection + shift, 0.035, "#222222");
        }
        ++panel;
    }
    return c.document();
}

} // namespace heis::svg
