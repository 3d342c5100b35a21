// Command-line front end: classification reports, developing-map SVGs,
// regeneration convergence tables, limit-algebra tables, and orbifold
// extension dumps. JSON output is deterministic: keys keep insertion
// order and every float is printed with 17 significant digits.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "heis/limits.hpp"
#include "heis/orbifolds.hpp"
#include "heis/regeneration.hpp"
#include "heis/svg.hpp"

using json = nlohmann::ordered_json;

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void dump_fixed(const json& j, std::string& out, int depth) {
    const std::string pad(2 * std::size_t(depth), ' ');
    const std::string pad_in(2 * std::size_t(depth + 1), ' ');
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            std::size_t i = 0;
            for (auto it = j.begin(); it != j.end(); ++it, ++i) {
                out += pad_in + json(it.key()).dump() + ": ";
                dump_fixed(it.value(), out, depth + 1);
                if (i + 1 < j.size()) out += ",";
                out += "\n";
            }
            out += pad + "}";
            return;
        }
        case json::value_t::array: {
            bool flat = true;
            for (const auto& v : j) {
                if (v.is_object() || v.is_array()) flat = false;
            }
            if (j.empty()) {
                out += "[]";
                return;
            }
            if (flat) {
                out += "[";
                for (std::size_t i = 0; i < j.size(); ++i) {
                    if (i) out += ", ";
                    dump_fixed(j[i], out, depth);
                }
                out += "]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                out += pad_in;
                dump_fixed(j[i], out, depth + 1);
                if (i + 1 < j.size()) out += ",";
                out += "\n";
            }
            out += pad + "]";
            return;
        }
        case json::value_t::number_float:
            out += fmt17(j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

std::string dump_fixed(const json& j) {
    std::string out;
    dump_fixed(j, out, 0);
    out += "\n";
    return out;
}

json vec2_json(const heis::Vec2& v) { return json::array({v.x(), v.y()}); }

json mat3_json(const heis::Mat3& m) {
    json rows = json::array();
    for (int i = 0; i < 3; ++i) {
        rows.push_back(json::array({m(i, 0), m(i, 1), m(i, 2)}));
    }
    return rows;
}

json params_json(const heis::RepParams& p) {
    json out;
    out["r"] = p.r;
    out["phi"] = p.phi;
    out["theta"] = p.theta;
    out["lambda"] = p.lambda;
    if (p.uvec) out["uvec"] = vec2_json(*p.uvec);
    return out;
}

struct Config {
    std::vector<double> params;
    std::vector<double> uvec;
    std::string geometry = "hyp";
    std::vector<double> exponents{2.0, 1.0};
    std::vector<double> times;
    int range = 2;
    int max_class = 5;
    std::string type;
    std::string algebra;
    std::string out_path;
    double tol = heis::kTol;
    bool as_json = false;
    bool as_svg = false;
};

heis::RepParams make_params(const Config& c) {
    return heis::RepParams{c.params[0], c.params[1], c.params[2], c.params[3]};
}

heis::RepZ2 make_rep(const Config& c) {
    if (!c.uvec.empty()) {
        return heis::params_to_rep(c.params[0], c.params[1], c.params[2],
                                   heis::Vec2(c.uvec[0], c.uvec[1]));
    }
    return heis::canonical_rep(c.params[0], c.params[1], c.params[2], c.params[3]);
}

heis::GeomKind make_kind(const std::string& g) {
    if (g == "sph") return heis::GeomKind::Spherical;
    if (g == "euc") return heis::GeomKind::Euclidean;
    return heis::GeomKind::Hyperbolic;
}

heis::OrbifoldType make_type(const std::string& name) {
    for (heis::OrbifoldType o : heis::all_orbifold_types()) {
        if (name == heis::to_string(o)) return o;
    }
    throw std::invalid_argument("unknown orbifold type: " + name);
}

heis::AlgebraBase make_algebra(const std::string& name) {
    using enum heis::AlgebraBase;
    if (name == "so3") return so3;
    if (name == "so21") return so21;
    if (name == "euc2") return euc2;
    if (name == "heis") return heis;
    throw std::invalid_argument("unknown algebra: " + name);
}

void emit(const Config& c, const std::string& text) {
    if (c.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + c.out_path);
    f << text;
}

json run_classify(const Config& c) {
    heis::RepZ2 rep = make_rep(c);
    heis::RepParams nf = heis::normal_form(rep, c.tol);
    heis::RepClass tag = heis::classify(rep, c.tol);

    json doc;
    doc["input"]["command"] = "classify";
    doc["input"]["params"] = params_json(make_params(c));
    if (!c.uvec.empty()) doc["input"]["uvec"] = json::array({c.uvec[0], c.uvec[1]});
    doc["input"]["tol"] = c.tol;
    doc["result"]["class"] = heis::to_string(tag);
    doc["result"]["complete"] = heis::is_complete(tag);
    doc["result"]["normal_form"] = params_json(nf);
    doc["diagnostics"]["in_variety"] = heis::in_variety(rep, c.tol);
    doc["diagnostics"]["bracket_residual"] =
        std::abs(rep.Xa.u * rep.Xb.v - rep.Xa.v * rep.Xb.u);
    return doc;
}

json run_develop_json(const Config& c, const std::vector<heis::TilePatch>& tiles) {
    json doc;
    doc["input"]["command"] = "develop";
    doc["input"]["params"] = params_json(make_params(c));
    doc["input"]["range"] = c.range;
    json patches = json::array();
    for (const heis::TilePatch& t : tiles) {
        json p;
        p["m"] = t.m;
        p["n"] = t.n;
        json corners = json::array();
        for (int k = 0; k < 4; ++k) corners.push_back(vec2_json(t.corner(k)));
        p["corners"] = corners;
        patches.push_back(p);
    }
    doc["result"]["count"] = int(tiles.size());
    doc["result"]["patches"] = patches;
    doc["diagnostics"]["min_interior_separation"] =
        heis::min_interior_separation(make_params(c), heis::Vec2(0.0, 0.0), c.range);
    return doc;
}

json run_geodesics(const Config& c) {
    heis::RepParams p = make_params(c);
    heis::DichotomyReport rep = heis::dichotomy_report(p, c.max_class, c.tol);
    auto classes = heis::closed_geodesic_classes(p, c.max_class, c.tol);

    json doc;
    doc["input"]["command"] = "geodesics";
    doc["input"]["params"] = params_json(p);
    doc["input"]["max_class"] = c.max_class;
    doc["result"]["type"] = heis::to_string(rep.type);
    doc["result"]["dichotomy_holds"] = rep.holds;
    doc["result"]["closed_count"] = rep.closed_count;
    doc["result"]["checked_classes"] = rep.checked_classes;
    json dirs = json::array();
    for (const heis::Vec2& d : rep.directions) dirs.push_back(vec2_json(d));
    doc["result"]["distinct_directions"] = dirs;
    json cls = json::array();
    for (const heis::GeodesicClass& g : classes) {
        json row;
        row["m"] = g.m;
        row["n"] = g.n;
        row["closed"] = g.closed;
        if (g.closed) row["direction"] = vec2_json(g.direction);
        cls.push_back(row);
    }
    doc["result"]["classes"] = cls;
    doc["diagnostics"]["tol"] = c.tol;
    return doc;
}

json run_regenerate(const Config& c) {
    heis::ConvergenceReport rep =
        heis::regenerate_sequence(make_params(c), make_kind(c.geometry),
                                  c.exponents[0], c.exponents[1], c.times);
    json doc;
    doc["input"]["command"] = "regenerate";
    doc["input"]["params"] = params_json(make_params(c));
    doc["input"]["geometry"] = c.geometry;
    doc["input"]["exponents"] = json::array({c.exponents[0], c.exponents[1]});
    doc["input"]["times"] = c.times;
    json rows = json::array();
    int flagged = 0;
    for (const heis::ConvergenceRow& r : rep.rows) {
        json row;
        row["t"] = r.t;
        row["domain_ok"] = r.domain_ok;
        row["dist_a"] = r.dist_a;
        row["dist_b"] = r.dist_b;
        row["midpoint_drift"] = r.midpoint_drift;
        row["cone_angle"] = r.cone_angle;
        row["commutator_residual"] = r.commutator_residual;
        rows.push_back(row);
        if (!r.domain_ok) ++flagged;
    }
    doc["result"]["rows"] = rows;
    doc["diagnostics"]["flagged_rows"] = flagged;
    return doc;
}

json run_limit(const Config& c) {
    heis::AlgebraBase base = make_algebra(c.algebra);
    heis::DiagPath path(c.exponents[0], c.exponents[1]);
    heis::Subalgebra3 lim = heis::limit_algebra(base, path);
    heis::AlgebraTag tag = heis::classify_algebra(lim);

    std::vector<double> times = c.times;
    if (times.empty()) times = {10.0, 100.0, 1000.0, 10000.0};

    json doc;
    doc["input"]["command"] = "limit";
    doc["input"]["algebra"] = c.algebra;
    doc["input"]["exponents"] = json::array({c.exponents[0], c.exponents[1]});
    doc["input"]["times"] = times;
    doc["result"]["limit_class"] = heis::to_string(tag);
    json basis = json::array();
    for (const heis::Mat3& b : lim.basis) basis.push_back(mat3_json(b));
    doc["result"]["limit_basis"] = basis;
    json dists = json::array();
    for (double t : times) {
        json row;
        row["t"] = t;
        row["distance"] = heis::subspace_distance(
            heis::conjugated_algebra_at(base, path, t), lim);
        dists.push_back(row);
    }
    doc["result"]["distances"] = dists;
    doc["diagnostics"]["base_class"] =
        heis::to_string(heis::classify_algebra(heis::standard_basis(base)));
    return doc;
}

json run_orbifold(const Config& c) {
    heis::OrbifoldType o = make_type(c.type);
    heis::RepParams p = make_params(c);
    bool member = heis::deformation_membership(o, p, c.tol);

    json doc;
    doc["input"]["command"] = "orbifold";
    doc["input"]["type"] = heis::to_string(o);
    doc["input"]["params"] = params_json(p);
    doc["input"]["tol"] = c.tol;
    doc["result"]["member"] = member;
    if (member) {
        heis::OrbifoldExtension e = heis::extend_holonomy(o, p, c.tol);
        doc["result"]["component"] = e.component;
        json gens;
        gens["a"] = mat3_json(heis::rho_a(p));
        gens["b"] = mat3_json(heis::rho_b(p));
        for (const auto& [letter, mat] : e.extras) {
            gens[std::string(1, letter)] = mat3_json(mat);
        }
        doc["result"]["generators"] = gens;
        doc["result"]["relations_ok"] = heis::check_relations(o, e);
        json rels = json::array();
        for (const heis::Word& w : heis::orbifold_relators(o, e.component)) {
            std::string word;
            for (const auto& [letter, power] : w) {
                word += letter;
                if (power != 1) word += "^" + std::to_string(power);
            }
            rels.push_back(word);
        }
        doc["diagnostics"]["relators"] = rels;
    } else {
        doc["diagnostics"]["relators"] = json::array();
    }
    return doc;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heisenberg plane toolkit"};
    app.require_subcommand(1);
    Config c;

    auto add_params = [&](CLI::App* sub) {
        sub->add_option("--params", c.params, "r,phi,theta,lambda")
            ->delimiter(',')
            ->expected(4)
            ->required();
        sub->add_option("--tol", c.tol, "classification tolerance");
    };
    auto add_out = [&](CLI::App* sub) {
        sub->add_option("--out", c.out_path, "output file (default stdout)");
    };

    CLI::App* classify = app.add_subcommand("classify", "normal form and type tag");
    add_params(classify);
    add_out(classify);
    classify->add_option("--uvec", c.uvec, "central offsets w,z")
        ->delimiter(',')
        ->expected(2);
    classify->add_flag("--json", c.as_json, "JSON output (default)");

    CLI::App* develop = app.add_subcommand("develop", "developing-map tessellation");
    add_params(develop);
    add_out(develop);
    develop->add_option("--range", c.range, "tile index range")->check(CLI::Range(0, 32));
    auto* dev_json = develop->add_flag("--json", c.as_json, "JSON patches");
    auto* dev_svg = develop->add_flag("--svg", c.as_svg, "SVG tessellation (default)");
    dev_json->excludes(dev_svg);

    CLI::App* geodesics = app.add_subcommand("geodesics", "closed geodesic classes");
    add_params(geodesics);
    add_out(geodesics);
    geodesics->add_option("--max-class", c.max_class, "largest |m|, |n|")
        ->check(CLI::Range(1, 64));
    geodesics->add_flag("--json", c.as_json, "JSON output (default)");

    CLI::App* regen = app.add_subcommand("regenerate", "convergence schedule");
    add_params(regen);
    add_out(regen);
    regen->add_option("--geometry", c.geometry, "model family")
        ->check(CLI::IsMember({"sph", "euc", "hyp"}));
    regen->add_option("--exponents", c.exponents, "diagonal exponents p,q")
        ->delimiter(',')
        ->expected(2);
    regen->add_option("--times", c.times, "schedule t1,t2,...")
        ->delimiter(',')
        ->required();
    auto* reg_json = regen->add_flag("--json", c.as_json, "JSON report (default)");
    auto* reg_svg = regen->add_flag("--svg", c.as_svg, "per-time SVG panels");
    reg_json->excludes(reg_svg);

    CLI::App* limit = app.add_subcommand("limit", "conjugation limit of a subalgebra");
    add_out(limit);
    limit->add_option("--algebra", c.algebra, "starting algebra")
        ->check(CLI::IsMember({"so3", "so21", "euc2", "heis"}))
        ->required();
    limit->add_option("--exponents", c.exponents, "diagonal exponents p,q")
        ->delimiter(',')
        ->expected(2);
    limit->add_option("--times", c.times, "sample times t1,t2,...")->delimiter(',');
    limit->add_flag("--json", c.as_json, "JSON output (default)");

    CLI::App* orbifold = app.add_subcommand("orbifold", "membership and extension");
    add_params(orbifold);
    add_out(orbifold);
    orbifold->add_option("--type", c.type, "orbifold tag")
        ->check(CLI::IsMember({"Torus", "KleinBottle", "Annulus", "MobiusBand",
                               "Pillowcase", "DiskTwoCones", "DiskFourCorners",
                               "DiskConeCorners", "RP2TwoCones"}))
        ->required();
    orbifold->add_flag("--json", c.as_json, "JSON output (default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (classify->parsed()) {
            emit(c, dump_fixed(run_classify(c)));
        } else if (develop->parsed()) {
            auto tiles = heis::develop_tiling(make_params(c), heis::Vec2(0.0, 0.0),
                                              c.range);
            if (c.as_json) {
                emit(c, dump_fixed(run_develop_json(c, tiles)));
            } else {
                emit(c, heis::svg::render_tiling(tiles));
            }
        } else if (geodesics->parsed()) {
            emit(c, dump_fixed(run_geodesics(c)));
        } else if (regen->parsed()) {
            if (c.as_svg) {
                emit(c, heis::svg::render_regeneration(make_params(c),
                                                       make_kind(c.geometry),
                                                       c.exponents[0], c.exponents[1],
                                                       c.times));
            } else {
                emit(c, dump_fixed(run_regenerate(c)));
            }
        } else if (limit->parsed()) {
            emit(c, dump_fixed(run_limit(c)));
        } else if (orbifold->parsed()) {
            emit(c, dump_fixed(run_orbifold(c)));
        }
        return 0;
    } catch (const heis::Error& e) {
        json err;
        err["error"]["kind"] = e.kind();
        err["error"]["detail"] = e.what();
        std::cout << dump_fixed(err);
        return 1;
    } catch (const std::exception& e) {
        json err;
        err["error"]["kind"] = "invalid_argument";
        err["error"]["detail"] = e.what();
        std::cout << dump_fixed(err);
        return 1;
    }
}
