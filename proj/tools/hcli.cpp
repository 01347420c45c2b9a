#include "hc/io.hpp"
#include "hc/svg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>

using namespace hc;

namespace {

struct Globals {
    std::string prec = "10";
    int zeta_order = 12;
    std::uint64_t seed = 1;
    std::string out;
};

// Thrown values carry the module that failed.
struct ModuleError : std::runtime_error {
    ModuleError(const std::string& module, const std::string& what) : std::runtime_error(module + ": " + what) {}
};

template <class F>
auto in_module(const char* module, F&& f)
{
    try {
        return f();
    } catch (const PrecisionError& e) {
        throw ModuleError(std::string(module) + " (precision exhausted)", e.what());
    }
}

void emit(const Globals& g, const std::string& text)
{
    if (g.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream o(g.out, std::ios::binary);
    if (!o) throw std::invalid_argument("cannot write '" + g.out + "'");
    o << text;
    if (!text.empty() && text.back() != '\n') o << '\n';
}

std::string dump(const Json& j) { return j.dump(2); }

// Exact rational constants print bare so they can be compared as numbers.
std::string plain(const Series& s)
{
    if (s.is_exact_zero()) return "0";
    if (s.is_monomial() && s.val() == 0 && s.coeff(Rat(0)).is_rational()) return to_string(s.coeff(Rat(0)).rational_part());
    return s.str();
}

long reversion_order(const Series& iota)
{
    if (!iota.has_support() || iota.val() >= 0) throw std::domain_error("tate-q: j must have negative valuation");
    const Rat Q = -iota.val();
    const long k = to_long(floor_rat(working_prec() / Q)) + 1;
    return std::max(k, 1L);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Honeycomb cubics, Tate parametrizations and tropical group laws"};
    // no require_subcommand: an unknown word then surfaces as an ExtrasError naming it
    app.require_subcommand(0, 1);
    app.fallthrough();
    Globals g;
    app.add_option("--prec", g.prec, "working precision p/q (absolute truncation order)");
    app.add_option("--zeta-order", g.zeta_order, "N for the coefficient field Q(zeta_N)")->check(CLI::IsMember({3, 6, 12}));
    app.add_option("--seed", g.seed, "seed for randomized checks");
    app.add_option("--out", g.out, "write the result here instead of stdout");

    std::string input;
    bool as_json = false;

    auto* jinv = app.add_subcommand("jinv", "j-invariant of a cubic file");
    jinv->add_option("input", input, "cubic JSON")->required();

    auto* chk = app.add_subcommand("check-honeycomb", "classify a cubic file");
    chk->add_option("input", input, "cubic JSON")->required();
    chk->add_flag("--json", as_json, "print ratio valuations as JSON");

    auto* trop = app.add_subcommand("tropicalize", "tropical curve of a cubic file");
    trop->add_option("input", input, "cubic JSON")->required();

    std::string iota_text, a_text;
    auto* roots = app.add_subcommand("roots", "Puiseux roots of a polynomial file {\"coeffs\": [c0, c1, ...]} or of the symmetric b-equation");
    roots->add_option("input", input, "polynomial JSON");
    roots->add_option("--iota", iota_text, "solve the b-equation for this j");
    roots->add_option("--a", a_text, "a for the b-equation (default 0)");

    auto* sym = app.add_subcommand("symmetrize", "transform a cubic into symmetric honeycomb form");
    sym->add_option("input", input, "cubic JSON")->required();
    sym->add_option("--a", a_text, "prescribed a");

    std::string j_text;
    auto* tq = app.add_subcommand("tate-q", "Tate parameter from a cubic file or from --j");
    tq->add_option("input", input, "cubic JSON");
    tq->add_option("--j", j_text, "classical j as a series literal");

    auto* imp = app.add_subcommand("implicitize", "plane cubic of a theta-parameter file");
    imp->add_option("input", input, "params JSON")->required();

    bool check_euler = false;
    int sample = 0;
    auto* tgl = app.add_subcommand("tgl", "tropical group law complex of a params file");
    tgl->add_option("input", input, "params JSON")->required();
    tgl->add_flag("--check-euler", check_euler, "fail unless the bounded part has Euler characteristic 0");
    tgl->add_option("--sample", sample, "check this many random lift triples against the complex");

    bool inflections = false;
    auto* svg = app.add_subcommand("render-svg", "draw a curve, cubic, params or complex JSON file");
    svg->add_option("input", input, "JSON input")->required();
    svg->add_flag("--inflections", inflections, "mark inflection retraction positions (params input)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    if (app.get_subcommands().empty()) {
        std::cerr << "error: a subcommand is required\n" << app.help();
        return 2;
    }

    try {
        SessionConfig cfg;
        cfg.prec = parse_rat(g.prec);
        if (cfg.prec <= 0) throw std::invalid_argument("--prec must be positive");
        cfg.zeta_order = g.zeta_order;
        cfg.seed = g.seed;
        set_session(cfg);

        if (*jinv) {
            const TernaryCubic f = cubic_from_json(read_json_file(input));
            emit(g, plain(in_module("cubic_forms", [&] { return j_invariant(f); })));
        } else if (*chk) {
            const TernaryCubic f = cubic_from_json(read_json_file(input));
            const HoneycombRatios r = in_module("honeycomb", [&] { return honeycomb_ratios(f); });
            if (!as_json) {
                emit(g, to_string(r.cls));
            } else {
                Json j = {{"class", to_string(r.cls)}, {"hexagon", Json::array()}, {"tentacles", Json::array()}, {"reason", r.reason}};
                for (const auto& v : r.hexagon_vals) j["hexagon"].push_back(to_string(v));
                for (int k = 0; k < 3; ++k) j["tentacles"].push_back(r.tentacle_unbounded[k] ? std::string("inf") : to_string(r.tentacle_vals[k]));
                emit(g, dump(j));
            }
        } else if (*trop) {
            const TernaryCubic f = cubic_from_json(read_json_file(input));
            emit(g, dump(curve_to_json(in_module("honeycomb", [&] { return tropicalize_cubic(f); }))));
        } else if (*roots) {
            Json j = {{"roots", Json::array()}, {"unrepresentable", Json::array()}};
            if (!iota_text.empty()) {
                const Series iota = parse_series(iota_text), a = a_text.empty() ? Series() : parse_series(a_text);
                for (const auto& r : in_module("newton_puiseux", [&] { return solve_symmetric_b(iota, a, working_prec()); })) j["roots"].push_back(r.str());
            } else {
                if (input.empty()) throw std::invalid_argument("roots: give a polynomial file or --iota");
                const Json pj = read_json_file(input);
                if (!pj.contains("coeffs") || !pj.at("coeffs").is_array()) throw std::invalid_argument("roots: missing key 'coeffs'");
                SeriesPoly p;
                for (const auto& c : pj.at("coeffs")) p.c.push_back(parse_series(c.get<std::string>()));
                const PuiseuxResult res = in_module("newton_puiseux", [&] { return puiseux_roots(p, working_prec()); });
                for (const auto& r : res.roots) j["roots"].push_back(r.str());
                for (const auto& [v, n] : res.unrepresentable) j["unrepresentable"].push_back({{"valuation", to_string(v)}, {"count", n}});
            }
            emit(g, dump(j));
        } else if (*sym) {
            const TernaryCubic f = cubic_from_json(read_json_file(input));
            std::optional<Series> a;
            if (!a_text.empty()) a = parse_series(a_text);
            const SymmetrizeResult r = in_module("symmetrize", [&] { return symmetrize_pipeline(f, working_prec(), a); });
            Json j = {{"M", matrix_to_json(r.m)},
                      {"g", cubic_to_json(r.g)},
                      {"a", r.a.str()},
                      {"b", r.b.str()},
                      {"omega", r.omega.str()},
                      {"transforms_tested", r.transforms_tested},
                      {"accepted_perm", r.accepted_perm},
                      {"agreement", to_string(r.agreement)}};
            emit(g, dump(j));
        } else if (*tq) {
            Series iota;
            if (!j_text.empty()) {
                iota = parse_series(j_text);
            } else {
                if (input.empty()) throw std::invalid_argument("tate-q: give a cubic file or --j");
                const TernaryCubic f = cubic_from_json(read_json_file(input));
                // j_invariant uses the opposite sign to the classical series
                iota = -in_module("cubic_forms", [&] { return j_invariant(f); });
            }
            const Series q = in_module("tate", [&] { return q_from_j(iota, reversion_order(iota)); });
            emit(g, dump(Json{{"q", q.str()}, {"val_q", to_string(q.val())}}));
        } else if (*imp) {
            const ThetaParams P = params_from_json(read_json_file(input));
            emit(g, dump(cubic_to_json(in_module("tate", [&] { return implicitize(P); }))));
        } else if (*tgl) {
            const ThetaParams P = params_from_json(read_json_file(input));
            const TGLComplex C = in_module("group_law", [&] { return tgl_build(P); });
            std::cout << C.f.str() << '\n';
            int status = 0;
            if (check_euler) {
                std::cout << "euler " << C.f.euler() << '\n';
                if (C.f.euler() != 0) status = 1;
            }
            if (sample > 0) {
                std::mt19937_64 rng(g.seed);
                const TGLSampleReport rep = in_module("group_law", [&] { return tgl_sample(P, C, sample, rng, true); });
                std::cout << "sample " << rep.located << '/' << rep.samples << " located, " << rep.theta_mismatches << " theta mismatches\n";
                for (const auto& f : rep.failures) std::cout << "  " << f << '\n';
                if (rep.located != rep.samples || rep.theta_mismatches) status = 1;
            }
            if (!g.out.empty()) emit(g, dump(complex_to_json(C)));
            return status;
        } else if (*svg) {
            const Json j = read_json_file(input);
            if (j.contains("cells")) {
                emit(g, render_torus_svg(complex_from_json(j), "torus net"));
            } else if (j.contains("vertices")) {
                emit(g, render_curve_svg(curve_from_json(j)));
            } else if (j.contains("c300")) {
                const TernaryCubic f = cubic_from_json(j);
                emit(g, render_curve_svg(in_module("honeycomb", [&] { return tropicalize_cubic(f); })));
            } else if (j.contains("p1")) {
                const ThetaParams P = params_from_json(j);
                const TropParametrization T = in_module("trop_theta", [&] { return trop_parametrization(P); });
                SvgOptions opt;
                if (inflections)
                    for (const auto& p : inflection_retractions(T.curve)) opt.marks.push_back(T.embed_hex(circle_position(p, T)));
                emit(g, render_curve_svg(T.curve, opt));
            } else {
                throw std::invalid_argument("render-svg: unrecognized JSON (expected curve, cubic, params or complex)");
            }
        }
    } catch (const ModuleError& e) {
        std::cerr << "error in " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
