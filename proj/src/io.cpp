#include "hc/io.hpp"

#include <fstream>
#include <stdexcept>

namespace hc {

namespace {

Series series_field(const Json& j, const std::string& key)
{
    if (!j.is_object() || !j.contains(key)) throw std::invalid_argument("missing key '" + key + "'");
    const Json& v = j.at(key);
    if (v.is_number_integer()) return Series(Rat(v.get<long>()));
    if (!v.is_string()) throw std::invalid_argument("key '" + key + "' must hold a series literal string");
    try {
        return parse_series(v.get<std::string>());
    } catch (const std::exception& e) {
        throw std::invalid_argument("key '" + key + "': " + e.what());
    }
}

Json rat_json(const Rat& r) { return to_string(r); }

Rat rat_of(const Json& j)
{
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (!j.is_string()) throw std::invalid_argument("expected a rational string, got " + j.dump());
    return parse_rat(j.get<std::string>());
}

Json pt_json(const Pt2& p) { return Json::array({rat_json(p[0]), rat_json(p[1])}); }
Pt2 pt_of(const Json& j) { return {rat_of(j.at(0)), rat_of(j.at(1))}; }
Json dir_json(const Dir2& d) { return Json::array({d[0], d[1]}); }
Dir2 dir_of(const Json& j) { return {j.at(0).get<long>(), j.at(1).get<long>()}; }

CellClass cell_class_of(const std::string& s)
{
    for (int c = 0; c <= static_cast<int>(CellClass::quadrant); ++c)
        if (to_string(static_cast<CellClass>(c)) == s) return static_cast<CellClass>(c);
    throw std::invalid_argument("unknown cell class '" + s + "'");
}

} // namespace

Json cubic_to_json(const TernaryCubic& f)
{
    Json j = Json::object();
    for (int i = 0; i < 10; ++i) j[TernaryCubic::key(i)] = f.c[i].str();
    return j;
}

TernaryCubic cubic_from_json(const Json& j)
{
    TernaryCubic f;
    for (int i = 0; i < 10; ++i) f.c[i] = series_field(j, TernaryCubic::key(i));
    return f;
}

Json params_to_json(const ThetaParams& P)
{
    Json j = Json::object();
    j["q"] = P.q.str();
    j["a"] = P.a.str();
    j["b"] = P.b.str();
    j["c"] = P.c.str();
    for (int i = 0; i < 9; ++i) j["p" + std::to_string(i + 1)] = P.p[i].str();
    return j;
}

ThetaParams params_from_json(const Json& j)
{
    ThetaParams P;
    P.q = series_field(j, "q");
    P.a = series_field(j, "a");
    P.b = series_field(j, "b");
    P.c = series_field(j, "c");
    for (int i = 0; i < 9; ++i) P.p[i] = series_field(j, "p" + std::to_string(i + 1));
    return P;
}

Json curve_to_json(const TropicalCubicCurve& c)
{
    Json j = Json::object();
    j["vertices"] = Json::array();
    for (const auto& v : c.vertices) j["vertices"].push_back(pt_json(v));
    j["edges"] = Json::array();
    for (const auto& e : c.edges)
        j["edges"].push_back({{"from", e.from}, {"to", e.to}, {"dir", dir_json(e.dir)}, {"length", rat_json(e.length)}, {"mult", e.mult}});
    j["rays"] = Json::array();
    for (const auto& r : c.rays) j["rays"].push_back({{"base", r.base}, {"dir", dir_json(r.dir)}, {"mult", r.mult}});
    if (c.hexagon) {
        Json h = {{"v", Json::array()}, {"ell", Json::array()}};
        for (int k = 0; k < 6; ++k) {
            h["v"].push_back(c.hexagon->v[k]);
            h["ell"].push_back(rat_json(c.hexagon->ell[k]));
        }
        j["hexagon"] = h;
    } else {
        j["hexagon"] = nullptr;
    }
    j["tentacles"] = Json::array();
    for (const auto& t : c.tentacles)
        j["tentacles"].push_back({{"id", t.id}, {"hex_index", t.hex_index}, {"ray", t.ray}, {"segment_length", rat_json(t.segment_length)}});
    return j;
}

TropicalCubicCurve curve_from_json(const Json& j)
{
    TropicalCubicCurve c;
    for (const auto& v : j.at("vertices")) c.vertices.push_back(pt_of(v));
    for (const auto& e : j.at("edges"))
        c.edges.push_back({e.at("from").get<int>(), e.at("to").get<int>(), dir_of(e.at("dir")), rat_of(e.at("length")), e.at("mult").get<long>()});
    for (const auto& r : j.at("rays")) c.rays.push_back({r.at("base").get<int>(), dir_of(r.at("dir")), r.at("mult").get<long>()});
    if (j.contains("hexagon") && !j.at("hexagon").is_null()) {
        TropicalCubicCurve::Hexagon h;
        for (int k = 0; k < 6; ++k) {
            h.v[k] = j.at("hexagon").at("v").at(k).get<int>();
            h.ell[k] = rat_of(j.at("hexagon").at("ell").at(k));
        }
        c.hexagon = h;
    }
    if (j.contains("tentacles"))
        for (const auto& t : j.at("tentacles"))
            c.tentacles.push_back({t.at("id").get<int>(), t.at("hex_index").get<int>(), t.at("ray").get<int>(), rat_of(t.at("segment_length"))});
    return c;
}

Json matrix_to_json(const Mat3& m)
{
    Json j = Json::array();
    for (const auto& row : m) j.push_back(Json::array({row[0].str(), row[1].str(), row[2].str()}));
    return j;
}

Mat3 matrix_from_json(const Json& j)
{
    Mat3 m;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m[r][c] = parse_series(j.at(r).at(c).get<std::string>());
    return m;
}

Json complex_to_json(const TGLComplex& C)
{
    Json j = Json::object();
    j["Q"] = rat_json(C.Q);
    const FVector& f = C.f;
    j["f_vector"] = {{"vertices", f.vertices},   {"bounded_edges", f.bounded_edges}, {"rays", f.rays},   {"squares", f.squares},
                     {"triangles", f.triangles}, {"polygons", f.polygons},           {"flaps", f.flaps}, {"quadrants", f.quadrants}};
    j["euler"] = f.euler();
    j["cells"] = Json::array();
    for (const auto& c : C.cells) j["cells"].push_back({{"dim", c.dim}, {"class", to_string(c.cls)}, {"boundary", c.boundary}, {"locus", c.locus}});
    Json t = Json::object();
    t["vertices"] = Json::array();
    for (const auto& v : C.torus_vertices) t["vertices"].push_back(pt_json(v));
    t["edges"] = C.torus_edges;
    t["segments"] = Json::array();
    for (const auto& s : C.torus_segments) t["segments"].push_back(Json::array({pt_json(s[0]), pt_json(s[1])}));
    t["faces"] = C.torus_faces;
    j["torus"] = t;
    return j;
}

TGLComplex complex_from_json(const Json& j)
{
    TGLComplex C;
    C.Q = rat_of(j.at("Q"));
    const Json& f = j.at("f_vector");
    C.f.vertices = f.at("vertices").get<long>();
    C.f.bounded_edges = f.at("bounded_edges").get<long>();
    C.f.rays = f.at("rays").get<long>();
    C.f.squares = f.at("squares").get<long>();
    C.f.triangles = f.at("triangles").get<long>();
    C.f.polygons = f.at("polygons").get<long>();
    C.f.flaps = f.at("flaps").get<long>();
    C.f.quadrants = f.at("quadrants").get<long>();
    for (const auto& c : j.at("cells"))
        C.cells.push_back({c.at("dim").get<int>(), cell_class_of(c.at("class").get<std::string>()), c.at("boundary").get<std::vector<int>>(),
                           c.at("locus").get<std::string>()});
    const Json& t = j.at("torus");
    for (const auto& v : t.at("vertices")) C.torus_vertices.push_back(pt_of(v));
    C.torus_edges = t.at("edges").get<std::vector<std::array<int, 2>>>();
    for (const auto& s : t.at("segments")) C.torus_segments.push_back({pt_of(s.at(0)), pt_of(s.at(1))});
    C.torus_faces = t.at("faces").get<std::vector<std::vector<int>>>();
    return C;
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

} // namespace hc
