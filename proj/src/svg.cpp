#include "hc/svg.hpp"

#include <sstream>

namespace hc {

namespace {

// Affine map x ↦ (x − x0)·S, y ↦ (y1 − y)·S with S chosen so every listed coordinate is an integer.
struct Frame {
    Rat x0, y1, S;
    Int width, height;

    Int X(const Rat& x) const { return Int((x - x0) * S); }
    Int Y(const Rat& y) const { return Int((y1 - y) * S); }
};

Frame make_frame(const std::vector<Pt2>& pts, const Rat& margin)
{
    Rat xmin = pts.front()[0], xmax = xmin, ymin = pts.front()[1], ymax = ymin;
    for (const auto& p : pts) {
        xmin = std::min(xmin, p[0]);
        xmax = std::max(xmax, p[0]);
        ymin = std::min(ymin, p[1]);
        ymax = std::max(ymax, p[1]);
    }
    Frame f;
    f.x0 = xmin - margin;
    f.y1 = ymax + margin;
    Int L = 1;
    auto fold = [&](const Rat& r) { L = lcm(L, Int(r.get_den())); };
    fold(f.x0);
    fold(f.y1);
    for (const auto& p : pts) {
        fold(p[0]);
        fold(p[1]);
    }
    const Rat span = std::max(Rat(xmax - xmin), Rat(ymax - ymin)) + 2 * margin;
    Int k = 1;
    while (span * Rat(L * k) < 480) ++k;
    f.S = Rat(L * k);
    f.width = Int((xmax - xmin + 2 * margin) * f.S);
    f.height = Int((ymax - ymin + 2 * margin) * f.S);
    return f;
}

void header(std::ostringstream& os, const Frame& f, const std::string& title)
{
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " << f.width << ' ' << f.height << "\" width=\"" << f.width
       << "\" height=\"" << f.height << "\">\n";
    if (!title.empty()) os << "<title>" << title << "</title>\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << f.width << "\" height=\"" << f.height << "\" fill=\"white\"/>\n";
}

void line(std::ostringstream& os, const Frame& f, const Pt2& a, const Pt2& b, const char* cls)
{
    os << "<line class=\"" << cls << "\" x1=\"" << f.X(a[0]) << "\" y1=\"" << f.Y(a[1]) << "\" x2=\"" << f.X(b[0]) << "\" y2=\"" << f.Y(b[1]) << "\"/>\n";
}

Int stroke(const Frame& f)
{
    Int w = Int(std::max(f.width, f.height)) / 160;
    return w < 1 ? Int(1) : w;
}

} // namespace

std::string render_curve_svg(const TropicalCubicCurve& c, const SvgOptions& opt)
{
    if (c.vertices.empty()) throw std::invalid_argument("render: curve has no vertices");
    std::vector<Pt2> pts = c.vertices;
    for (const auto& m : opt.marks) pts.push_back(m);
    for (const auto& h : opt.highlight) {
        pts.push_back(h[0]);
        pts.push_back(h[1]);
    }
    Rat xmin = pts[0][0], xmax = xmin, ymin = pts[0][1], ymax = ymin;
    for (const auto& p : pts) {
        xmin = std::min(xmin, p[0]);
        xmax = std::max(xmax, p[0]);
        ymin = std::min(ymin, p[1]);
        ymax = std::max(ymax, p[1]);
    }
    const Rat span = std::max({Rat(xmax - xmin), Rat(ymax - ymin), Rat(1)});
    const Rat ray_len = span / 2;
    std::vector<std::array<Pt2, 2>> rays;
    for (const auto& r : c.rays) {
        const Pt2& b = c.vertices[r.base];
        rays.push_back({b, Pt2{b[0] + ray_len * r.dir[0], b[1] + ray_len * r.dir[1]}});
        pts.push_back(rays.back()[1]);
    }
    const Frame f = make_frame(pts, span / 10);
    const Int w = stroke(f);
    std::ostringstream os;
    header(os, f, opt.title);
    os << "<style>line{stroke-linecap:round} .hexagon{stroke:black;stroke-width:" << 2 * w << "} .segment{stroke:#1f5fa8;stroke-width:" << 2 * w
       << "} .ray{stroke:#777777;stroke-width:" << w << "} .highlight{stroke:#e07000;stroke-width:" << 3 * w << "}</style>\n";
    std::vector<bool> on_hex(c.vertices.size(), false);
    if (c.hexagon)
        for (int v : c.hexagon->v) on_hex[v] = true;
    for (const auto& e : c.edges) line(os, f, c.vertices[e.from], c.vertices[e.to], on_hex[e.from] && on_hex[e.to] ? "hexagon" : "segment");
    for (const auto& r : rays) line(os, f, r[0], r[1], "ray");
    for (const auto& h : opt.highlight) line(os, f, h[0], h[1], "highlight");
    for (const auto& v : c.vertices) os << "<circle cx=\"" << f.X(v[0]) << "\" cy=\"" << f.Y(v[1]) << "\" r=\"" << 2 * w << "\" fill=\"black\"/>\n";
    for (const auto& m : opt.marks)
        os << "<circle class=\"mark\" cx=\"" << f.X(m[0]) << "\" cy=\"" << f.Y(m[1]) << "\" r=\"" << 4 * w << "\" fill=\"none\" stroke=\"#c00000\" stroke-width=\"" << w
           << "\"/>\n";
    os << "</svg>\n";
    return os.str();
}

std::string render_torus_svg(const TGLComplex& C, const std::string& title)
{
    const Rat Q = C.Q;
    std::vector<Pt2> pts = {{Rat(0), Rat(0)}, {Q, Q}};
    for (const auto& v : C.torus_vertices) pts.push_back(v);
    for (const auto& s : C.torus_segments) {
        pts.push_back(s[0]);
        pts.push_back(s[1]);
    }
    // keep the frame on the fundamental square
    Frame f = make_frame(pts, Q / 12);
    f.x0 = -Q / 12;
    f.y1 = Q + Q / 12;
    f.width = f.height = Int((Q + Q / 6) * f.S);
    const Int w = stroke(f);
    std::ostringstream os;
    header(os, f, title);
    os << "<defs><clipPath id=\"fd\"><rect x=\"" << f.X(0) << "\" y=\"" << f.Y(Q) << "\" width=\"" << Int(Q * f.S) << "\" height=\"" << Int(Q * f.S)
       << "\"/></clipPath></defs>\n";
    os << "<style>line{stroke:black;stroke-width:" << w << "}</style>\n";
    os << "<rect x=\"" << f.X(0) << "\" y=\"" << f.Y(Q) << "\" width=\"" << Int(Q * f.S) << "\" height=\"" << Int(Q * f.S)
       << "\" fill=\"#f4f4f4\" stroke=\"#999999\" stroke-width=\"" << w << "\"/>\n";
    os << "<g clip-path=\"url(#fd)\">\n";
    for (const auto& s : C.torus_segments)
        for (int dx = -1; dx <= 1; ++dx)
            for (int dy = -1; dy <= 1; ++dy) {
                const Pt2 a = {s[0][0] + dx * Q, s[0][1] + dy * Q}, b = {s[1][0] + dx * Q, s[1][1] + dy * Q};
                if (std::max(a[0], b[0]) < 0 || std::min(a[0], b[0]) > Q || std::max(a[1], b[1]) < 0 || std::min(a[1], b[1]) > Q) continue;
                line(os, f, a, b, "torus");
            }
    os << "</g>\n";
    for (const auto& v : C.torus_vertices) os << "<circle cx=\"" << f.X(v[0]) << "\" cy=\"" << f.Y(v[1]) << "\" r=\"" << 2 * w << "\" fill=\"#1f5fa8\"/>\n";
    os << "</svg>\n";
    return os.str();
}

} // namespace hc
