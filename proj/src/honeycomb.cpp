#include "hc/honeycomb.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hc {

namespace {

Dir2 primitive(const Rat& dx, const Rat& dy, Rat* scale = nullptr)
{
    // common denominator, then divide by the gcd of numerators
    Int l = lcm(Int(dx.get_den()), Int(dy.get_den()));
    Int a = Int(dx * l), b = Int(dy * l);
    Int g = gcd(a, b);
    if (g == 0) throw std::logic_error("zero direction");
    if (scale) *scale = Rat(g, l);
    return {to_long(Int(a / g)), to_long(Int(b / g))};
}

long lattice_gcd(long a, long b) { return std::gcd(std::labs(a), std::labs(b)); }

} // namespace

bool TropicalCubicCurve::balanced() const
{
    std::vector<Dir2> sum(vertices.size(), Dir2{0, 0});
    for (const auto& e : edges) {
        sum[e.from][0] += e.mult * e.dir[0];
        sum[e.from][1] += e.mult * e.dir[1];
        sum[e.to][0] -= e.mult * e.dir[0];
        sum[e.to][1] -= e.mult * e.dir[1];
    }
    for (const auto& r : rays) {
        sum[r.base][0] += r.mult * r.dir[0];
        sum[r.base][1] += r.mult * r.dir[1];
    }
    return std::all_of(sum.begin(), sum.end(), [](const Dir2& d) { return d[0] == 0 && d[1] == 0; });
}

Rat TropicalCubicCurve::hexagon_length() const
{
    if (!hexagon) throw std::domain_error("curve has no hexagon");
    Rat s = 0;
    for (const auto& l : hexagon->ell) s += l;
    return s;
}

bool TropicalCubicCurve::hexagon_relations_hold() const
{
    if (!hexagon) return false;
    const auto& l = hexagon->ell;
    return l[0] + l[1] == l[3] + l[4] && l[1] + l[2] == l[4] + l[5];
}

void attach_honeycomb_structure(TropicalCubicCurve& c)
{
    c.hexagon.reset();
    c.tentacles.clear();
    static const std::array<Dir2, 6> kCycle = {{{1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, 0}}};
    const int nv = static_cast<int>(c.vertices.size());
    // outgoing directed edges per vertex
    auto step = [&](int v, const Dir2& d, int& to, Rat& len) {
        for (const auto& e : c.edges) {
            if (e.from == v && e.dir == d && e.mult == 1) {
                to = e.to;
                len = e.length;
                return true;
            }
            if (e.to == v && e.dir[0] == -d[0] && e.dir[1] == -d[1] && e.mult == 1) {
                to = e.from;
                len = e.length;
                return true;
            }
        }
        return false;
    };
    for (int start = 0; start < nv; ++start) {
        TropicalCubicCurve::Hexagon h;
        int cur = start;
        bool ok = true;
        for (int k = 0; k < 6 && ok; ++k) {
            h.v[k] = cur;
            int nxt;
            Rat len;
            ok = step(cur, kCycle[k], nxt, len);
            if (ok) {
                h.ell[k] = len;
                cur = nxt;
            }
        }
        if (!ok || cur != start) continue;
        std::set<int> distinct(h.v.begin(), h.v.end());
        if (distinct.size() != 6) continue;
        c.hexagon = h;
        break;
    }
    if (!c.hexagon) return;

    // Ray directions owned by p1..p3, p4..p6, p7..p9.
    auto group_of = [](const Dir2& d) { return d == Dir2{1, 0} ? 0 : d == Dir2{0, 1} ? 1 : d == Dir2{-1, -1} ? 2 : -1; };
    // hexagon position → (single p-index) or (pair of p-indices)
    static const std::array<std::array<int, 2>, 6> kLabels = {{{9, 1}, {2, 0}, {3, 4}, {5, 0}, {6, 7}, {8, 0}}};
    std::vector<TropicalCubicCurve::Tentacle> out;
    for (int k = 0; k < 6; ++k) {
        int v = c.hexagon->v[k];
        std::vector<int> rays_here;
        for (int r = 0; r < static_cast<int>(c.rays.size()); ++r)
            if (c.rays[r].base == v) rays_here.push_back(r);
        int node = -1;
        Rat seg = 0;
        for (const auto& e : c.edges) {
            int other = e.from == v ? e.to : e.to == v ? e.from : -1;
            if (other < 0) continue;
            if (std::find(c.hexagon->v.begin(), c.hexagon->v.end(), other) != c.hexagon->v.end()) continue;
            node = other;
            seg = e.length;
        }
        if (kLabels[k][1] == 0) {
            if (rays_here.size() != 1 || node >= 0) return;
            out.push_back({kLabels[k][0], k, rays_here[0], Rat(0)});
            continue;
        }
        if (node < 0 || !rays_here.empty()) return;
        std::vector<int> node_rays;
        for (int r = 0; r < static_cast<int>(c.rays.size()); ++r)
            if (c.rays[r].base == node) node_rays.push_back(r);
        if (node_rays.size() != 2) return;
        for (int id : kLabels[k]) {
            int want = (id - 1) / 3;
            for (int r : node_rays)
                if (group_of(c.rays[r].dir) == want) out.push_back({id, k, r, seg});
        }
    }
    if (out.size() != 9) return;
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    c.tentacles = out;
}

std::string to_string(HoneycombClass c)
{
    switch (c) {
    case HoneycombClass::honeycomb:
        return "honeycomb";
    case HoneycombClass::symmetric_honeycomb:
        return "symmetric_honeycomb";
    default:
        return "not_honeycomb";
    }
}

HoneycombRatios honeycomb_ratios(const TernaryCubic& f)
{
    HoneycombRatios r;
    const std::array<int, 3> corners = {TernaryCubic::index({0, 0, 3}), TernaryCubic::index({0, 3, 0}),
                                        TernaryCubic::index({3, 0, 0})};
    for (int i = 0; i < 10; ++i)
        if (!f.c[i].has_support() && std::find(corners.begin(), corners.end(), i) == corners.end()) {
            r.reason = TernaryCubic::key(i) + (f.c[i].is_exact() ? " is zero" : " is zero to precision");
            return r;
        }
    auto v = [&](int i, int j, int k) {
        const Series& s = f.at(i, j, k);
        return s.is_exact_zero() ? Rat(0) : s.val_lower_bound();
    };
    const Rat c111 = v(1, 1, 1);
    r.hexagon_vals = {v(0, 2, 1) + v(1, 0, 2) - c111 - v(0, 1, 2), v(0, 1, 2) + v(1, 2, 0) - c111 - v(0, 2, 1),
                      v(2, 0, 1) + v(0, 1, 2) - c111 - v(1, 0, 2), v(2, 1, 0) + v(0, 2, 1) - c111 - v(1, 2, 0),
                      v(1, 0, 2) + v(2, 1, 0) - c111 - v(2, 0, 1), v(1, 2, 0) + v(2, 0, 1) - c111 - v(2, 1, 0)};
    r.tentacle_vals = {c111 + v(0, 0, 3) - v(0, 1, 2) - v(1, 0, 2), c111 + v(0, 3, 0) - v(0, 2, 1) - v(1, 2, 0),
                       c111 + v(3, 0, 0) - v(2, 0, 1) - v(2, 1, 0)};
    for (const auto& x : r.hexagon_vals)
        if (x <= 0) {
            r.reason = "a hexagon ratio has nonpositive valuation";
            return r;
        }
    for (int i = 0; i < 3; ++i) r.tentacle_unbounded[i] = !f.c[corners[i]].has_support();
    for (int i = 0; i < 3; ++i)
        if (!(r.tentacle_unbounded[i] && f.c[corners[i]].is_exact_zero()) && r.tentacle_vals[i] <= 0) {
            r.reason = "a tentacle ratio has nonpositive valuation";
            return r;
        }
    bool sym = std::all_of(r.hexagon_vals.begin(), r.hexagon_vals.end(), [&](const Rat& x) { return x == r.hexagon_vals[0]; }) &&
               (r.tentacle_unbounded == std::array<bool, 3>{true, true, true} ||
                (r.tentacle_unbounded == std::array<bool, 3>{} &&
                 std::all_of(r.tentacle_vals.begin(), r.tentacle_vals.end(), [&](const Rat& x) { return x == r.tentacle_vals[0]; })));
    r.cls = sym ? HoneycombClass::symmetric_honeycomb : HoneycombClass::honeycomb;
    return r;
}

TropicalCubicCurve tropicalize_cubic(const TernaryCubic& f)
{
    struct LPt {
        long i, j;
        Rat h;
    };
    std::vector<LPt> pts;
    for (int k = 0; k < 10; ++k) {
        const Series& s = f.c[k];
        if (s.is_exact_zero()) continue;
        if (!s.has_support()) throw PrecisionError("valuation of " + TernaryCubic::key(k) + " unknown at precision");
        const Mono& m = TernaryCubic::monomials()[k];
        pts.push_back({m[0], m[1], s.val()});
    }
    const int n = static_cast<int>(pts.size());

    struct Face {
        std::vector<int> members;
        Pt2 vertex;
    };
    std::vector<Face> faces;
    std::set<std::vector<int>> seen;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                long d = (pts[b].i - pts[a].i) * (pts[c].j - pts[a].j) - (pts[c].i - pts[a].i) * (pts[b].j - pts[a].j);
                if (d == 0) continue;
                // plane h = alpha + beta*i + gamma*j through a, b, c
                Rat dh1 = pts[b].h - pts[a].h, dh2 = pts[c].h - pts[a].h;
                Rat beta = (dh1 * (pts[c].j - pts[a].j) - dh2 * (pts[b].j - pts[a].j)) / Rat(d);
                Rat gamma = (dh2 * (pts[b].i - pts[a].i) - dh1 * (pts[c].i - pts[a].i)) / Rat(d);
                Rat alpha = pts[a].h - beta * pts[a].i - gamma * pts[a].j;
                std::vector<int> members;
                bool lower = true;
                for (int m = 0; m < n && lower; ++m) {
                    Rat diff = pts[m].h - (alpha + beta * pts[m].i + gamma * pts[m].j);
                    if (diff < 0) lower = false;
                    if (diff == 0) members.push_back(m);
                }
                if (!lower || !seen.insert(members).second) continue;
                faces.push_back({members, {Rat(-beta), Rat(-gamma)}});
            }
    if (faces.empty()) throw std::domain_error("Newton polygon of the support is degenerate");

    TropicalCubicCurve out;
    for (const auto& fc : faces) out.vertices.push_back(fc.vertex);

    // polygon edges of every face: consecutive convex-hull vertices
    std::map<std::pair<int, int>, std::vector<int>> edge_faces;
    for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
        std::vector<int> hull, mem = faces[fi].members;
        std::sort(mem.begin(), mem.end(), [&](int x, int y) { return std::pair(pts[x].i, pts[x].j) < std::pair(pts[y].i, pts[y].j); });
        auto cross = [&](int o, int a, int b) {
            return (pts[a].i - pts[o].i) * (pts[b].j - pts[o].j) - (pts[a].j - pts[o].j) * (pts[b].i - pts[o].i);
        };
        for (int pass = 0; pass < 2; ++pass) {
            std::size_t base = hull.size();
            for (int idx : mem) {
                while (hull.size() >= base + 2 && cross(hull[hull.size() - 2], hull.back(), idx) <= 0) hull.pop_back();
                hull.push_back(idx);
            }
            hull.pop_back();
            std::reverse(mem.begin(), mem.end());
        }
        for (std::size_t k = 0; k < hull.size(); ++k) {
            int a = hull[k], b = hull[(k + 1) % hull.size()];
            edge_faces[{std::min(a, b), std::max(a, b)}].push_back(fi);
        }
    }
    for (const auto& [seg, fs] : edge_faces) {
        const LPt &pa = pts[seg.first], &pb = pts[seg.second];
        long di = pb.i - pa.i, dj = pb.j - pa.j;
        long mult = lattice_gcd(di, dj);
        if (fs.size() == 2) {
            const Pt2 &u = out.vertices[fs[0]], &w = out.vertices[fs[1]];
            Rat scale;
            Dir2 dir = primitive(w[0] - u[0], w[1] - u[1], &scale);
            out.edges.push_back({fs[0], fs[1], dir, scale, mult});
        } else if (fs.size() == 1) {
            // inward normal of the boundary segment, pointing into the face
            Dir2 nrm{-dj / mult, di / mult};
            const auto& mem = faces[fs[0]].members;
            long side = 0;
            for (int m : mem) {
                long s = nrm[0] * (pts[m].i - pa.i) + nrm[1] * (pts[m].j - pa.j);
                if (s != 0) side = s;
            }
            if (side < 0) nrm = {-nrm[0], -nrm[1]};
            out.rays.push_back({fs[0], nrm, mult});
        }
    }
    attach_honeycomb_structure(out);
    return out;
}

} // namespace hc
