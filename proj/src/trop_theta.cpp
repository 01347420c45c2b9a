#include "hc/trop_theta.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hc {

namespace {

const std::array<Dir2, 3> kGroupDir = {{{1, 0}, {0, 1}, {-1, -1}}};

Pt2 add(const Pt2& p, const Rat& s, const Dir2& d) { return {p[0] + s * d[0], p[1] + s * d[1]}; }

Dir2 sum_dir(const Dir2& a, const Dir2& b) { return {a[0] + b[0], a[1] + b[1]}; }

// primitive direction and lattice length of a rational vector
std::pair<Dir2, Rat> lattice(const Pt2& from, const Pt2& to)
{
    Rat dx = to[0] - from[0], dy = to[1] - from[1];
    Int l = lcm(Int(dx.get_den()), Int(dy.get_den()));
    Int a = Int(dx * l), b = Int(dy * l);
    Int g = gcd(a, b);
    if (g == 0) throw std::domain_error("trop_parametrize: two hexagon vertices coincide");
    return {{to_long(Int(a / g)), to_long(Int(b / g))}, Rat(g, l)};
}

} // namespace

TropThetaValue trop_theta_eval(const TropThetaEnv& env, const Rat& A, const Rat& X)
{
    if (env.Q <= 0) throw std::domain_error("trop theta: need Q > 0");
    const long m = -to_long(floor_rat((A - X) / env.Q));
    Rat v = Rat(m * m - m) * env.Q / 2 + Rat(m) * (A - X);
    v.canonicalize();
    return {v, m};
}

Rat trop_theta_sum(const TropThetaEnv& env, const Rat& A, const Rat& X)
{
    if (env.Q <= 0) throw std::domain_error("trop theta: need Q > 0");
    Rat s = 0;
    for (long n = 1; n * env.Q + X - A < 0; ++n) s += n * env.Q + X - A;
    for (long n = 0; n * env.Q + A - X < 0; ++n) s += n * env.Q + A - X;
    return s;
}

Rat delta(const Series& x, const Series& y, const Series& q)
{
    if (!x.has_support() || !y.has_support()) throw PrecisionError("delta: argument is zero to precision");
    const Rat Q = q.val();
    const Rat k = (y.val() - x.val()) / Q;
    if (k.get_den() != 1) throw std::domain_error("delta: V(x) differs from V(y)");
    const long i = to_long(k.get_num());
    Series qi = i >= 0 ? q.pow(i) : q.inv().pow(-i);
    Series z = Series(1) - x / y * qi;
    if (!z.has_support()) throw PrecisionError("delta: insufficient precision, 1 − (x/y)qⁱ vanishes to precision");
    return z.val();
}

GapCheck theta_gap_check(const Series& a, const Series& x, const Series& q)
{
    GapCheck g;
    const Rat Q = q.val();
    Series th = theta_shifted(x, a, q);
    if (!th.has_support()) throw PrecisionError("theta_gap_check: theta vanishes to precision");
    g.observed = th.val() - trop_theta_eval({Q}, a.val(), x.val()).value;
    g.predicted = mod_rat(x.val() - a.val(), Q) == 0 ? delta(x, a, q) : Rat(0);
    g.residual = g.observed - g.predicted;
    return g;
}

Pt2 TropParametrization::embed_hex(const Rat& h) const
{
    TropThetaEnv env{Q};
    std::array<Rat, 3> v = offset;
    for (int i = 0; i < 9; ++i) v[i / 3] += trop_theta_eval(env, A[i], h).value;
    return {v[0] - v[2], v[1] - v[2]};
}

Pt2 TropParametrization::embed(const TropPoint& p) const
{
    if (p.on_hexagon()) return embed_hex(p.hex);
    const int k = vertex_at(r[p.id - 1]);
    if (k < 0) throw std::logic_error("tentacle id without hexagon vertex");
    const Dir2& own = kGroupDir[(p.id - 1) / 3];
    const Pt2& base = hex_pt[k];
    if (anchors[k][1] == 0) return add(base, p.dist, own);
    const int other = anchors[k][0] == p.id ? anchors[k][1] : anchors[k][0];
    const Dir2 seg = sum_dir(own, kGroupDir[(other - 1) / 3]);
    if (p.dist <= segment[k]) return add(base, p.dist, seg);
    return add(add(base, segment[k], seg), p.dist - segment[k], own);
}

int TropParametrization::vertex_at(const Rat& h) const
{
    for (int k = 0; k < 6; ++k)
        if (hex_pos[k] == h) return k;
    return -1;
}

TropParametrization trop_parametrization(const ThetaParams& P)
{
    honeycomb_certificate(P); // shape precondition
    TropParametrization T;
    T.Q = P.q.val();
    for (int i = 0; i < 9; ++i) {
        T.A[i] = P.p[i].val();
        T.r[i] = mod_rat(T.A[i], T.Q);
    }
    const std::array<const Series*, 3> abc = {&P.a, &P.b, &P.c};
    for (int g = 0; g < 3; ++g) {
        if (!abc[g]->has_support()) throw PrecisionError("trop_parametrize: scalar is zero to precision");
        T.offset[g] = abc[g]->val();
    }

    std::map<Rat, std::vector<int>> classes;
    for (int i = 0; i < 9; ++i) classes[T.r[i]].push_back(i + 1);
    if (classes.size() != 6) throw std::domain_error("trop_parametrize: expected six distinct hexagon positions");

    TropicalCubicCurve& c = T.curve;
    std::vector<Rat> pos;
    std::vector<std::vector<int>> ids;
    for (const auto& [h, v] : classes) {
        pos.push_back(h);
        ids.push_back(v);
        c.vertices.push_back(T.embed_hex(h));
    }
    for (int k = 0; k < 6; ++k) {
        const int nk = (k + 1) % 6;
        auto [dir, len] = lattice(c.vertices[k], c.vertices[nk]);
        c.edges.push_back({k, nk, dir, len, 1});
    }
    std::vector<Rat> seg(6, Rat(0));
    for (int k = 0; k < 6; ++k) {
        const auto& v = ids[k];
        if (v.size() == 1) {
            c.rays.push_back({k, kGroupDir[(v[0] - 1) / 3], 1});
            continue;
        }
        if (v.size() != 2 || (v[0] - 1) / 3 == (v[1] - 1) / 3) throw std::domain_error("trop_parametrize: unsupported coincidence of hexagon positions");
        const Rat beta = delta(P.p[v[0] - 1], P.p[v[1] - 1], P.q);
        seg[k] = beta;
        int base = k;
        if (beta > 0) {
            const Dir2 d = sum_dir(kGroupDir[(v[0] - 1) / 3], kGroupDir[(v[1] - 1) / 3]);
            c.vertices.push_back(add(c.vertices[k], beta, d));
            base = static_cast<int>(c.vertices.size()) - 1;
            c.edges.push_back({k, base, d, beta, 1});
        }
        for (int id : v) c.rays.push_back({base, kGroupDir[(id - 1) / 3], 1});
    }
    attach_honeycomb_structure(c);
    if (!c.hexagon) throw std::domain_error("trop_parametrize: image is not a honeycomb");
    for (int k = 0; k < 6; ++k) {
        const int idx = c.hexagon->v[k];
        T.hex_pos[k] = pos[idx];
        T.hex_pt[k] = c.vertices[idx];
        T.segment[k] = seg[idx];
        T.anchors[k] = {ids[idx][0], ids[idx].size() > 1 ? ids[idx][1] : 0};
    }
    return T;
}

TropicalCubicCurve trop_parametrize(const ThetaParams& P) { return trop_parametrization(P).curve; }

TropPoint retract(const Series& x, const ThetaParams& P) { return retract(x, P, trop_parametrization(P)); }

TropPoint retract(const Series& x, const ThetaParams& P, const TropParametrization& T)
{
    if (!x.has_support()) throw PrecisionError("retract: point is zero to precision");
    TropPoint out;
    out.hex = mod_rat(x.val(), T.Q);
    const int k = T.vertex_at(out.hex);
    if (k < 0) return out;
    const int j = T.anchors[k][0], l = T.anchors[k][1];
    const Rat dj = delta(x, P.p[j - 1], P.q);
    if (l == 0) {
        if (dj > 0) {
            out.id = j;
            out.dist = dj;
        }
        return out;
    }
    const Rat dl = delta(x, P.p[l - 1], P.q);
    if (dj == dl) {
        if (dj > 0) {
            out.id = std::min(j, l);
            out.dist = dj;
        }
    } else {
        out.id = dj > dl ? j : l;
        out.dist = std::max(dj, dl);
    }
    return out;
}

Pt2 trop_point(const Point3& p)
{
    for (const auto& s : p)
        if (!s.has_support()) throw PrecisionError("trop_point: coordinate is zero to precision");
    return {p[0].val() - p[2].val(), p[1].val() - p[2].val()};
}

} // namespace hc
