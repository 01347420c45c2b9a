#include "hc/group_law.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hc {

// ---------------------------------------------------------------- hexagon sums

HexSum hex_add(const TropPoint& U, const TropPoint& V, const Rat& O, const Rat& Q)
{
    if (Q <= 0) throw std::domain_error("hex_add: need Q > 0");
    return {mod_rat(U.hex + V.hex - O, Q), mod_rat(3 * O - U.hex - V.hex, Q)};
}

std::array<InflectionPosition, 3> inflection_retractions(const TropicalCubicCurve& C)
{
    if (!C.hexagon) throw std::domain_error("inflection_retractions: curve has no hexagon");
    const auto& l = C.hexagon->ell;
    std::array<InflectionPosition, 3> out;
    for (int g = 0; g < 3; ++g) {
        const int v = 2 * g + 1;          // v2, v4, v6
        const Rat& before = l[v - 1];     // edge ending at v
        const Rat& after = l[v];          // edge leaving v
        InflectionPosition p;
        p.vertex = v;
        if (before == after) {
            p.ray_flag = true;
        } else {
            p.edge = after > before ? v : v - 1;
            p.distance = (after > before ? after - before : before - after) / 3;
        }
        out[g] = p;
    }
    return out;
}

Rat circle_position(const InflectionPosition& p, const TropParametrization& T)
{
    const Rat base = T.hex_pos[p.vertex];
    if (p.ray_flag) return base;
    return mod_rat(p.edge == p.vertex ? Rat(base + p.distance) : Rat(base - p.distance), T.Q);
}

std::string to_string(FiberKind k)
{
    switch (k) {
    case FiberKind::single_point:
        return "single_point";
    case FiberKind::subray:
        return "subray";
    default:
        return "segment_and_rays";
    }
}

std::string to_string(CellClass c)
{
    static const char* names[] = {"vertex", "bounded_edge", "ray", "square", "triangle", "polygon", "flap", "quadrant"};
    return names[static_cast<int>(c)];
}

std::string FVector::str() const
{
    std::ostringstream os;
    os << vertices << ' ' << bounded_edges << ' ' << rays << ' ' << squares << ' ' << triangles << ' ' << flaps << ' ' << quadrants;
    if (polygons) os << " (+" << polygons << " other polygons)";
    return os.str();
}

// ---------------------------------------------------------------- local models

namespace {

enum Cell : int { G = 0, SIG = 1, NODE = 2, RAY0 = 3, RAY1 = 4, INACTIVE = 5 };
const char* kCellName[] = {"g", "seg", "node", "ray0", "ray1", "-"};

struct ClassInfo {
    Rat h;
    int id0 = 0, id1 = 0; // base anchor, second anchor (0 when single)
    Rat beta;
    bool paired() const { return id1 != 0; }
    int seg_id() const { return paired() ? std::min(id0, id1) : id0; }
};

struct Context {
    const ThetaParams* P = nullptr;
    TropParametrization T;
    Rat Q;
    std::array<ClassInfo, 6> cls;

    int class_at(const Rat& h) const
    {
        for (int k = 0; k < 6; ++k)
            if (cls[k].h == h) return k;
        return -1;
    }
};

Context make_context(const ThetaParams& P)
{
    Context c;
    c.P = &P;
    c.T = trop_parametrization(P);
    c.Q = c.T.Q;
    for (int k = 0; k < 6; ++k) {
        ClassInfo& ci = c.cls[k];
        ci.h = c.T.hex_pos[k];
        ci.id0 = c.T.anchors[k][0];
        ci.id1 = c.T.anchors[k][1];
        ci.beta = c.T.segment[k];
        if (ci.paired() && ci.beta <= 0) throw std::domain_error("group law: a shared tentacle has a segment of length 0");
    }
    return c;
}

std::vector<int> cells_of(const ClassInfo& ci)
{
    if (ci.paired()) return {G, SIG, NODE, RAY0, RAY1};
    return {G, RAY0};
}

// --- difference bound matrices over x0 = 0, x1, x2, x3

struct Bnd {
    bool inf = true;
    Rat v;
    bool strict = false;
};

bool tighter(const Bnd& a, const Bnd& b)
{
    if (a.inf) return false;
    if (b.inf) return true;
    return a.v < b.v || (a.v == b.v && a.strict && !b.strict);
}

struct DBM {
    std::array<std::array<Bnd, 4>, 4> m;

    DBM()
    {
        for (int i = 0; i < 4; ++i) m[i][i] = {false, Rat(0), false};
    }
    void upper(int i, int j, const Rat& v, bool strict) // x_i − x_j ≤ v (or <)
    {
        Bnd b{false, v, strict};
        if (tighter(b, m[i][j])) m[i][j] = b;
    }
    void equal(int i, int j, const Rat& v)
    {
        upper(i, j, v, false);
        upper(j, i, -v, false);
    }
    bool canon()
    {
        for (int k = 0; k < 4; ++k)
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    if (m[i][k].inf || m[k][j].inf) continue;
                    Bnd s{false, m[i][k].v + m[k][j].v, m[i][k].strict || m[k][j].strict};
                    if (tighter(s, m[i][j])) m[i][j] = s;
                }
        for (int i = 0; i < 4; ++i)
            if (m[i][i].v < 0 || (m[i][i].v == 0 && m[i][i].strict)) return false;
        return true;
    }
    bool fixed(int i, int j) const { return !m[i][j].inf && !m[j][i].inf && !m[i][j].strict && !m[j][i].strict && m[i][j].v == -m[j][i].v; }
    bool contains_point(const std::array<Rat, 4>& x) const
    {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                if (i == j || m[i][j].inf) continue;
                Rat d = x[i] - x[j];
                if (d > m[i][j].v || (d == m[i][j].v && m[i][j].strict)) return false;
            }
        return true;
    }
    // closure of this set contains the set o
    bool closure_contains(const DBM& o) const
    {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                if (i == j || m[i][j].inf) continue;
                if (o.m[i][j].inf || o.m[i][j].v > m[i][j].v) return false;
            }
        return true;
    }
};

struct Lin {
    int var = 0; // 0: constant
    Rat c;
};

int compare(const Lin& a, const Lin& b, const DBM& d)
{
    if (a.var == b.var) return a.c < b.c ? -1 : a.c > b.c ? 1 : 0;
    const int i = a.var, j = b.var;
    const Rat k = b.c - a.c; // sign of x_i − x_j − k
    const Bnd& up = d.m[i][j];
    const Bnd& dn = d.m[j][i];
    if (!up.inf && (up.v < k || (up.v == k && up.strict))) return -1;
    if (!dn.inf && (-dn.v > k || (-dn.v == k && dn.strict))) return 1;
    if (!up.inf && !dn.inf && up.v == k && -dn.v == k) return 0;
    throw std::logic_error("group law: comparison not decided by the arrangement");
}

struct Circuit {
    std::vector<std::pair<int, Rat>> terms; // element, valuation of its coefficient
};

struct Element {
    int coord = -1; // −1: the homogenizing form
    int form = 0;
    std::array<Series, 3> v;
};

Series det3(const std::array<Series, 3>& a, const std::array<Series, 3>& b, const std::array<Series, 3>& c)
{
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

bool zero(const Series& s) { return !s.has_support(); }

Series log_one_unit(const Series& c)
{
    Series y = c - Series(1);
    if (!y.has_support()) return y;
    if (y.val() <= 0) throw std::logic_error("log of a non-one-unit");
    const Rat R = working_prec();
    Series sum, pw = y;
    for (long n = 1; pw.has_support() && pw.val() < R; ++n) {
        sum += pw * Series(make_rat(n % 2 ? 1 : -1, n));
        pw = (pw * y).truncated(R);
    }
    return sum.truncated(R);
}

// x / y · q^i with valuation 0
Series aligned_ratio(const Series& x, const Series& y, const Series& q)
{
    const Rat k = (y.val() - x.val()) / q.val();
    if (k.get_den() != 1) throw std::logic_error("aligned_ratio: valuations not aligned");
    const long i = to_long(k.get_num());
    return x / y * (i >= 0 ? q.pow(i) : q.inv().pow(-i));
}

struct Face {
    std::array<int, 3> cell{};
    DBM d;
    int dim = 0;
    bool bounded = true;
    int rec_dim = 0;
    std::vector<std::tuple<int, int, Rat>> hull;
};

struct LocalModel {
    const Context* ctx = nullptr;
    std::array<int, 3> cls{{-1, -1, -1}}; // class per coordinate, −1 inactive
    std::vector<Element> elems;
    std::vector<Circuit> circuits;
    bool aligned = true;

    bool active(int c) const { return cls[c] >= 0; }
    const ClassInfo& info(int c) const { return ctx->cls[cls[c]]; }

    Lin value(int e, int cell) const
    {
        const Element& el = elems[e];
        if (el.coord < 0) return {0, Rat(0)};
        const Rat& beta = info(el.coord).beta;
        const int var = el.coord + 1;
        switch (cell) {
        case G:
            return {0, Rat(0)};
        case NODE:
            return {0, beta};
        case SIG:
            return {var, Rat(0)};
        case RAY0:
            return el.form == 0 ? Lin{var, Rat(0)} : Lin{0, beta};
        case RAY1:
            return el.form == 1 ? Lin{var, Rat(0)} : Lin{0, beta};
        }
        throw std::logic_error("bad cell");
    }

    void build_circuits()
    {
        const ThetaParams& P = *ctx->P;
        const int nact = static_cast<int>(std::count_if(cls.begin(), cls.end(), [](int k) { return k >= 0; }));
        if (nact < 3) return;
        std::array<Series, 3> base, A;
        for (int c = 0; c < 3; ++c) {
            const ClassInfo& ci = info(c);
            base[c] = P.p[ci.id0 - 1];
            if (ci.paired()) {
                Series a = aligned_ratio(P.p[ci.id1 - 1], base[c], P.q);
                if (!a.has_support() || a.val() != 0 || a.lead() != Cyclo(1)) throw std::logic_error("shared anchors are not one-unit related");
                A[c] = log_one_unit(a);
            }
        }
        // c = 1 / (b_U b_V b_W) normalized to valuation 0
        Series prod = base[0] * base[1] * base[2];
        const Rat k = prod.val() / P.q.val();
        if (k.get_den() != 1) throw std::logic_error("triple point classes do not sum to zero");
        const long n = to_long(k.get_num());
        Series cc = (n >= 0 ? P.q.pow(n) : P.q.inv().pow(-n)) / prod;
        Series K;
        if (!cc.has_support() || cc.val() != 0) throw PrecisionError("triple point constant unresolved at precision");
        if (cc.lead() == Cyclo(1)) {
            K = log_one_unit(cc);
        } else {
            aligned = false;
            K = Series(1); // a unit that cancels against nothing of positive valuation
        }
        const std::array<std::array<Series, 3>, 3> basev = {{{Series(1), Series(), Series()},
                                                              {Series(), Series(1), Series()},
                                                              {Series(-1), Series(-1), K}}};
        for (int c = 0; c < 3; ++c) {
            elems.push_back({c, 0, basev[c]});
            if (info(c).paired()) {
                auto v = basev[c];
                v[2] = v[2] - A[c];
                elems.push_back({c, 1, v});
            }
        }
        elems.push_back({-1, 0, {Series(), Series(), Series(1)}});

        const int ne = static_cast<int>(elems.size());
        auto vec = [&](int e) -> const std::array<Series, 3>& { return elems[e].v; };
        auto indep2 = [&](int a, int b) {
            const auto &x = vec(a), &y = vec(b);
            return !(zero(x[0] * y[1] - x[1] * y[0]) && zero(x[0] * y[2] - x[2] * y[0]) && zero(x[1] * y[2] - x[2] * y[1]));
        };
        auto indep3 = [&](int a, int b, int c) { return !zero(det3(vec(a), vec(b), vec(c))); };
        for (int a = 0; a < ne; ++a)
            for (int b = a + 1; b < ne; ++b) {
                if (indep2(a, b)) continue;
                // parallel pair
                const auto &x = vec(a), &y = vec(b);
                int j = 0;
                while (zero(x[j])) ++j;
                circuits.push_back({{{a, y[j].val()}, {b, x[j].val()}}});
            }
        for (int a = 0; a < ne; ++a)
            for (int b = a + 1; b < ne; ++b)
                for (int c = b + 1; c < ne; ++c) {
                    if (indep3(a, b, c) || !indep2(a, b) || !indep2(a, c) || !indep2(b, c)) continue;
                    // kernel of the 3×3 matrix with columns a, b, c via two independent rows
                    std::array<std::array<Series, 3>, 3> rows;
                    for (int r = 0; r < 3; ++r) rows[r] = {vec(a)[r], vec(b)[r], vec(c)[r]};
                    std::array<Series, 3> ker;
                    bool found = false;
                    for (int r1 = 0; r1 < 3 && !found; ++r1)
                        for (int r2 = r1 + 1; r2 < 3 && !found; ++r2) {
                            const auto &u = rows[r1], &w = rows[r2];
                            ker = {u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0]};
                            found = !(zero(ker[0]) && zero(ker[1]) && zero(ker[2]));
                        }
                    if (!found || zero(ker[0]) || zero(ker[1]) || zero(ker[2])) throw std::logic_error("circuit kernel degenerate");
                    circuits.push_back({{{a, ker[0].val()}, {b, ker[1].val()}, {c, ker[2].val()}}});
                }
        for (int a = 0; a < ne; ++a)
            for (int b = a + 1; b < ne; ++b)
                for (int c = b + 1; c < ne; ++c)
                    for (int d = c + 1; d < ne; ++d) {
                        const std::array<int, 4> s = {a, b, c, d};
                        std::array<Series, 4> lam;
                        bool circ = true;
                        for (int i = 0; i < 4 && circ; ++i) {
                            std::array<int, 3> o;
                            for (int j = 0, t = 0; j < 4; ++j)
                                if (j != i) o[t++] = s[j];
                            lam[i] = det3(vec(o[0]), vec(o[1]), vec(o[2]));
                            if (zero(lam[i])) circ = false;
                        }
                        if (!circ) continue;
                        Circuit ci;
                        for (int i = 0; i < 4; ++i) ci.terms.push_back({s[i], lam[i].val()});
                        circuits.push_back(ci);
                    }
    }

    std::vector<int> cells_for(int c) const { return active(c) ? cells_of(info(c)) : std::vector<int>{INACTIVE}; }

    bool member(const Face& f) const
    {
        for (const auto& ci : circuits) {
            std::vector<Lin> t;
            for (const auto& [e, v] : ci.terms) {
                Lin l = value(e, elems[e].coord < 0 ? G : f.cell[elems[e].coord]);
                l.c += v;
                t.push_back(l);
            }
            // the minimum must be attained at least twice
            std::size_t best = 0;
            for (std::size_t i = 1; i < t.size(); ++i)
                if (compare(t[i], t[best], f.d) < 0) best = i;
            int ties = 0;
            for (const auto& x : t)
                if (compare(x, t[best], f.d) == 0) ++ties;
            if (ties < 2) return false;
        }
        return true;
    }

    // hyperplane constants x_i − x_j = k (i > j), closed under the given special values
    std::array<std::array<std::set<Rat>, 4>, 4> constants(const std::array<std::set<Rat>, 4>& special) const
    {
        std::array<std::array<std::set<Rat>, 4>, 4> D;
        auto lins = [&](int e) {
            std::vector<Lin> out;
            const Element& el = elems[e];
            if (el.coord < 0) return std::vector<Lin>{Lin{0, Rat(0)}};
            for (int cell : cells_of(info(el.coord))) out.push_back(value(e, cell));
            return out;
        };
        for (const auto& ci : circuits)
            for (std::size_t x = 0; x < ci.terms.size(); ++x)
                for (std::size_t y = 0; y < ci.terms.size(); ++y) {
                    if (x == y) continue;
                    for (const Lin& a : lins(ci.terms[x].first))
                        for (const Lin& b : lins(ci.terms[y].first))
                            if (a.var > b.var) D[a.var][b.var].insert(b.c + ci.terms[y].second - a.c - ci.terms[x].second);
                }
        for (int i = 1; i < 4; ++i) {
            for (const Rat& b : special[i]) D[i][0].insert(b);
            for (int j = 1; j < i; ++j)
                for (const Rat& k : D[i][j]) {
                    for (const Rat& b : special[j]) D[i][0].insert(k + b);
                    for (const Rat& b : special[i]) D[j][0].insert(b - k);
                }
        }
        return D;
    }

    std::array<std::set<Rat>, 4> specials() const
    {
        std::array<std::set<Rat>, 4> s;
        for (int c = 0; c < 3; ++c) {
            s[c + 1].insert(Rat(0));
            if (active(c) && info(c).paired()) s[c + 1].insert(info(c).beta);
        }
        return s;
    }

    // Faces of the realizable set in one chart; `pin` fixes free coordinates.
    std::vector<Face> faces(const std::array<int, 3>& chart, const std::array<std::optional<Rat>, 3>& pin = {}) const
    {
        auto sp = specials();
        for (int c = 0; c < 3; ++c)
            if (pin[c]) sp[c + 1].insert(*pin[c]);
        const auto D = constants(sp);
        DBM d;
        for (int c = 0; c < 3; ++c) {
            const int x = c + 1;
            const Rat beta = active(c) ? info(c).beta : Rat(0);
            switch (chart[c]) {
            case INACTIVE:
            case G:
                d.equal(x, 0, Rat(0));
                break;
            case NODE:
                d.equal(x, 0, beta);
                break;
            case SIG:
                d.upper(0, x, Rat(0), true);
                d.upper(x, 0, beta, true);
                break;
            default:
                d.upper(0, x, -(info(c).paired() ? beta : Rat(0)), true);
            }
            if (pin[c]) d.equal(x, 0, *pin[c]);
        }
        std::vector<Face> out;
        if (!d.canon()) return out;
        static const std::array<std::array<int, 2>, 6> pairs = {{{1, 0}, {2, 0}, {3, 0}, {2, 1}, {3, 1}, {3, 2}}};
        std::function<void(int, const DBM&)> rec = [&](int pi, const DBM& cur) {
            if (pi == 6) {
                Face f;
                f.cell = chart;
                f.d = cur;
                if (member(f)) out.push_back(finish(f));
                return;
            }
            const int i = pairs[pi][0], j = pairs[pi][1];
            std::vector<Rat> ks(D[i][j].begin(), D[i][j].end());
            const int n = static_cast<int>(ks.size());
            for (int s = 0; s <= 2 * n; ++s) {
                DBM nx = cur;
                if (s % 2 == 1) {
                    nx.equal(i, j, ks[s / 2]);
                } else {
                    if (s > 0) nx.upper(j, i, -ks[s / 2 - 1], true);
                    if (s < 2 * n) nx.upper(i, j, ks[s / 2], true);
                }
                if (nx.canon()) rec(pi + 1, nx);
            }
        };
        rec(0, d);
        return out;
    }

    static Face finish(Face f)
    {
        std::array<int, 4> comp = {0, 1, 2, 3};
        std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < i; ++j)
                if (f.d.fixed(i, j)) {
                    comp[find(i)] = find(j);
                    f.hull.emplace_back(i, j, f.d.m[i][j].v);
                }
        std::set<int> roots;
        for (int i = 0; i < 4; ++i) roots.insert(find(i));
        f.dim = static_cast<int>(roots.size()) - 1;
        f.bounded = true;
        for (int i = 1; i < 4; ++i)
            if (f.d.m[i][0].inf || f.d.m[0][i].inf) f.bounded = false;
        // recession cone {y_i ≤ y_j whenever x_i − x_j is bounded above}, y0 = 0
        std::array<std::array<bool, 4>, 4> reach{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) reach[i][j] = i == j || !f.d.m[i][j].inf;
        for (int k = 0; k < 4; ++k)
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    if (reach[i][k] && reach[k][j]) reach[i][j] = true;
        std::set<int> scc;
        for (int i = 0; i < 4; ++i) {
            int r = i;
            for (int j = 0; j < 4; ++j)
                if (reach[i][j] && reach[j][i]) r = std::min(r, j);
            scc.insert(r);
        }
        f.rec_dim = static_cast<int>(scc.size()) - 1;
        return f;
    }
};

bool cell_in_closure(int f, int g, bool paired)
{
    if (f == g) return true;
    switch (g) {
    case SIG:
        return f == G || f == NODE;
    case RAY0:
    case RAY1:
        return paired ? f == NODE : f == G;
    default:
        return false;
    }
}

bool face_in_closure(const Face& F, const Face& Gf, const LocalModel& L)
{
    for (int c = 0; c < 3; ++c) {
        const bool paired = L.active(c) && L.info(c).paired();
        if (!cell_in_closure(F.cell[c], Gf.cell[c], paired)) return false;
    }
    return Gf.d.closure_contains(F.d);
}

// Coordinate value of a tropical point on its tentacle tree.
std::pair<int, Rat> tree_position(const TropPoint& p, const ClassInfo& ci)
{
    if (p.on_hexagon()) return {G, Rat(0)};
    if (!ci.paired()) return {RAY0, p.dist};
    if (p.dist < ci.beta) return {SIG, p.dist};
    if (p.dist == ci.beta) return {NODE, ci.beta};
    return {p.id == ci.id0 ? RAY0 : RAY1, p.dist};
}

std::vector<FiberPiece> full_tentacle(const ClassInfo& ci)
{
    if (!ci.paired()) return {{ci.id0, Rat(0), true, std::nullopt, false}};
    return {{ci.seg_id(), Rat(0), true, ci.beta, true}, {ci.id0, ci.beta, false, std::nullopt, false}, {ci.id1, ci.beta, false, std::nullopt, false}};
}

FiberDescription fiber_in(const Context& ctx, const TropPoint& U, const TropPoint& V)
{
    FiberDescription F;
    F.position = mod_rat(-U.hex - V.hex, ctx.Q);
    const int kw = ctx.class_at(F.position);
    if (kw < 0) return F;
    const ClassInfo& cw = ctx.cls[kw];
    F.kind = cw.paired() ? FiberKind::segment_and_rays : FiberKind::subray;
    F.tentacles = cw.paired() ? std::vector<int>{cw.id0, cw.id1} : std::vector<int>{cw.id0};
    const int ku = ctx.class_at(U.hex), kv = ctx.class_at(V.hex);
    if (ku < 0 || kv < 0) {
        F.pieces = full_tentacle(cw);
        return F;
    }
    LocalModel L;
    L.ctx = &ctx;
    L.cls = {ku, kv, kw};
    L.build_circuits();
    auto [cu, xu] = tree_position(U, ctx.cls[ku]);
    auto [cv, xv] = tree_position(V, ctx.cls[kv]);
    struct Piece {
        int branch; // 0 segment (or the single ray), 1 ray of id0, 2 ray of id1
        Rat lo;
        bool lo_closed;
        std::optional<Rat> hi;
        bool hi_closed;
    };
    std::vector<Piece> ps;
    for (int cell : cells_of(cw)) {
        std::array<std::optional<Rat>, 3> pin;
        if (cu == SIG || cu == RAY0 || cu == RAY1) pin[0] = xu;
        if (cv == SIG || cv == RAY0 || cv == RAY1) pin[1] = xv;
        for (const Face& f : L.faces({cu, cv, cell}, pin)) {
            const Bnd& up = f.d.m[3][0];
            const Bnd& dn = f.d.m[0][3];
            Piece p;
            p.branch = cw.paired() ? (cell == RAY0 ? 1 : cell == RAY1 ? 2 : 0) : 0;
            p.lo = -dn.v;
            p.lo_closed = !dn.strict;
            if (!up.inf) p.hi = up.v;
            p.hi_closed = !up.inf && !up.strict;
            ps.push_back(p);
        }
    }
    std::sort(ps.begin(), ps.end(), [](const Piece& a, const Piece& b) {
        if (a.branch != b.branch) return a.branch < b.branch;
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.lo_closed && !b.lo_closed;
    });
    std::vector<Piece> merged;
    for (const Piece& p : ps) {
        if (!merged.empty()) {
            Piece& m = merged.back();
            if (m.branch == p.branch && m.hi && *m.hi == p.lo && (m.hi_closed || p.lo_closed)) {
                m.hi = p.hi;
                m.hi_closed = p.hi_closed;
                continue;
            }
        }
        merged.push_back(p);
    }
    for (const Piece& p : merged) {
        const int id = p.branch == 0 ? cw.seg_id() : p.branch == 1 ? cw.id0 : cw.id1;
        F.pieces.push_back({id, p.lo, p.lo_closed, p.hi, p.hi_closed});
    }
    return F;
}

} // namespace

bool FiberDescription::contains(const TropPoint& w) const
{
    if (w.hex != position) return false;
    if (kind == FiberKind::single_point) return w.on_hexagon();
    for (const auto& p : pieces) {
        const Rat d = w.on_hexagon() ? Rat(0) : w.dist;
        if (!w.on_hexagon() && w.id != p.id) continue;
        if (w.on_hexagon() && !(p.lo == 0 && p.lo_closed)) continue;
        const bool lo_ok = d > p.lo || (d == p.lo && p.lo_closed);
        const bool hi_ok = !p.hi || d < *p.hi || (d == *p.hi && p.hi_closed);
        if (lo_ok && hi_ok) return true;
    }
    return false;
}

std::string FiberDescription::str() const
{
    std::ostringstream os;
    os << to_string(kind) << " at " << to_string(position);
    for (const auto& p : pieces) {
        os << "; p" << p.id << ' ' << (p.lo_closed ? '[' : '(') << to_string(p.lo) << ", ";
        if (p.hi)
            os << to_string(*p.hi) << (p.hi_closed ? ']' : ')');
        else
            os << "inf)";
    }
    return os.str();
}

FiberDescription fiber(const TropPoint& U, const TropPoint& V, const ThetaParams& P)
{
    const Context ctx = make_context(P);
    return fiber_in(ctx, U, V);
}

// ---------------------------------------------------------------- the complex

namespace detail {

struct TorusEdge {
    int line = 0; // coordinate 0 = U, 1 = V, 2 = W
    int cls = 0;
    int from = 0, to = 0;
    Rat p_from, p_to; // line parameter, p_to > p_from (may exceed Q)
    int cell = -1;
    std::array<int, 5> attach{{-1, -1, -1, -1, -1}}; // by tree cell
};

struct TorusFace {
    std::vector<std::array<Rat, 2>> poly; // unwrapped, counterclockwise
    int cell = -1;
};

struct VertexModel {
    std::array<Rat, 2> pos; // (h_U, h_V)
    std::array<int, 3> cls{{-1, -1, -1}};
    int cell = -1;
    std::vector<Face> faces;
    std::vector<int> face_cell; // coarse cell per fine face (−1 for interior pieces)
    LocalModel model;
};

struct TGLData {
    Context ctx;
    std::vector<VertexModel> verts;
    std::map<std::array<Rat, 2>, int> vert_index;
    std::vector<TorusEdge> edges;
    std::vector<TorusFace> faces;
};

} // namespace detail

namespace {

using detail::TGLData;

Rat line_param(int line, const std::array<Rat, 2>& p) { return line == 0 ? p[1] : p[0]; }

std::array<long, 2> line_dir(int line)
{
    if (line == 0) return {0, 1};
    if (line == 1) return {1, 0};
    return {1, -1};
}

int angle_index(const std::array<long, 2>& d)
{
    static const std::array<std::array<long, 2>, 6> order = {{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};
    for (int i = 0; i < 6; ++i)
        if (order[i] == d) return i;
    throw std::logic_error("unexpected torus direction");
}

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

} // namespace

TGLComplex tgl_build(const ThetaParams& P)
{
    auto data = std::make_shared<TGLData>();
    data->ctx = make_context(P);
    Context& ctx = data->ctx;
    const Rat Q = ctx.Q;
    TGLComplex out;
    out.Q = Q;

    auto add_cell = [&](int dim, CellClass cls, std::vector<int> boundary, std::string locus) {
        std::sort(boundary.begin(), boundary.end());
        boundary.erase(std::unique(boundary.begin(), boundary.end()), boundary.end());
        out.cells.push_back({dim, cls, std::move(boundary), std::move(locus)});
        return static_cast<int>(out.cells.size()) - 1;
    };

    // torus vertices: points where at least two coordinates sit at hexagon vertices
    std::set<std::array<Rat, 2>> pts;
    for (const auto& a : ctx.cls)
        for (const auto& b : ctx.cls) {
            pts.insert({a.h, b.h});
            pts.insert({a.h, mod_rat(-a.h - b.h, Q)});
            pts.insert({mod_rat(-a.h - b.h, Q), b.h});
        }
    for (const auto& p : pts) {
        detail::VertexModel vm;
        vm.pos = p;
        vm.cls = {ctx.class_at(p[0]), ctx.class_at(p[1]), ctx.class_at(mod_rat(-p[0] - p[1], Q))};
        data->vert_index[p] = static_cast<int>(data->verts.size());
        data->verts.push_back(std::move(vm));
    }
    for (auto& vm : data->verts) {
        std::ostringstream os;
        os << "torus vertex (" << to_string(vm.pos[0]) << ", " << to_string(vm.pos[1]) << ")";
        vm.cell = add_cell(0, CellClass::vertex, {}, os.str());
        out.torus_vertices.push_back(vm.pos);
    }

    // torus edges along the 18 lines
    for (int line = 0; line < 3; ++line)
        for (int k = 0; k < 6; ++k) {
            std::vector<std::pair<Rat, int>> on;
            for (int v = 0; v < static_cast<int>(data->verts.size()); ++v)
                if (data->verts[v].cls[line] == k) on.emplace_back(line_param(line, data->verts[v].pos), v);
            std::sort(on.begin(), on.end());
            if (on.size() < 2) throw std::logic_error("torus line with fewer than two vertices");
            for (std::size_t i = 0; i < on.size(); ++i) {
                detail::TorusEdge e;
                e.line = line;
                e.cls = k;
                e.from = on[i].second;
                e.to = on[(i + 1) % on.size()].second;
                e.p_from = on[i].first;
                e.p_to = i + 1 < on.size() ? on[i + 1].first : on[0].first + Q;
                data->edges.push_back(e);
            }
        }
    for (auto& e : data->edges) {
        static const char* names = "UVW";
        std::ostringstream os;
        os << "torus edge on " << names[e.line] << " = " << to_string(ctx.cls[e.cls].h);
        e.cell = add_cell(1, CellClass::bounded_edge, {data->verts[e.from].cell, data->verts[e.to].cell}, os.str());
        out.torus_edges.push_back({e.from, e.to});
        const auto d = line_dir(e.line);
        const Pt2& a = data->verts[e.from].pos;
        const Rat len = e.p_to - e.p_from;
        out.torus_segments.push_back({a, Pt2{a[0] + len * d[0], a[1] + len * d[1]}});
    }

    // faces by walking half-edges with the face on the left
    {
        struct Half {
            int edge, from, to;
            std::array<long, 2> dir;
            Rat len;
        };
        std::vector<Half> hs;
        std::vector<std::array<int, 6>> outgoing(data->verts.size(), {-1, -1, -1, -1, -1, -1});
        for (int i = 0; i < static_cast<int>(data->edges.size()); ++i) {
            const auto& e = data->edges[i];
            auto d = line_dir(e.line);
            const Rat len = e.p_to - e.p_from;
            hs.push_back({i, e.from, e.to, d, len});
            hs.push_back({i, e.to, e.from, {-d[0], -d[1]}, len});
            outgoing[e.from][angle_index(d)] = static_cast<int>(hs.size()) - 2;
            outgoing[e.to][angle_index({-d[0], -d[1]})] = static_cast<int>(hs.size()) - 1;
        }
        std::vector<bool> used(hs.size(), false);
        for (int s = 0; s < static_cast<int>(hs.size()); ++s) {
            if (used[s]) continue;
            detail::TorusFace f;
            std::vector<int> edge_cells, vloop;
            std::array<Rat, 2> at = data->verts[hs[s].from].pos;
            int h = s;
            do {
                used[h] = true;
                f.poly.push_back(at);
                vloop.push_back(hs[h].from);
                edge_cells.push_back(data->edges[hs[h].edge].cell);
                at = {at[0] + hs[h].len * hs[h].dir[0], at[1] + hs[h].len * hs[h].dir[1]};
                const int b = hs[h].to;
                const int ar = angle_index({-hs[h].dir[0], -hs[h].dir[1]});
                int nxt = -1;
                for (int step = 1; step <= 6 && nxt < 0; ++step) nxt = outgoing[b][((ar - step) % 6 + 6) % 6];
                h = nxt;
            } while (h != s);
            const int sides = static_cast<int>(f.poly.size());
            const CellClass cls = sides == 3 ? CellClass::triangle : sides == 4 ? CellClass::square : CellClass::polygon;
            f.cell = add_cell(2, cls, edge_cells, "torus face");
            data->faces.push_back(std::move(f));
            out.torus_faces.push_back(vloop);
        }
    }

    // local models at the torus vertices
    for (auto& vm : data->verts) {
        vm.model.ctx = &ctx;
        vm.model.cls = vm.cls;
        vm.model.build_circuits();
        std::array<std::vector<int>, 3> opts;
        for (int c = 0; c < 3; ++c) opts[c] = vm.model.cells_for(c);
        for (int a : opts[0])
            for (int b : opts[1])
                for (int c : opts[2]) {
                    auto fs = vm.model.faces({a, b, c});
                    vm.faces.insert(vm.faces.end(), fs.begin(), fs.end());
                }
        const int n = static_cast<int>(vm.faces.size());
        auto is_origin = [&](const Face& f) {
            for (int c : f.cell)
                if (c != G && c != INACTIVE) return false;
            return true;
        };
        auto free_count = [&](const Face& f) {
            int k = 0;
            for (int c : f.cell) k += c == SIG || c == RAY0 || c == RAY1;
            return k;
        };
        // facet incidences
        std::vector<std::vector<int>> facets(n), cofacets(n), cofaces2(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (vm.faces[i].dim >= vm.faces[j].dim) continue;
                if (!face_in_closure(vm.faces[i], vm.faces[j], vm.model)) continue;
                if (vm.faces[j].dim == vm.faces[i].dim + 1) {
                    facets[j].push_back(i);
                    cofacets[i].push_back(j);
                }
                if (vm.faces[j].dim == 2) cofaces2[i].push_back(j);
            }
        UnionFind uf(n);
        std::vector<bool> removed(n, false);
        for (int e = 0; e < n; ++e) {
            const Face& E = vm.faces[e];
            if (E.dim != 1 || free_count(E) < 2 || cofacets[e].size() != 2) continue;
            const Face &A = vm.faces[cofacets[e][0]], &B = vm.faces[cofacets[e][1]];
            if (A.cell != E.cell || B.cell != E.cell || A.hull != B.hull) continue;
            uf.unite(cofacets[e][0], cofacets[e][1]);
            removed[e] = true;
        }
        for (int p = 0; p < n; ++p) {
            const Face& Pf = vm.faces[p];
            if (Pf.dim != 0 || free_count(Pf) < 1) continue;
            std::vector<int> rem;
            for (int e : cofacets[p])
                if (!removed[e]) rem.push_back(e);
            if (rem.empty()) {
                if (!cofaces2[p].empty()) removed[p] = true;
                continue;
            }
            if (rem.size() != 2) continue;
            const Face &A = vm.faces[rem[0]], &B = vm.faces[rem[1]];
            if (A.cell != Pf.cell || B.cell != Pf.cell || A.hull != B.hull) continue;
            uf.unite(rem[0], rem[1]);
            removed[p] = true;
        }
        // coarse cells, by increasing dimension so that boundaries exist
        vm.face_cell.assign(n, -1);
        std::map<int, int> root_cell;
        for (int dim = 0; dim <= 2; ++dim)
            for (int i = 0; i < n; ++i) {
                const Face& f = vm.faces[i];
                if (f.dim != dim || removed[i]) continue;
                if (is_origin(f)) {
                    vm.face_cell[i] = vm.cell;
                    continue;
                }
                const int r = uf.find(i);
                auto it = root_cell.find(r);
                if (it != root_cell.end()) {
                    vm.face_cell[i] = it->second;
                    continue;
                }
                std::vector<int> members;
                for (int j = 0; j < n; ++j)
                    if (vm.faces[j].dim == dim && !removed[j] && uf.find(j) == r) members.push_back(j);
                std::vector<int> bd;
                bool bounded = true;
                int rec = 0;
                for (int m : members) {
                    bounded = bounded && vm.faces[m].bounded;
                    rec = std::max(rec, vm.faces[m].rec_dim);
                    for (int fct : facets[m])
                        if (!removed[fct] && vm.face_cell[fct] >= 0) bd.push_back(vm.face_cell[fct]);
                }
                std::sort(bd.begin(), bd.end());
                bd.erase(std::unique(bd.begin(), bd.end()), bd.end());
                CellClass cls = CellClass::vertex;
                if (dim == 1) cls = bounded ? CellClass::bounded_edge : CellClass::ray;
                if (dim == 2) {
                    if (bounded)
                        cls = bd.size() == 3 ? CellClass::triangle : bd.size() == 4 ? CellClass::square : CellClass::polygon;
                    else
                        cls = rec >= 2 ? CellClass::quadrant : CellClass::flap;
                }
                std::ostringstream os;
                os << "local at (" << to_string(vm.pos[0]) << ", " << to_string(vm.pos[1]) << ") cells " << kCellName[f.cell[0]] << ','
                   << kCellName[f.cell[1]] << ',' << kCellName[f.cell[2]];
                const int id = add_cell(dim, cls, bd, os.str());
                root_cell[r] = id;
                vm.face_cell[i] = id;
            }
        // interior pieces point at the cell that swallowed them
        for (int i = 0; i < n; ++i) {
            if (vm.face_cell[i] >= 0) continue;
            if (vm.faces[i].dim >= 1 || !cofaces2[i].empty()) {
                int host = -1;
                for (int j : cofacets[i])
                    if (vm.face_cell[j] >= 0 && vm.faces[j].dim == vm.faces[i].dim + 1) host = vm.face_cell[j];
                if (host < 0)
                    for (int j : cofaces2[i])
                        if (vm.face_cell[j] >= 0) host = vm.face_cell[j];
                vm.face_cell[i] = host;
            }
        }
        // removed vertices inside a 1-cell belong to it
        for (int i = 0; i < n; ++i)
            if (vm.faces[i].dim == 0 && removed[i])
                for (int j : cofacets[i])
                    if (!removed[j]) vm.face_cell[i] = vm.face_cell[j];
    }

    // attachments: torus edge × tentacle cell
    auto local_cells = [&](int v, int line, int cell) {
        std::vector<int> ids;
        const auto& vm = data->verts[v];
        for (std::size_t i = 0; i < vm.faces.size(); ++i) {
            const Face& f = vm.faces[i];
            bool match = true;
            for (int c = 0; c < 3; ++c) {
                const int want = c == line ? cell : (vm.cls[c] >= 0 ? G : INACTIVE);
                if (f.cell[c] != want) match = false;
            }
            if (match && vm.face_cell[i] >= 0 && f.dim == (cell == NODE ? 0 : 1)) ids.push_back(vm.face_cell[i]);
        }
        return ids;
    };
    for (auto& e : data->edges) {
        const ClassInfo& ci = ctx.cls[e.cls];
        auto ends = [&](int cell) {
            std::vector<int> b = local_cells(e.from, e.line, cell);
            auto t = local_cells(e.to, e.line, cell);
            b.insert(b.end(), t.begin(), t.end());
            return b;
        };
        const std::string where = out.cells[e.cell].locus;
        if (!ci.paired()) {
            auto b = ends(RAY0);
            b.push_back(e.cell);
            e.attach[RAY0] = add_cell(2, CellClass::flap, b, where + " x ray of p" + std::to_string(ci.id0));
            continue;
        }
        e.attach[NODE] = add_cell(1, CellClass::bounded_edge, ends(NODE), where + " x node");
        auto sq = ends(SIG);
        sq.push_back(e.cell);
        sq.push_back(e.attach[NODE]);
        e.attach[SIG] = add_cell(2, CellClass::square, sq, where + " x segment");
        for (int cell : {RAY0, RAY1}) {
            auto b = ends(cell);
            b.push_back(e.attach[NODE]);
            const int id = cell == RAY0 ? ci.id0 : ci.id1;
            e.attach[cell] = add_cell(2, CellClass::flap, b, where + " x ray of p" + std::to_string(id));
        }
    }

    for (const auto& c : out.cells) {
        switch (c.cls) {
        case CellClass::vertex:
            ++out.f.vertices;
            break;
        case CellClass::bounded_edge:
            ++out.f.bounded_edges;
            break;
        case CellClass::ray:
            ++out.f.rays;
            break;
        case CellClass::square:
            ++out.f.squares;
            break;
        case CellClass::triangle:
            ++out.f.triangles;
            break;
        case CellClass::polygon:
            ++out.f.polygons;
            break;
        case CellClass::flap:
            ++out.f.flaps;
            break;
        case CellClass::quadrant:
            ++out.f.quadrants;
            break;
        }
    }
    out.data = data;
    return out;
}

bool TGLComplex::boundary_closed() const
{
    for (const auto& c : cells) {
        if (c.dim == 0 && !c.boundary.empty()) return false;
        if (c.dim > 0 && c.boundary.empty()) return false;
        for (int b : c.boundary)
            if (b < 0 || b >= static_cast<int>(cells.size()) || cells[b].dim != c.dim - 1) return false;
    }
    return true;
}

int TGLComplex::locate(const TropPoint& U, const TropPoint& V, const TropPoint& W) const
{
    if (!data) return -1;
    const TGLData& D = *data;
    const Context& ctx = D.ctx;
    if (mod_rat(U.hex + V.hex + W.hex, Q) != 0) return -1;
    const std::array<const TropPoint*, 3> pt = {&U, &V, &W};
    std::array<int, 3> k;
    int nact = 0;
    for (int c = 0; c < 3; ++c) {
        k[c] = ctx.class_at(pt[c]->hex);
        if (k[c] >= 0) ++nact;
        else if (!pt[c]->on_hexagon()) return -1;
    }
    if (nact == 0) {
        for (const auto& f : D.faces) {
            for (int a = -1; a <= 1; ++a)
                for (int b = -1; b <= 1; ++b) {
                    const Rat x = U.hex + a * Q, y = V.hex + b * Q;
                    bool inside = true;
                    const std::size_t n = f.poly.size();
                    for (std::size_t i = 0; i < n && inside; ++i) {
                        const auto& p = f.poly[i];
                        const auto& q = f.poly[(i + 1) % n];
                        const Rat cr = (q[0] - p[0]) * (y - p[1]) - (q[1] - p[1]) * (x - p[0]);
                        if (cr <= 0) inside = false;
                    }
                    if (inside) return f.cell;
                }
        }
        return -1;
    }
    if (nact == 1) {
        int line = 0;
        while (k[line] < 0) ++line;
        const Rat par = line_param(line, {U.hex, V.hex});
        for (const auto& e : D.edges) {
            if (e.line != line || e.cls != k[line]) continue;
            const bool in = (par > e.p_from && par < e.p_to) || (par + Q > e.p_from && par + Q < e.p_to);
            if (!in) continue;
            auto [cell, x] = tree_position(*pt[line], ctx.cls[k[line]]);
            (void)x;
            return cell == G ? e.cell : e.attach[cell];
        }
        return -1;
    }
    auto it = D.vert_index.find({U.hex, V.hex});
    if (it == D.vert_index.end()) return -1;
    const auto& vm = D.verts[it->second];
    std::array<int, 3> chart;
    std::array<Rat, 4> x = {Rat(0), Rat(0), Rat(0), Rat(0)};
    for (int c = 0; c < 3; ++c) {
        if (k[c] < 0) {
            chart[c] = INACTIVE;
            continue;
        }
        auto [cell, val] = tree_position(*pt[c], ctx.cls[k[c]]);
        chart[c] = cell;
        x[c + 1] = val;
    }
    for (std::size_t i = 0; i < vm.faces.size(); ++i)
        if (vm.faces[i].cell == chart && vm.faces[i].d.contains_point(x)) return vm.face_cell[i];
    return -1;
}

// ---------------------------------------------------------------- sampling

Series random_lift(const TropPoint& X, const ThetaParams& P, const TropParametrization& T, std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(1, 9), sgn(0, 1), shift(-1, 1);
    auto unit = [&]() {
        long a = num(rng);
        if (sgn(rng)) a = -a;
        return make_rat(a, num(rng));
    };
    const Series qn = [&] {
        long n = shift(rng);
        return n >= 0 ? P.q.pow(n) : P.q.inv().pow(-n);
    }();
    const Series tail = Series(unit()) * Series::t_pow(5);
    const int k = T.vertex_at(X.hex);
    if (X.on_hexagon()) {
        if (k < 0) return (Series(unit()) + tail) * Series::t_pow(X.hex) * qn;
        // at a hexagon vertex: a residue different from the anchors'
        Rat c = unit();
        while (c == 1) c = unit();
        return P.p[T.anchors[k][0] - 1] * (Series(c) + tail) * qn;
    }
    return P.p[X.id - 1] * (Series(1) + Series(unit()) * Series::t_pow(X.dist) + tail * Series::t_pow(X.dist)) * qn;
}

TGLSampleReport tgl_sample(const ThetaParams& P, const TGLComplex& C, int n, std::mt19937_64& rng, bool theta_check)
{
    TGLSampleReport rep;
    const Context& ctx = C.data->ctx;
    const TropParametrization& T = ctx.T;
    const Rat Q = ctx.Q;
    std::uniform_int_distribution<int> cls(0, 5), mode(0, 3), pick(0, 1);
    std::vector<Rat> dists;
    for (const auto& ci : ctx.cls)
        if (ci.paired()) {
            dists.push_back(ci.beta / 2);
            dists.push_back(ci.beta);
            dists.push_back(3 * ci.beta / 2);
            dists.push_back(2 * ci.beta);
        }
    for (Rat d : {make_rat(1, 3), make_rat(1), make_rat(2)}) dists.push_back(d);
    std::uniform_int_distribution<std::size_t> dpick(0, dists.size() - 1);
    std::uniform_int_distribution<long> frac(1, 23);

    auto random_point = [&](bool anchored) {
        TropPoint X;
        if (!anchored) {
            X.hex = mod_rat(Q * make_rat(frac(rng), 24), Q);
            if (ctx.class_at(X.hex) >= 0) X.hex = mod_rat(X.hex + Q / 48, Q);
            return X;
        }
        const ClassInfo& ci = ctx.cls[cls(rng)];
        X.hex = ci.h;
        if (mode(rng) == 0) return X;
        X.dist = dists[dpick(rng)];
        X.id = ci.paired() && pick(rng) ? ci.id1 : ci.id0;
        if (ci.paired() && X.dist <= ci.beta) X.id = ci.seg_id();
        return X;
    };
    for (int s = 0; s < n; ++s) {
        ++rep.samples;
        try {
        Series u, v;
        const int m = mode(rng);
        u = random_lift(random_point(m != 3), P, T, rng);
        if (m <= 1) {
            // u and w anchored, v completes the product
            Series w = random_lift(random_point(true), P, T, rng);
            v = (u * w).inv();
        } else {
            v = random_lift(random_point(m != 3), P, T, rng);
        }
        Series w = (u * v).inv();
        {
            const TropPoint U = retract(u, P, T), V = retract(v, P, T), W = retract(w, P, T);
            if (C.locate(U, V, W) < 0) {
                std::ostringstream os;
                os << "U=" << to_string(U.hex) << "/p" << U.id << "@" << to_string(U.dist) << " V=" << to_string(V.hex) << "/p" << V.id << "@"
                   << to_string(V.dist) << " W=" << to_string(W.hex) << "/p" << W.id << "@" << to_string(W.dist);
                rep.failures.push_back(os.str());
                continue;
            }
            ++rep.located;
            if (theta_check)
                for (const Series* x : {&u, &v, &w}) {
                    const TropPoint X = retract(*x, P, T);
                    if (trop_point(parametrize_point(P, *x)) != T.embed(X)) ++rep.theta_mismatches;
                }
        }
        } catch (const PrecisionError& e) {
            rep.failures.push_back(std::string("precision: ") + e.what());
        }
    }
    return rep;
}

} // namespace hc
