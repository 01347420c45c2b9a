#include "hc/symmetrize.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hc {

namespace {

SeriesPoly lin(const Series& c0, const Series& c1) { return SeriesPoly({c0, c1}); }

// Newton form on nodes 0, 1, …, n, expanded to the monomial basis.
SeriesPoly interpolate_integer_nodes(std::vector<Series> v)
{
    const long n = static_cast<long>(v.size()) - 1;
    for (long j = 1; j <= n; ++j)
        for (long i = n; i >= j; --i) v[i] = (v[i] - v[i - 1]) * Series(make_rat(1, j));
    SeriesPoly p({v[n]});
    for (long k = n - 1; k >= 0; --k) p = poly_add(poly_mul(p, lin(Series(-k), Series(1))), SeriesPoly({v[k]}));
    return p;
}

Point3 cross(const Point3& p, const Point3& q)
{
    return {p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]};
}

Mat3 from_columns(const Point3& a, const Point3& b, const Point3& c)
{
    Mat3 m;
    for (int i = 0; i < 3; ++i) m[i] = {a[i], b[i], c[i]};
    return m;
}

MPoly linear_form(const Point3& l)
{
    return MPoly::var(0) * l[0] + MPoly::var(1) * l[1] + MPoly::var(2) * l[2];
}

Rat relative_agreement(const TernaryCubic& ref, const TernaryCubic& other)
{
    auto [lambda, order] = proportionality(ref, other);
    Rat lead = 0;
    bool any = false;
    for (const auto& c : other.c)
        if (c.has_support() && (!any || c.val() < lead)) {
            lead = c.val();
            any = true;
        }
    if (!any) return Rat(-1000000);
    return order - lead;
}

std::vector<Point3> points_on_line(const TernaryCubic& c, const Point3& a, const Point3& b, const Rat& prec)
{
    std::vector<Series> vals;
    for (long k = 0; k <= 3; ++k) {
        Point3 p = {a[0] + b[0] * Series(k), a[1] + b[1] * Series(k), a[2] + b[2] * Series(k)};
        vals.push_back(c.eval(p));
    }
    SeriesPoly f = interpolate_integer_nodes(vals);
    if (!f.c[3].has_support() || !f.c[0].has_support()) return {};
    PuiseuxResult r;
    try {
        r = puiseux_roots(f, prec);
    } catch (const PrecisionError&) {
        return {}; // probe through a vertex of the triangle
    }
    if (r.roots.size() != 3) return {};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!(r.roots[i] - r.roots[j]).has_support()) return {};
    std::vector<Point3> out;
    for (const auto& l : r.roots) out.push_back({a[0] + b[0] * l, a[1] + b[1] * l, a[2] + b[2] * l});
    return out;
}

Point3 ip(long x, long y, long z) { return {Series(x), Series(y), Series(z)}; }

SyzygeticTriangle factor_member(const TernaryCubic& c, const Series& s, const Rat& prec)
{
    static const std::vector<std::pair<Point3, Point3>> probes = {
        {ip(1, 2, 3), ip(2, -1, 5)}, {ip(3, 1, -2), ip(-1, 4, 1)}, {ip(5, -3, 1), ip(1, 1, -4)},
        {ip(2, 7, -1), ip(-3, 2, 2)}, {ip(1, -5, 2), ip(4, 3, 7)}};
    std::vector<std::vector<Point3>> hits;
    for (const auto& [a, b] : probes) {
        auto pts = points_on_line(c, a, b, prec);
        if (!pts.empty()) hits.push_back(pts);
        if (hits.size() == 2) break;
    }
    if (hits.size() < 2) throw std::domain_error("syzygetic_triangles: line intersections unrepresentable or degenerate");
    std::array<int, 3> perm = {0, 1, 2};
    SyzygeticTriangle best;
    best.s = s;
    bool have = false;
    do {
        std::array<Point3, 3> lines;
        MPoly prod = MPoly::constant(Series(1));
        for (int i = 0; i < 3; ++i) {
            lines[i] = normalize_point(cross(hits[0][i], hits[1][perm[i]]));
            prod = prod * linear_form(lines[i]);
        }
        Rat ord = relative_agreement(TernaryCubic::from_poly(prod), c);
        if (!have || ord > best.residual_order) {
            best.lines = lines;
            best.residual_order = ord;
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Perm9 identity_perm()
{
    Perm9 p{};
    std::iota(p.begin(), p.end(), 0);
    return p;
}

bool same_point_sets(const PointList& a, const PointList& b)
{
    std::vector<bool> used(b.size(), false);
    for (const auto& p : a) {
        bool found = false;
        for (std::size_t j = 0; j < b.size() && !found; ++j)
            if (!used[j] && projectively_equal(p, b[j])) used[j] = found = true;
        if (!found) return false;
    }
    return true;
}

} // namespace

SeriesPoly symmetric_b_equation(const Series& iota, const Series& a)
{
    const Series a2 = a * a, a3 = a2 * a;
    SeriesPoly inner({-Series(36) * a2 - Series(6) * a - Series(1), Series(0), Series(72) * a + Series(24), Series(-48)});
    SeriesPoly num = poly_scale(poly_pow(inner, 3), (Series(6) * a - Series(1)).pow(3));
    SeriesPoly cub({Series(9) * a3 - Series(3) * a2 + a, Series(0), -Series(3) * a - Series(1), Series(2)});
    SeriesPoly den = poly_mul(poly_mul(lin(Series(3) * a + Series(1), Series(6)), poly_pow(lin(Series(3) * a + Series(1), Series(-3)), 2)),
                              poly_pow(cub, 3));
    SeriesPoly r = poly_add(num, poly_scale(den, -iota));
    r.trim();
    return r;
}

std::vector<Series> solve_symmetric_b(const Series& iota, const Series& a, const Rat& prec)
{
    if (!iota.has_support() || iota.val() >= 0) throw std::domain_error("solve_symmetric_b: need val(iota) < 0");
    if (a.has_support() && a.val() + iota.val() <= 0) throw std::domain_error("solve_symmetric_b: need val(a) + val(iota) > 0");
    const Rat target = -iota.val() / 6;
    auto res = puiseux_roots(symmetric_b_equation(iota, a), prec, target);
    std::vector<Series> out;
    for (const auto& r : res.roots)
        if (r.has_support() && r.val() == target) out.push_back(r);
    for (const auto& [v, cnt] : res.unrepresentable)
        if (v == target && cnt > 0) throw std::domain_error("solve_symmetric_b: roots leave the session field");
    auto key = [](const Series& s) {
        auto k = s.lead().as_root_of_unity_multiple();
        return k ? k->second : 100;
    };
    std::stable_sort(out.begin(), out.end(), [&](const Series& x, const Series& y) { return key(x) < key(y); });
    return out;
}

Series omega_of(const Series& a, const Series& b)
{
    return (Series(3) * a + Series(6) * b + Series(1)) / (-Series(3) * a + Series(3) * b - Series(1));
}

PointList inflection_matrix_from_root(const Series& c)
{
    const Series one(1);
    const Series x1(Cyclo::zeta12(4)), x2(Cyclo::zeta12(8));
    const Series u0 = one + c, u1 = one + x1 * c, u2 = one + x2 * c;
    return {{one, -one, Series(0)}, {one, Series(0), -one}, {Series(0), one, -one},
            {u0, u1, u2},           {u1, u2, u0},           {u2, u0, u1},
            {u1, u0, u2},           {u0, u2, u1},           {u2, u1, u0}};
}

PointList inflection_matrix(const Series& omega)
{
    auto roots = series_root(omega, 3);
    if (roots.empty()) throw std::domain_error("inflection_matrix: cube root of omega unavailable");
    for (const auto& r : roots)
        if (r.has_support() && r.lead().is_rational()) return inflection_matrix_from_root(r);
    return inflection_matrix_from_root(roots.front());
}

const std::vector<Triple>& hesse_triples()
{
    static const std::vector<Triple> t = {{1, 2, 3}, {1, 4, 7}, {1, 5, 9}, {1, 6, 8}, {2, 4, 9}, {2, 5, 8},
                                          {2, 6, 7}, {3, 4, 8}, {3, 5, 7}, {3, 6, 9}, {4, 5, 6}, {7, 8, 9}};
    return t;
}

std::vector<Triple> collinear_triples(const PointList& pts)
{
    std::vector<Triple> out;
    const int n = static_cast<int>(pts.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (!det3(from_columns(pts[i], pts[j], pts[k])).has_support()) out.push_back({i + 1, j + 1, k + 1});
    return out;
}

SeriesPoly pencil_discriminant(const TernaryCubic& f)
{
    const TernaryCubic h = hessian(f);
    std::vector<Series> vals;
    for (long s = 0; s <= 12; ++s) vals.push_back(discriminant(f * Series(s) + h));
    SeriesPoly p = interpolate_integer_nodes(vals);
    p.trim();
    return p;
}

SeriesPoly polynomial_cube_root(const SeriesPoly& p)
{
    long d = p.degree();
    while (d >= 0 && !p.c[d].has_support()) --d;
    if (d < 0 || d % 3 != 0) throw std::domain_error("polynomial_cube_root: degree is not a multiple of 3");
    const long m = d / 3;
    const Series lc = p.c[d];
    std::vector<Series> r(d + 1);
    for (long i = 0; i <= d; ++i) r[i] = p.c[d - i] / lc;
    std::vector<Series> q(m + 1);
    q[0] = Series(1);
    const Rat alpha = make_rat(1, 3);
    for (long k = 1; k <= m; ++k) {
        Series acc;
        for (long i = 1; i <= k; ++i) acc += Series(Rat((alpha + 1) * i - k)) * r[i] * q[k - i];
        q[k] = acc * Series(make_rat(1, k));
    }
    SeriesPoly root(std::vector<Series>(m + 1));
    for (long k = 0; k <= m; ++k) root.c[m - k] = q[k];
    if (p.c[0].is_exact_zero()) root.c[0] = Series(0); // H_f itself is a triangle
    SeriesPoly check = poly_add(poly_scale(poly_pow(root, 3), lc), poly_scale(p, Series(-1)));
    for (const auto& c : check.c)
        if (c.has_support()) throw std::domain_error("polynomial_cube_root: not a perfect cube at precision");
    return root;
}

std::vector<SyzygeticTriangle> syzygetic_triangles(const TernaryCubic& f, const Rat& prec)
{
    const TernaryCubic h = hessian(f);
    SeriesPoly quartic = polynomial_cube_root(pencil_discriminant(f));
    std::vector<SyzygeticTriangle> out;
    if (quartic.degree() == 3) out.push_back(factor_member(h, Series(0), prec)); // s = ∞ member
    auto roots = puiseux_roots(quartic, prec);
    if (roots.unrepresentable_count() > 0) throw std::domain_error("syzygetic_triangles: pencil parameters leave the session field");
    for (const auto& s : roots.roots) {
        auto tri = factor_member(f * s + h, s, prec);
        out.push_back(tri);
    }
    if (out.size() != 4) throw std::domain_error("syzygetic_triangles: expected four reducible members");
    return out;
}

HesseLabeling inflection_points(const TernaryCubic& f, const Rat& prec)
{
    auto tri = syzygetic_triangles(f, prec);
    std::array<int, 3> perm = {0, 1, 2};
    do {
        PointList pts;
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) pts.push_back(normalize_point(cross(tri[0].lines[j], tri[1].lines[perm[k]])));
        if (collinear_triples(pts) == hesse_triples()) return {pts};
    } while (std::next_permutation(perm.begin(), perm.end()));
    throw std::domain_error("inflection_points: no labeling realizes the Hesse configuration");
}

Point3 normalize_point(const Point3& p)
{
    int best = -1;
    for (int i = 0; i < 3; ++i)
        if (p[i].has_support() && (best < 0 || p[i].val() < p[best].val())) best = i;
    if (best < 0) throw PrecisionError("normalize_point: point is zero to precision");
    Point3 r;
    for (int i = 0; i < 3; ++i) r[i] = i == best ? Series(1) : p[i] / p[best];
    return r;
}

bool projectively_equal(const Point3& p, const Point3& q)
{
    const Point3 a = normalize_point(p), b = normalize_point(q);
    for (int i = 0; i < 3; ++i)
        if ((a[i] - b[i]).has_support()) return false;
    return true;
}

Mat3 projective_from_correspondence(const std::array<Point3, 4>& src, const std::array<Point3, 4>& dst)
{
    auto frame = [](const std::array<Point3, 4>& p) {
        Mat3 base = from_columns(p[0], p[1], p[2]);
        if (!det3(base).has_support()) throw std::domain_error("projective_from_correspondence: degenerate quadruple");
        Point3 lam = mat_apply(adjugate3(base), p[3]);
        for (const auto& l : lam)
            if (!l.has_support()) throw std::domain_error("projective_from_correspondence: degenerate quadruple");
        Mat3 m;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m[i][j] = p[j][i] * lam[j];
        return m;
    };
    return mat_mul(frame(dst), adjugate3(frame(src)));
}

Perm9 parse_cycles(const std::string& text)
{
    Perm9 p = identity_perm();
    std::vector<int> cyc;
    for (char ch : text) {
        if (ch == '(') {
            cyc.clear();
        } else if (ch >= '1' && ch <= '9') {
            cyc.push_back(ch - '0');
        } else if (ch == ')') {
            for (std::size_t i = 0; i < cyc.size(); ++i) p[cyc[i]] = cyc[(i + 1) % cyc.size()];
        } else if (ch != ' ') {
            throw std::invalid_argument("parse_cycles: bad character");
        }
    }
    return p;
}

Perm9 compose(const Perm9& outer, const Perm9& inner)
{
    Perm9 r = identity_perm();
    for (int i = 1; i <= 9; ++i) r[i] = outer[inner[i]];
    return r;
}

const std::vector<std::string>& coset_representatives()
{
    static const std::vector<std::string> reps = {
        "()",         "(456)(987)",    "(654)(789)",    "(2437)(5698)", "(246378)(59)", "(254397)(68)",
        "(249)(375)", "(258)(963)",    "(2539)(4876)",  "(852)(369)",   "(287364)(59)", "(2836)(4975)"};
    return reps;
}

SymmetrizeResult symmetrize_pipeline(const TernaryCubic& f, const Rat& prec, const std::optional<Series>& a_opt)
{
    const Series iota0 = j_invariant(f);
    if (!iota0.has_support() || iota0.val() >= 0) throw std::domain_error("symmetrize: need val(j(f)) < 0");
    // intermediate root extraction loses roughly −val(ι) in absolute order
    PrecisionGuard guard(std::max(working_prec(), Rat(prec - 2 * iota0.val())));
    return with_precision_retry([&] {
        const Rat inner = working_prec();
        SymmetrizeResult res;
        const Series iota = j_invariant(f);
        res.a = a_opt.value_or(Series(0));
        auto bs = solve_symmetric_b(iota, res.a, inner);
        if (bs.empty()) throw std::domain_error("symmetrize: no admissible b");
        res.b = bs.front();
        res.g = symmetric_cubic(res.a, res.b);
        res.omega = omega_of(res.a, res.b);
        const PointList A = inflection_matrix(res.omega);
        const PointList B = inflection_points(f, inner).points;

        auto phi = [&](const Perm9& rho) {
            return projective_from_correspondence({B[0], B[1], B[3], B[4]},
                                                  {A[rho[1] - 1], A[rho[2] - 1], A[rho[4] - 1], A[rho[5] - 1]});
        };
        const Perm9 id = identity_perm();
        res.transforms_tested = 1;
        Mat3 phi_id = phi(id);
        PointList image;
        for (const auto& p : B) image.push_back(mat_apply(phi_id, p));
        const bool in_realized = same_point_sets(image, A);
        const Perm9 tau = parse_cycles("(47)(58)(69)");
        for (const auto& rep : coset_representatives()) {
            const Perm9 sigma = parse_cycles(rep);
            const Perm9 rho = in_realized ? sigma : compose(tau, sigma);
            if (rho != id) ++res.transforms_tested;
            Mat3 m = adjugate3(rho == id ? phi_id : phi(rho));
            TernaryCubic h = apply_transform(f, m);
            Rat ord = relative_agreement(res.g, h);
            if (ord < prec) continue;
            res.m = m;
            res.transformed = h;
            res.accepted_perm = in_realized ? rep : "(47)(58)(69)" + rep;
            res.agreement = ord;
            return res;
        }
        throw PrecisionError("symmetrize: no coset map verifies");
    }, 32);
}

} // namespace hc
