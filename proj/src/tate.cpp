#include "hc/tate.hpp"

#include <algorithm>
#include <stdexcept>

namespace hc {

namespace {

Rat rabs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

Rat sigma_power(long n, int k)
{
    Rat s = 0;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) {
            Int p = 1;
            for (int i = 0; i < k; ++i) p *= d;
            s += Rat(p);
        }
    return s;
}

// Σ_{n<len} c_n tⁿ, known below len.
Series poly_series(const std::vector<Rat>& c)
{
    Series s;
    for (std::size_t n = 0; n < c.size(); ++n)
        if (c[n] != 0) s += Series::monomial(Cyclo(c[n]), Rat(static_cast<long>(n)));
    return s + Series::big_o(Rat(static_cast<long>(c.size())));
}

// x/a with relative precision about `rel`.
Series ratio(const Series& x, const Series& a, const Rat& rel)
{
    if (!a.has_support()) throw PrecisionError("theta shift is zero to precision");
    if (a.is_monomial()) return x * Series::monomial(a.lead().inv(), -a.val());
    const Rat xv = x.has_support() ? x.val() : Rat(0);
    return x * a.inv_to(rel + rabs(xv) + rabs(a.val()) - xv);
}

Series product3(const Series& x, const Series& y, const Series& z) { return x * y * z; }

struct GroupRoots {
    std::array<Series, 3> num, den;
};

void check_distinct(const GroupRoots& g, const char* which)
{
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!(g.num[i] * g.den[j] - g.num[j] * g.den[i]).has_support())
                throw std::domain_error(std::string("implicitize: coincident intersection points on ") + which);
}

// (c_top, c_2, c_1, c_0) of D·∏(w − N_i/D_i), D = ∏ D_i.
std::array<Series, 4> elementary(const GroupRoots& g)
{
    const auto& n = g.num;
    const auto& d = g.den;
    return {product3(d[0], d[1], d[2]),
            -(n[0] * d[1] * d[2] + d[0] * n[1] * d[2] + d[0] * d[1] * n[2]),
            n[0] * n[1] * d[2] + n[0] * d[1] * n[2] + d[0] * n[1] * n[2],
            -product3(n[0], n[1], n[2])};
}

} // namespace

void validate_params(const ThetaParams& P)
{
    if (!P.q.has_support() || P.q.val() <= 0) throw std::domain_error("theta params: need val(q) > 0");
    for (const auto& s : {P.a, P.b, P.c})
        if (!s.has_support()) throw std::domain_error("theta params: a, b, c must be nonzero");
    for (const auto& s : P.p)
        if (!s.has_support()) throw std::domain_error("theta params: p_i must be nonzero");
    const Series g1 = product3(P.p[0], P.p[1], P.p[2]);
    const Series g2 = product3(P.p[3], P.p[4], P.p[5]);
    const Series g3 = product3(P.p[6], P.p[7], P.p[8]);
    if ((g1 - g2).has_support() || (g1 - g3).has_support()) throw std::domain_error("theta params: p1p2p3 = p4p5p6 = p7p8p9 fails");
    const Rat Q = P.q.val();
    for (int i = 0; i < 9; ++i)
        for (int j = i + 1; j < 9; ++j) {
            Rat d = (P.p[j].val() - P.p[i].val()) / Q;
            if (d.get_den() != 1) continue;
            Series r = ratio(P.p[i], P.p[j], working_prec()) * P.q.pow(to_long(d.get_num()));
            if (!(Series(1) - r).has_support())
                throw std::domain_error("theta params: p" + std::to_string(i + 1) + "/p" + std::to_string(j + 1) + " lies in q^Z to precision");
        }
}

std::vector<Rat> j_coefficients(long n_max)
{
    // 1728·E4³/(E4³ − E6²), an expansion independent of the a₄/Δ identity
    const long len = n_max + 3;
    PrecisionGuard guard(len);
    std::vector<Rat> e4(len), e6(len);
    e4[0] = e6[0] = 1;
    for (long n = 1; n < len; ++n) {
        e4[n] = 240 * sigma_power(n, 3);
        e6[n] = -504 * sigma_power(n, 5);
    }
    Series E4 = poly_series(e4), E6 = poly_series(e6);
    Series c4 = E4.pow(3);
    Series disc = (c4 - E6 * E6) * Series(make_rat(1, 1728)); // val 1
    Series j = c4 * disc.shifted(-1).inv_to(len).shifted(-1);
    std::vector<Rat> out;
    for (long n = -1; n <= n_max; ++n) {
        if (j.trunc() && *j.trunc() <= n) throw std::logic_error("j_coefficients: insufficient internal precision");
        out.push_back(j.coeff(n).rational_part());
    }
    return out;
}

Series j_of_q(const Series& q, long order)
{
    if (!q.has_support() || q.val() <= 0) throw std::domain_error("j_of_q: need val(q) > 0");
    const Rat Q = q.val();
    const Rat target = (order + 1) * Q;
    PrecisionGuard guard(std::max(working_prec(), Rat(target + 2 * Q)));
    auto c = j_coefficients(order);
    Series acc;
    for (long n = order; n >= 0; --n) acc = acc * q + Series(c[n + 1]);
    Series j = acc + Series(c[0]) * q.inv_to(target);
    return j.truncated(target);
}

std::vector<Rat> q_reversion_coefficients(long order)
{
    PrecisionGuard guard(order + 3);
    auto c = j_coefficients(order + 1);
    Series psi = poly_series(c); // q·j(q) with c_{-1} at degree 0
    Series phi = psi.inv_to(order + 2).shifted(1);
    Series g = series_reversion(phi, order + 1);
    std::vector<Rat> d;
    for (long k = 1; k <= order; ++k) d.push_back(g.coeff(k).rational_part());
    return d;
}

Series q_from_j(const Series& iota, long order)
{
    if (!iota.has_support() || iota.val() >= 0) throw std::domain_error("q_from_j: need val(iota) < 0");
    const Rat vu = -iota.val();
    const Rat target = (order + 1) * vu;
    PrecisionGuard guard(std::max(working_prec(), target));
    auto d = q_reversion_coefficients(order);
    Series u = iota.inv_to(target);
    Series acc;
    for (long k = order; k >= 1; --k) acc = (acc + Series(d[k - 1])) * u;
    return acc.truncated(target);
}

ModularCheck modular_check(const Series& q, long order)
{
    if (!q.has_support() || q.val() <= 0) throw std::domain_error("modular_check: need val(q) > 0");
    const Rat Q = q.val();
    ModularCheck m;
    m.checked_to = (order + 1) * Q;
    const Rat inner = m.checked_to + 2 * Q;
    PrecisionGuard guard(std::max(working_prec(), inner));
    Series qn = q, prod(1);
    for (long n = 1; n * Q < inner; ++n) {
        Series one_minus = Series(1) - qn;
        m.a4 += Series(Rat(Int(n) * n * n)) * qn * one_minus.inv_to(inner);
        prod *= one_minus.pow(24);
        qn *= q;
    }
    m.a4 = (m.a4 * Series(-5)).truncated(inner);
    m.delta = (q * prod).truncated(inner);
    Series lhs = (Series(1) - Series(48) * m.a4).pow(3) * m.delta.inv_to(inner - 2 * Q);
    m.residual = lhs - j_of_q(q, order);
    return m;
}

Series theta(const Series& x, const Series& q)
{
    if (!x.has_support()) throw PrecisionError("theta: argument is zero to precision");
    if (!q.has_support() || q.val() <= 0) throw std::domain_error("theta: need val(q) > 0");
    const Rat R = working_prec();
    const Rat Q = q.val(), X = x.val();
    Series prod(1);
    auto mul_factor = [&](const Series& y) {
        prod *= Series(1) - y;
        if (prod.has_support()) prod = prod.truncated(prod.val() + R);
    };
    Series qn = q;
    for (long n = 1; n * Q + X < R; ++n) {
        mul_factor(qn * x);
        qn *= q;
    }
    Series xi = x.is_monomial() ? Series::monomial(x.lead().inv(), -X) : x.inv_to(R + 2 * rabs(X));
    qn = Series(1);
    for (long n = 0; n * Q - X < R; ++n) {
        mul_factor(qn * xi);
        qn *= q;
    }
    if (!prod.has_support()) return prod;
    return prod.truncated(prod.val() + R);
}

Series theta_shifted(const Series& x, const Series& a, const Series& q) { return theta(ratio(x, a, working_prec()), q); }

Point3 parametrize_point(const ThetaParams& P, const Series& x)
{
    auto grp = [&](const Series& s, int k) {
        return s * theta_shifted(x, P.p[k], P.q) * theta_shifted(x, P.p[k + 1], P.q) * theta_shifted(x, P.p[k + 2], P.q);
    };
    return {grp(P.a, 0), grp(P.b, 3), grp(P.c, 6)};
}

TernaryCubic implicitize(const ThetaParams& P, const Series& v)
{
    // Θ(p_i / p_j) products over a group of three j's
    auto tp = [&](int i, int k) {
        return theta_shifted(P.p[i], P.p[k], P.q) * theta_shifted(P.p[i], P.p[k + 1], P.q) * theta_shifted(P.p[i], P.p[k + 2], P.q);
    };
    const std::array<const Series*, 3> scal = {&P.a, &P.b, &P.c};
    // roots at p_i for the group whose coordinate vanishes there: w = (coord hi)/(coord lo)
    auto roots = [&](int group, int lo, int hi) {
        GroupRoots g;
        for (int m = 0; m < 3; ++m) {
            int i = 3 * group + m;
            g.num[m] = *scal[hi] * tp(i, 3 * hi);
            g.den[m] = *scal[lo] * tp(i, 3 * lo);
        }
        return g;
    };
    GroupRoots g7 = roots(2, 0, 1), g4 = roots(1, 0, 2), g1 = roots(0, 1, 2);
    check_distinct(g7, "z2 = 0");
    check_distinct(g4, "z1 = 0");
    check_distinct(g1, "z0 = 0");

    TernaryCubic f;
    auto e7 = elementary(g7); // in w = g/f: c030, c120, c210, c300
    f.at(0, 3, 0) = e7[0];
    f.at(1, 2, 0) = e7[1];
    f.at(2, 1, 0) = e7[2];
    f.at(3, 0, 0) = e7[3];

    auto e4 = elementary(g4); // in w = h/f: c003, c102, c201, c300
    if (!e4[3].has_support()) throw PrecisionError("implicitize: degenerate group at p4, p5, p6");
    Series k4 = f.at(3, 0, 0) / e4[3];
    f.at(0, 0, 3) = k4 * e4[0];
    f.at(1, 0, 2) = k4 * e4[1];
    f.at(2, 0, 1) = k4 * e4[2];

    auto e1 = elementary(g1); // in w = h/g: c003, c012, c021, c030
    if (!e1[3].has_support()) throw PrecisionError("implicitize: degenerate group at p1, p2, p3");
    Series k1 = f.at(0, 3, 0) / e1[3];
    f.at(0, 1, 2) = k1 * e1[1];
    f.at(0, 2, 1) = k1 * e1[2];
    Series c003_alt = k1 * e1[0];
    const Series& c003 = f.at(0, 0, 3);
    if (!c003.has_support() || !c003_alt.has_support() || c003.val() != c003_alt.val() || c003.lead() != c003_alt.lead())
        throw std::domain_error("implicitize: coefficient groups are inconsistent");

    Point3 w = parametrize_point(P, v);
    Series fgh = w[0] * w[1] * w[2];
    if (!fgh.has_support()) throw std::domain_error("implicitize: witness lies on a coordinate line");
    Series rest = f.eval(w);
    f.at(1, 1, 1) = -(rest / fgh);
    return f;
}

TernaryCubic implicitize(const ThetaParams& P)
{
    static const long witnesses[] = {2, 3, -2, 5, -3, 7, 11};
    std::string last;
    for (long v : witnesses) {
        try {
            return implicitize(P, Series(v));
        } catch (const std::domain_error& e) {
            last = e.what();
            if (last.find("witness") == std::string::npos) throw;
        }
    }
    throw std::domain_error(last);
}

ThetaParams permute_params(const ThetaParams& P, const std::array<int, 9>& perm)
{
    ThetaParams R = P;
    for (int i = 0; i < 9; ++i) {
        if (perm[i] < 0 || perm[i] > 8 || perm[i] / 3 != i / 3) throw std::domain_error("permute_params: permutation must preserve the groups");
        R.p[i] = P.p[perm[i]];
    }
    return R;
}

ThetaParams scale_abc(const ThetaParams& P, const Series& lambda)
{
    ThetaParams R = P;
    R.a *= lambda;
    R.b *= lambda;
    R.c *= lambda;
    return R;
}

ThetaParams scale_p(const ThetaParams& P, const Series& lambda)
{
    ThetaParams R = P;
    for (auto& p : R.p) p *= lambda;
    return R;
}

ThetaParams invert_p(const ThetaParams& P)
{
    ThetaParams R = P;
    for (auto& p : R.p) p = p.is_monomial() ? Series::monomial(p.lead().inv(), -p.val()) : p.inv();
    return R;
}

ThetaParams q_shift(const ThetaParams& P, const std::array<long, 9>& n)
{
    const long s1 = n[0] + n[1] + n[2], s2 = n[3] + n[4] + n[5], s3 = n[6] + n[7] + n[8];
    if (s1 != s2 || s1 != s3) throw std::domain_error("q_shift: the three group sums of n must agree");
    ThetaParams R = P;
    std::array<Series*, 3> scal = {&R.a, &R.b, &R.c};
    for (int g = 0; g < 3; ++g) {
        long tri = 0;
        for (int m = 0; m < 3; ++m) {
            const int i = 3 * g + m;
            *scal[g] *= P.p[i].pow(n[i]);
            tri += n[i] * (n[i] - 1) / 2;
        }
        *scal[g] *= P.q.pow(tri);
    }
    for (int i = 0; i < 9; ++i) R.p[i] = P.p[i] * P.q.pow(n[i]);
    return R;
}

HoneycombOrderCertificate honeycomb_certificate(const ThetaParams& P)
{
    if (!P.q.has_support() || P.q.val() <= 0) throw std::domain_error("certificate: need val(q) > 0");
    const Rat Q = P.q.val();
    std::array<Rat, 9> base;
    for (int i = 0; i < 9; ++i) base[i] = P.p[i].val();
    std::array<int, 3> g0 = {0, 1, 2}, g1 = {3, 4, 5}, g2 = {6, 7, 8};
    for (int inv = 0; inv < 2; ++inv) {
        std::sort(g0.begin(), g0.end());
        do {
            std::sort(g1.begin(), g1.end());
            do {
                std::sort(g2.begin(), g2.end());
                do {
                    std::array<int, 9> perm = {g0[0], g0[1], g0[2], g1[0], g1[1], g1[2], g2[0], g2[1], g2[2]};
                    std::array<Rat, 9> v;
                    for (int i = 0; i < 9; ++i) v[i] = inv ? Rat(-base[perm[i]]) : base[perm[i]];
                    const Rat shift = -v[0];
                    std::array<Rat, 9> r;
                    for (int i = 0; i < 9; ++i) r[i] = mod_rat(v[i] + shift, Q);
                    const bool ok = r[8] == 0 && r[0] == 0 && 0 < r[1] && r[1] < r[2] && r[2] == r[3] && r[3] < r[4] &&
                                    r[4] < r[5] && r[5] == r[6] && r[6] < r[7] && r[7] < Q;
                    if (!ok) continue;
                    HoneycombOrderCertificate c;
                    c.Q = Q;
                    c.r = r;
                    for (int i = 0; i < 9; ++i) c.n[i] = to_long(floor_rat((v[i] + shift) / Q));
                    c.inverted = inv;
                    c.perm = perm;
                    c.shift = shift;
                    ThetaParams N = permute_params(P, perm);
                    if (inv) N = invert_p(N);
                    c.normalized = scale_p(N, Series::t_pow(shift));
                    return c;
                } while (std::next_permutation(g2.begin(), g2.end()));
            } while (std::next_permutation(g1.begin(), g1.end()));
        } while (std::next_permutation(g0.begin(), g0.end()));
    }
    throw std::domain_error("certificate: the values V(p_i) cannot be brought into honeycomb cyclic order");
}

ThetaParams symmetric_example_params(const Rat& Q, const Rat& beta)
{
    if (Q <= 0 || beta <= 0) throw std::domain_error("example params: need Q > 0 and beta > 0");
    const Series r = Series::t_pow(Q / 6), ri = Series::t_pow(-Q / 6);
    const Series s = Series(1) + Series::t_pow(beta);
    const Series si = s.inv();
    ThetaParams P;
    P.q = Series::t_pow(Q);
    P.a = P.b = P.c = Series(1);
    P.p = {ri * si,           Series(1),       r * s,
           r * si,            r.pow(2),        ri.pow(3) * s,
           r.pow(3) * si,     ri.pow(2),       ri * s};
    return P;
}

} // namespace hc
