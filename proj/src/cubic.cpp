#include "hc/cubic.hpp"

#include <stdexcept>

namespace hc {

MPoly MPoly::var(int i)
{
    MPoly p;
    Mono m{0, 0, 0};
    m[i] = 1;
    p.terms[m] = Series(1);
    return p;
}

MPoly MPoly::constant(const Series& s)
{
    MPoly p;
    if (!s.is_exact_zero()) p.terms[{0, 0, 0}] = s;
    return p;
}

MPoly& MPoly::operator+=(const MPoly& o)
{
    for (const auto& [m, s] : o.terms) terms[m] += s;
    prune();
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o)
{
    for (const auto& [m, s] : o.terms) terms[m] -= s;
    prune();
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b)
{
    MPoly r;
    for (const auto& [ma, sa] : a.terms)
        for (const auto& [mb, sb] : b.terms) r.terms[{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}] += sa * sb;
    r.prune();
    return r;
}

MPoly operator*(const MPoly& a, const Series& s)
{
    MPoly r;
    for (const auto& [m, c] : a.terms) r.terms[m] = c * s;
    r.prune();
    return r;
}

MPoly MPoly::diff(int var) const
{
    MPoly r;
    for (const auto& [m, c] : terms) {
        if (m[var] == 0) continue;
        Mono d = m;
        --d[var];
        r.terms[d] += c * Series(m[var]);
    }
    r.prune();
    return r;
}

Series MPoly::coeff(const Mono& m) const
{
    auto it = terms.find(m);
    return it == terms.end() ? Series() : it->second;
}

Series MPoly::eval(const Point3& p) const
{
    Series acc;
    for (const auto& [m, c] : terms) acc += c * p[0].pow(m[0]) * p[1].pow(m[1]) * p[2].pow(m[2]);
    return acc;
}

void MPoly::prune()
{
    for (auto it = terms.begin(); it != terms.end();)
        it = it->second.is_exact_zero() ? terms.erase(it) : std::next(it);
}

const std::array<Mono, 10>& TernaryCubic::monomials()
{
    static const std::array<Mono, 10> m = {{{3, 0, 0}, {2, 1, 0}, {1, 2, 0}, {0, 3, 0}, {0, 2, 1},
                                            {0, 1, 2}, {0, 0, 3}, {1, 0, 2}, {2, 0, 1}, {1, 1, 1}}};
    return m;
}

std::string TernaryCubic::key(int idx)
{
    const Mono& m = monomials()[idx];
    return "c" + std::to_string(m[0]) + std::to_string(m[1]) + std::to_string(m[2]);
}

int TernaryCubic::index(const Mono& m)
{
    const auto& ms = monomials();
    for (int i = 0; i < 10; ++i)
        if (ms[i] == m) return i;
    throw std::invalid_argument("not a cubic monomial");
}

MPoly TernaryCubic::poly() const
{
    MPoly p;
    for (int i = 0; i < 10; ++i)
        if (!c[i].is_exact_zero()) p.terms[monomials()[i]] = c[i];
    return p;
}

TernaryCubic TernaryCubic::from_poly(const MPoly& p)
{
    TernaryCubic f;
    for (const auto& [m, s] : p.terms) {
        if (m[0] + m[1] + m[2] != 3) throw std::invalid_argument("polynomial is not a ternary cubic");
        f.c[index(m)] = s;
    }
    return f;
}

Series TernaryCubic::eval(const Point3& p) const { return poly().eval(p); }

bool TernaryCubic::is_zero_to_prec() const
{
    for (const auto& s : c)
        if (s.has_support()) return false;
    return true;
}

TernaryCubic operator*(const TernaryCubic& f, const Series& s)
{
    TernaryCubic r;
    for (int i = 0; i < 10; ++i) r.c[i] = f.c[i] * s;
    return r;
}

TernaryCubic operator+(const TernaryCubic& f, const TernaryCubic& g)
{
    TernaryCubic r;
    for (int i = 0; i < 10; ++i) r.c[i] = f.c[i] + g.c[i];
    return r;
}

TernaryCubic symmetric_cubic(const Series& a, const Series& b)
{
    TernaryCubic f;
    for (int i = 0; i < 10; ++i) {
        const Mono& m = TernaryCubic::monomials()[i];
        int mx = std::max({m[0], m[1], m[2]});
        f.c[i] = mx == 3 ? a : mx == 2 ? b : Series(1);
    }
    return f;
}

Mat3 identity3()
{
    Mat3 m;
    for (int i = 0; i < 3; ++i) m[i][i] = Series(1);
    return m;
}

Mat3 mat_mul(const Mat3& a, const Mat3& b)
{
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
    return r;
}

Point3 mat_apply(const Mat3& m, const Point3& p)
{
    Point3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i] += m[i][j] * p[j];
    return r;
}

Series det3(const Mat3& m)
{
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 adjugate3(const Mat3& m)
{
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int i1 = (j + 1) % 3, i2 = (j + 2) % 3, j1 = (i + 1) % 3, j2 = (i + 2) % 3;
            r[i][j] = m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1];
        }
    return r;
}

Series det_n(const std::vector<std::vector<Series>>& m)
{
    const std::size_t n = m.size();
    // minors[mask] = determinant of rows 0..popcount(mask)-1 on the columns in mask
    std::vector<Series> minors(std::size_t(1) << n);
    minors[0] = Series(1);
    for (std::size_t mask = 1; mask < minors.size(); ++mask) {
        int row = __builtin_popcountll(mask) - 1;
        Series acc;
        int sign = 1;
        for (std::size_t col = n; col-- > 0;) {
            if (!(mask >> col & 1)) continue;
            if (!m[row][col].is_exact_zero()) {
                Series t = m[row][col] * minors[mask & ~(std::size_t(1) << col)];
                acc += sign > 0 ? t : -t;
            }
            sign = -sign;
        }
        minors[mask] = acc;
    }
    return minors.back();
}

namespace {

MPoly hessian_poly(const MPoly& f)
{
    std::array<std::array<MPoly, 3>, 3> h;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) h[i][j] = f.diff(i).diff(j);
    return h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) - h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
           h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
}

// The pair (α, β) with g = α·f + β·h, solved on the two monomials giving the
// determinant of least valuation.
std::pair<Series, Series> decompose(const MPoly& g, const MPoly& f, const MPoly& h)
{
    const auto& ms = TernaryCubic::monomials();
    int bi = -1, bj = -1;
    bool inexact_zero = false;
    Series best;
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j) {
            Series d = f.coeff(ms[i]) * h.coeff(ms[j]) - f.coeff(ms[j]) * h.coeff(ms[i]);
            if (!d.has_support()) {
                inexact_zero = inexact_zero || !d.is_exact();
                continue;
            }
            if (bi < 0 || d.val() < best.val()) {
                best = d;
                bi = i;
                bj = j;
            }
        }
    if (bi < 0 && inexact_zero) throw PrecisionError("cubic and its Hessian are indistinguishable at precision");
    if (bi < 0) throw std::domain_error("cubic and its Hessian are proportional to precision (singular cubic)");
    Series gi = g.coeff(ms[bi]), gj = g.coeff(ms[bj]);
    Series alpha = (gi * h.coeff(ms[bj]) - gj * h.coeff(ms[bi])) / best;
    Series beta = (f.coeff(ms[bi]) * gj - f.coeff(ms[bj]) * gi) / best;
    return {alpha, beta};
}

} // namespace

TernaryCubic hessian(const TernaryCubic& f) { return TernaryCubic::from_poly(hessian_poly(f.poly())); }

TernaryCubic apply_transform(const TernaryCubic& f, const Mat3& m)
{
    if (!det3(m).has_support()) throw std::domain_error("singular transform at current precision");
    std::array<MPoly, 3> sub;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) sub[i] += MPoly::var(j) * m[i][j];
    MPoly out;
    for (int k = 0; k < 10; ++k) {
        if (f.c[k].is_exact_zero()) continue;
        const Mono& e = TernaryCubic::monomials()[k];
        MPoly term = MPoly::constant(f.c[k]);
        for (int v = 0; v < 3; ++v)
            for (int p = 0; p < e[v]; ++p) term = term * sub[v];
        out += term;
    }
    return TernaryCubic::from_poly(out);
}

Invariants aronhold_invariants(const TernaryCubic& f)
{
    MPoly fp = f.poly();
    MPoly h = hessian_poly(fp);
    std::array<std::array<MPoly, 3>, 3> mf, mh;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            mf[i][j] = fp.diff(i).diff(j);
            mh[i][j] = h.diff(i).diff(j);
        }
    MPoly mixed;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            // adj(M_f)[i][j]
            int i1 = (j + 1) % 3, i2 = (j + 2) % 3, j1 = (i + 1) % 3, j2 = (i + 2) % 3;
            MPoly adj = mf[i1][j1] * mf[i2][j2] - mf[i1][j2] * mf[i2][j1];
            mixed += adj * mh[j][i];
        }
    Invariants inv;
    inv.s_prime = decompose(mixed, fp, h).first;
    inv.t_prime = decompose(hessian_poly(h), fp, h).second;
    return inv;
}

Series discriminant(const TernaryCubic& f)
{
    MPoly fp = f.poly();
    MPoly h = hessian_poly(fp);
    static const std::array<Mono, 6> quad = {{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}};
    std::vector<std::vector<Series>> m;
    for (const MPoly* src : {&fp, &h})
        for (int v = 0; v < 3; ++v) {
            MPoly d = src->diff(v);
            std::vector<Series> row;
            for (const auto& q : quad) row.push_back(d.coeff(q));
            m.push_back(row);
        }
    return det_n(m) * Series(make_rat(-1, 13824));
}

Series j_invariant(const TernaryCubic& f)
{
    // j = S'^3 / (1728 disc), with S' read off one coefficient of the mixed covariant.
    MPoly fp = f.poly();
    MPoly h = hessian_poly(fp);
    int best = -1;
    for (int i = 0; i < 10; ++i)
        if (f.c[i].has_support() && (best < 0 || f.c[i].val() < f.c[best].val())) best = i;
    if (best < 0) throw PrecisionError("cubic is zero to precision");
    const Mono& m = TernaryCubic::monomials()[best];
    Series g;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int i1 = (j + 1) % 3, i2 = (j + 2) % 3, j1 = (i + 1) % 3, j2 = (i + 2) % 3;
            MPoly adj = fp.diff(i1).diff(j1) * fp.diff(i2).diff(j2) - fp.diff(i1).diff(j2) * fp.diff(i2).diff(j1);
            g += (adj * h.diff(j).diff(i)).coeff(m);
        }
    Series disc = discriminant(f);
    if (disc.is_exact_zero()) throw std::domain_error("singular cubic: zero discriminant");
    if (!disc.has_support()) throw PrecisionError("singular cubic: discriminant is zero to precision");
    return g.pow(3) / (Series(1728) * f.c[best].pow(3) * disc);
}

std::pair<Series, Rat> proportionality(const TernaryCubic& f, const TernaryCubic& g)
{
    int best = -1;
    for (int i = 0; i < 10; ++i)
        if (f.c[i].has_support() && (best < 0 || f.c[i].val() < f.c[best].val())) best = i;
    if (best < 0) throw std::domain_error("reference cubic is zero to precision");
    Series lambda = g.c[best] / f.c[best];
    Rat order = 0;
    bool first = true;
    for (int i = 0; i < 10; ++i) {
        auto o = agreement_order(g.c[i], lambda * f.c[i]);
        if (!o) continue;
        if (first || *o < order) order = *o;
        first = false;
    }
    if (first) order = Rat(1000000);
    return {lambda, order};
}

} // namespace hc
