#include "hc/poly.hpp"

#include "hc/session.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace hc {

namespace {

using CPoly = std::vector<Cyclo>;
using cplx = std::complex<long double>;

void trim(CPoly& p)
{
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Quotient and remainder of a by b (b monic after scaling).
std::pair<CPoly, CPoly> divmod(CPoly a, const CPoly& b)
{
    trim(a);
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    Cyclo lead_inv = b.back().inv();
    long db = static_cast<long>(b.size()) - 1;
    CPoly q(a.size() > b.size() - 1 ? a.size() - db : 0);
    for (long k = static_cast<long>(a.size()) - 1; k >= db; --k) {
        if (a[k].is_zero()) continue;
        Cyclo f = a[k] * lead_inv;
        q[k - db] = f;
        for (long i = 0; i <= db; ++i) a[k - db + i] -= f * b[i];
    }
    a.resize(std::min<std::size_t>(a.size(), static_cast<std::size_t>(db)));
    trim(a);
    trim(q);
    return {q, a};
}

CPoly gcd(CPoly a, CPoly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        CPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

cplx embed(const Cyclo& x, int k)
{
    const long double th = std::numbers::pi_v<long double> * k / 6;
    cplx z(std::cos(th), std::sin(th)), acc = 0, pw = 1;
    for (int i = 0; i < 4; ++i) {
        acc += pw * static_cast<long double>(x[i].get_d());
        pw *= z;
    }
    return acc;
}

std::vector<cplx> numeric_roots(const std::vector<cplx>& a)
{
    const long n = static_cast<long>(a.size()) - 1;
    std::vector<cplx> z(n);
    auto eval = [&](cplx x) {
        cplx v = a[n];
        for (long i = n - 1; i >= 0; --i) v = v * x + a[i];
        return v;
    };
    auto deval = [&](cplx x) {
        cplx v = a[n] * static_cast<long double>(n);
        for (long i = n - 1; i >= 1; --i) v = v * x + a[i] * static_cast<long double>(i);
        return v;
    };
    long double radius = 0;
    for (long i = 0; i < n; ++i) radius = std::max(radius, std::pow(std::abs(a[i] / a[n]), 1.0L / (n - i)));
    radius = std::max(radius, 1e-3L) * 1.1L;
    for (long i = 0; i < n; ++i) z[i] = std::polar(radius, 2 * std::numbers::pi_v<long double> * i / n + 0.4L);
    // Aberth iteration
    for (int it = 0; it < 500; ++it) {
        long double worst = 0;
        for (long i = 0; i < n; ++i) {
            cplx ratio = eval(z[i]) / deval(z[i]);
            cplx s = 0;
            for (long j = 0; j < n; ++j)
                if (j != i) s += 1.0L / (z[i] - z[j]);
            cplx w = ratio / (1.0L - ratio * s);
            z[i] -= w;
            worst = std::max(worst, std::abs(w) / std::max(1.0L, std::abs(z[i])));
        }
        if (worst < 1e-17L) break;
    }
    return z;
}

bool rationalize(long double x, Rat& out)
{
    const long double tol = 1e-9L * std::max(1.0L, std::fabs(x));
    long double y = x;
    Int p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int i = 0; i < 40; ++i) {
        long double fl = std::floor(y);
        Int a(static_cast<long>(fl));
        Int p2 = a * p1 + p0, q2 = a * q1 + q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        if (q1 > 100000000) return false;
        long double approx = static_cast<long double>(p1.get_d()) / static_cast<long double>(q1.get_d());
        if (std::fabs(approx - x) <= tol) {
            out = Rat(p1, q1);
            out.canonicalize();
            return true;
        }
        long double frac = y - fl;
        if (frac < 1e-30L) return false;
        y = 1 / frac;
        if (std::fabs(y) > 1e18L) return false;
    }
    return false;
}

// Real coordinates (a,b,c,d) of a + bζ + cζ² + dζ³ from its images under ζ ↦ e^{iπ/6}, e^{5iπ/6}.
bool recover(cplx r1, cplx r5, Cyclo& out)
{
    long double m[4][5];
    for (int row = 0; row < 2; ++row) {
        int k = row == 0 ? 1 : 5;
        cplx r = row == 0 ? r1 : r5;
        for (int j = 0; j < 4; ++j) {
            long double th = std::numbers::pi_v<long double> * k * j / 6;
            m[2 * row][j] = std::cos(th);
            m[2 * row + 1][j] = std::sin(th);
        }
        m[2 * row][4] = r.real();
        m[2 * row + 1][4] = r.imag();
    }
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
        for (int k = 0; k < 5; ++k) std::swap(m[piv][k], m[col][k]);
        for (int r = 0; r < 4; ++r) {
            if (r == col) continue;
            long double f = m[r][col] / m[col][col];
            for (int k = col; k < 5; ++k) m[r][k] -= f * m[col][k];
        }
    }
    Rat c[4];
    for (int j = 0; j < 4; ++j)
        if (!rationalize(m[j][4] / m[j][j], c[j])) return false;
    out = Cyclo(c[0], c[1], c[2], c[3]);
    return true;
}

bool is_root(const CPoly& p, const Cyclo& x)
{
    Cyclo v;
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i) v = v * x + p[i];
    return v.is_zero();
}

} // namespace

CycloRoots cyclo_poly_roots(const std::vector<Cyclo>& coeffs)
{
    CPoly p = coeffs;
    trim(p);
    if (p.empty()) throw std::domain_error("roots of the zero polynomial");
    CycloRoots out;
    const int deg = static_cast<int>(p.size()) - 1;
    if (deg == 0) return out;

    CPoly dp;
    for (std::size_t i = 1; i < p.size(); ++i) dp.push_back(p[i] * Rat(static_cast<long>(i)));
    CPoly sq = divmod(p, gcd(p, dp)).first;

    std::vector<Cyclo> cands;
    const long dsq = static_cast<long>(sq.size()) - 1;
    if (dsq == 1) {
        cands.push_back(-(sq[0] / sq[1]));
    } else if (dsq > 1) {
        std::vector<cplx> a1, a5;
        for (const auto& c : sq) {
            a1.push_back(embed(c, 1));
            a5.push_back(embed(c, 5));
        }
        auto z1 = numeric_roots(a1), z5 = numeric_roots(a5);
        for (auto r1 : z1) {
            for (auto r5 : z5) {
                Cyclo x;
                if (!recover(r1, r5, x) || !is_root(sq, x)) continue;
                bool dup = false;
                for (auto& c : cands) dup = dup || c == x;
                if (!dup) cands.push_back(x);
            }
        }
    }
    int found = 0;
    for (const auto& x : cands) {
        if (!x.in_session_field()) continue;
        int mult = 0;
        CPoly rest = p;
        while (true) {
            auto [q, r] = divmod(rest, CPoly{-x, Cyclo(1)});
            if (!r.empty()) break;
            ++mult;
            rest = q;
        }
        out.roots.emplace_back(x, mult);
        found += mult;
    }
    out.unrepresentable = deg - found;
    return out;
}

} // namespace hc
