#include "hc/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace hc {

Series SeriesPoly::eval(const Series& x) const
{
    Series acc;
    for (long i = degree(); i >= 0; --i) acc = acc * x + c[i];
    return acc;
}

Series SeriesPoly::eval_capped(const Series& x, const Rat& cap) const
{
    Series acc = Series::big_o(cap);
    for (long i = degree(); i >= 0; --i) acc = (acc * x + c[i]).truncated(cap);
    return acc;
}

SeriesPoly SeriesPoly::derivative() const
{
    SeriesPoly d;
    for (long i = 1; i <= degree(); ++i) d.c.push_back(c[i] * Series(i));
    return d;
}

SeriesPoly SeriesPoly::taylor_shift(const Series& y) const
{
    std::vector<Series> r;
    for (long i = degree(); i >= 0; --i) {
        std::vector<Series> next(r.size() + 1);
        for (std::size_t k = 0; k < r.size(); ++k) {
            next[k + 1] += r[k];
            next[k] += r[k] * y;
        }
        next[0] += c[i];
        r = std::move(next);
    }
    return SeriesPoly(std::move(r));
}

SeriesPoly SeriesPoly::scale_root(const Rat& v) const
{
    SeriesPoly s = *this;
    for (long i = 0; i <= degree(); ++i) s.c[i] = c[i].shifted(v * i);
    return s;
}

void SeriesPoly::trim()
{
    while (!c.empty() && c.back().is_exact_zero()) c.pop_back();
}

SeriesPoly poly_add(const SeriesPoly& a, const SeriesPoly& b)
{
    SeriesPoly r = a.c.size() >= b.c.size() ? a : b;
    const SeriesPoly& o = a.c.size() >= b.c.size() ? b : a;
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

SeriesPoly poly_mul(const SeriesPoly& a, const SeriesPoly& b)
{
    if (a.c.empty() || b.c.empty()) return {};
    SeriesPoly r(std::vector<Series>(a.c.size() + b.c.size() - 1));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
}

SeriesPoly poly_pow(const SeriesPoly& a, unsigned k)
{
    SeriesPoly r({Series(1)});
    for (unsigned i = 0; i < k; ++i) r = poly_mul(r, a);
    return r;
}

SeriesPoly poly_scale(const SeriesPoly& a, const Series& s)
{
    SeriesPoly r = a;
    for (auto& x : r.c) x *= s;
    return r;
}

std::vector<PolygonSegment> newton_polygon(const SeriesPoly& p)
{
    const long n = p.degree();
    if (n < 0) throw std::domain_error("Newton polygon of the zero polynomial");
    if (!p.c[n].has_support()) throw PrecisionError("coefficient valuations unknown at precision: leading coefficient is zero to its precision");
    struct Pt {
        long i;
        Rat v;
    };
    std::vector<Pt> pts;
    for (long i = 0; i <= n; ++i)
        if (p.c[i].has_support()) pts.push_back({i, p.c[i].val()});
    if (pts.empty()) return {};
    std::vector<Pt> hull;
    for (const auto& q : pts) {
        while (hull.size() >= 2) {
            const Pt& a = hull[hull.size() - 2];
            const Pt& b = hull.back();
            // drop b if it lies on or above the chord a–q
            if ((b.v - a.v) * (q.i - a.i) >= (q.v - a.v) * (b.i - a.i))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(q);
    }
    auto hull_at = [&](long i) {
        for (std::size_t k = 0; k + 1 < hull.size(); ++k)
            if (hull[k].i <= i && i <= hull[k + 1].i)
                return Rat(hull[k].v + (hull[k + 1].v - hull[k].v) * Rat(i - hull[k].i, hull[k + 1].i - hull[k].i));
        return hull.front().v;
    };
    for (long i = 0; i <= n; ++i) {
        const Series& s = p.c[i];
        if (s.has_support() || s.is_exact()) continue;
        if (i < pts.front().i || *s.trunc() <= hull_at(i))
            throw PrecisionError("coefficient valuations unknown at precision: degree " + std::to_string(i) + " coefficient is O(t^" + to_string(*s.trunc()) + ")");
    }
    std::vector<PolygonSegment> segs;
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
        PolygonSegment s;
        s.from = hull[k].i;
        s.to = hull[k + 1].i;
        s.length = s.to - s.from;
        s.valuation = -(hull[k + 1].v - hull[k].v) / Rat(s.length);
        s.valuation.canonicalize();
        segs.push_back(s);
    }
    return segs;
}

int PuiseuxResult::unrepresentable_count() const
{
    int n = 0;
    for (const auto& u : unrepresentable) n += u.second;
    return n;
}

namespace {

Series exact_part(const Series& s, const Rat& limit)
{
    Series r;
    for (const auto& [x, c] : s.terms())
        if (x < limit) r += Series::monomial(c, x);
    return r;
}

// q normalized so that every coefficient has valuation >= 0 and y is a simple
// root of the reduction; lifts y to a root known to absolute order T.
Series newton_simple(const SeriesPoly& q, const Cyclo& y, const Rat& T)
{
    SeriesPoly dq = q.derivative();
    Series x(y);
    bool exact = std::all_of(q.c.begin(), q.c.end(), [](const Series& s) { return s.is_exact(); });
    if (exact && q.eval(x).is_exact_zero()) return x;
    for (int it = 0; it < 200; ++it) {
        Series r = q.eval_capped(x, T);
        if (r.is_zero_below(T)) return x.truncated(T);
        if (!r.has_support()) return x.truncated(*r.trunc());
        Series d = dq.eval_capped(x, T);
        if (!d.has_support() || d.val() != 0) throw std::domain_error("Newton lifting lost simplicity of a branch");
        Series delta = r / d;
        Rat lim = delta.trunc() ? std::min(T, *delta.trunc()) : T;
        Series nx = exact_part(x - delta, lim);
        if (nx == x) return x.truncated(lim);
        x = nx;
    }
    throw std::domain_error("Newton lifting did not converge");
}

constexpr int kMaxLiftDepth = 64;

void solve(const SeriesPoly& p0, const Rat& T, int depth, bool positive_only, const std::optional<Rat>& only, PuiseuxResult& res,
           std::vector<Series>& out)
{
    SeriesPoly p = p0;
    p.trim();
    long z = 0;
    while (z < p.degree() && p.c[z].is_exact_zero()) ++z;
    if (!only)
        for (long k = 0; k < z; ++k) out.push_back(Series());
    // constant known only as O(t^r): if the hull still isolates one root beyond the
    // others, that root is zero to order r − val(c1)
    while (z < p.degree() && !p.c[z].has_support() && p.c[z + 1].has_support()) {
        const Rat v1 = p.c[z + 1].val();
        const Rat r0 = *p.c[z].trunc() - v1;
        bool isolated = true;
        for (long k = z + 2; k <= p.degree(); ++k)
            if (p.c[k].has_support() && (v1 - p.c[k].val()) / (k - z - 1) >= r0) isolated = false;
        if (!isolated) break;
        out.push_back(Series::big_o(std::min(r0, T)));
        ++z;
    }
    SeriesPoly pr(std::vector<Series>(p.c.begin() + z, p.c.end()));

    std::vector<PolygonSegment> segs;
    try {
        segs = newton_polygon(pr);
    } catch (const PrecisionError& e) {
        if (depth == 0) throw;
        throw PrecisionError(std::string("repeated root not resolvable at precision (") + e.what() + ")");
    }
    for (const auto& seg : segs) {
        if (positive_only && seg.valuation <= 0) continue;
        if (only && seg.valuation != *only) continue;
        const Rat& v = seg.valuation;
        SeriesPoly q = pr.scale_root(v);
        Rat m;
        bool first = true;
        for (const auto& s : q.c)
            if (s.has_support() && (first || s.val() < m)) {
                m = s.val();
                first = false;
            }
        for (auto& s : q.c) s = s.shifted(-m);
        std::vector<Cyclo> ch(static_cast<std::size_t>(seg.length + 1));
        for (long i = seg.from; i <= seg.to; ++i)
            if (q.c[i].has_support() && q.c[i].val() == 0) ch[i - seg.from] = q.c[i].lead();
        CycloRoots cr = cyclo_poly_roots(ch);
        if (cr.unrepresentable) res.unrepresentable.emplace_back(v, cr.unrepresentable);
        const Rat Ty = T - v;
        for (const auto& [y, mu] : cr.roots) {
            if (mu == 1) {
                out.push_back(newton_simple(q, y, Ty).shifted(v));
                continue;
            }
            if (depth >= kMaxLiftDepth) throw PrecisionError("repeated root not resolvable at precision");
            std::vector<Series> sub;
            solve(q.taylor_shift(Series(y)), Ty, depth + 1, true, std::nullopt, res, sub);
            for (const auto& s : sub) out.push_back((Series(y) + s).truncated(Ty).shifted(v));
        }
    }
}

} // namespace

PuiseuxResult puiseux_roots(const SeriesPoly& p, const Rat& target_prec, const std::optional<Rat>& only_valuation)
{
    PuiseuxResult res;
    solve(p, target_prec, 0, false, only_valuation, res, res.roots);
    return res;
}

} // namespace hc
