#include "hc/series.hpp"

#include "hc/session.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace hc {

namespace {

long ceil_times(const Rat& r, long e) { return to_long(ceil_rat(r * e)); }

Rat min_opt(const std::optional<Rat>& a, const Rat& b) { return a ? std::min(*a, b) : b; }

} // namespace

Series::Series(long n) : Series(Cyclo(n)) {}
Series::Series(const Rat& r) : Series(Cyclo(r)) {}
Series::Series(const Cyclo& c)
{
    if (!c.is_zero()) c_.push_back(c);
}

Series Series::monomial(const Cyclo& c, const Rat& exponent)
{
    Series s;
    if (c.is_zero()) return s;
    Rat x = exponent;
    x.canonicalize();
    s.e_ = to_long(Int(x.get_den()));
    s.lo_ = to_long(Int(x.get_num()));
    s.c_.push_back(c);
    return s;
}

Series Series::big_o(const Rat& r)
{
    Series s;
    s.exact_ = false;
    s.trunc_ = r;
    return s;
}

std::optional<Rat> Series::trunc() const
{
    if (exact_) return std::nullopt;
    return trunc_;
}

Rat Series::val() const
{
    if (c_.empty()) throw std::domain_error("valuation of a series with no known terms");
    return make_rat(lo_, e_);
}

Rat Series::val_lower_bound() const
{
    if (!c_.empty()) return val();
    if (exact_) throw std::domain_error("valuation of exact zero");
    return trunc_;
}

const Cyclo& Series::lead() const
{
    if (c_.empty()) throw std::domain_error("leading coefficient of a series with no known terms");
    return c_.front();
}

Cyclo Series::coeff(const Rat& exponent) const
{
    if (!exact_ && exponent >= trunc_) throw std::domain_error("coefficient beyond known precision");
    Rat k = exponent * e_;
    if (k.get_den() != 1) return Cyclo();
    long idx = to_long(Int(k.get_num())) - lo_;
    if (idx < 0 || idx >= static_cast<long>(c_.size())) return Cyclo();
    return c_[idx];
}

std::vector<std::pair<Rat, Cyclo>> Series::terms() const
{
    std::vector<std::pair<Rat, Cyclo>> out;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) out.emplace_back(Rat(lo_ + static_cast<long>(i), e_), c_[i]);
    for (auto& p : out) p.first.canonicalize();
    return out;
}

std::optional<Rat> Series::max_exponent() const
{
    if (c_.empty()) return std::nullopt;
    Rat r(lo_ + static_cast<long>(c_.size()) - 1, e_);
    r.canonicalize();
    return r;
}

bool Series::is_zero_below(const Rat& r) const
{
    if (!c_.empty() && val() < r) return false;
    return exact_ || trunc_ >= r;
}

long Series::first_index_at_or_beyond(const Rat& r) const { return ceil_times(r, e_); }

void Series::normalize()
{
    if (!exact_) {
        long lim = first_index_at_or_beyond(trunc_);
        long keep = std::max(0L, std::min<long>(static_cast<long>(c_.size()), lim - lo_));
        c_.resize(keep);
    }
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        lo_ += static_cast<long>(lead);
    }
    if (c_.empty()) {
        lo_ = 0;
        e_ = 1;
        return;
    }
    long g = e_;
    for (std::size_t i = 0; i < c_.size() && g > 1; ++i)
        if (!c_[i].is_zero()) g = std::gcd(g, lo_ + static_cast<long>(i));
    if (g > 1) {
        std::vector<Cyclo> nc;
        nc.reserve(c_.size() / g + 1);
        for (std::size_t i = 0; i < c_.size(); i += g) nc.push_back(c_[i]);
        c_ = std::move(nc);
        lo_ /= g;
        e_ /= g;
    }
}

Series Series::with_ram(long e) const
{
    if (e == e_) return *this;
    long f = e / e_;
    Series s = *this;
    s.e_ = e;
    s.lo_ = lo_ * f;
    s.c_.assign(c_.empty() ? 0 : (c_.size() - 1) * f + 1, Cyclo());
    for (std::size_t i = 0; i < c_.size(); ++i) s.c_[i * f] = c_[i];
    return s;
}

Series Series::truncated(const Rat& r) const
{
    if (!exact_ && trunc_ <= r) return *this;
    Series s = *this;
    s.exact_ = false;
    s.trunc_ = r;
    s.normalize();
    return s;
}

Series Series::shifted(const Rat& r) const
{
    if (c_.empty()) return exact_ ? *this : big_o(trunc_ + r);
    long e = std::lcm(e_, to_long(Int(r.get_den())));
    Series s = with_ram(e);
    s.lo_ += to_long(Int(Rat(r * e).get_num()));
    if (!exact_) s.trunc_ += r;
    s.normalize();
    return s;
}

Series Series::scale_variable(const Cyclo& c) const
{
    if (e_ != 1) throw std::domain_error("scale_variable requires integer exponents");
    Series s = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) s.c_[i] *= c.pow(lo_ + static_cast<long>(i));
    return s;
}

Series Series::operator-() const
{
    Series s = *this;
    for (auto& c : s.c_) c = -c;
    return s;
}

Series& Series::operator+=(const Series& o)
{
    long e = std::lcm(e_, o.e_);
    Series a = with_ram(e), b = o.with_ram(e);
    if (a.c_.empty()) {
        a.lo_ = b.lo_;
    } else if (!b.c_.empty() && b.lo_ < a.lo_) {
        a.c_.insert(a.c_.begin(), static_cast<std::size_t>(a.lo_ - b.lo_), Cyclo());
        a.lo_ = b.lo_;
    }
    std::size_t need = b.c_.empty() ? 0 : static_cast<std::size_t>(b.lo_ - a.lo_) + b.c_.size();
    if (a.c_.size() < need) a.c_.resize(need);
    for (std::size_t i = 0; i < b.c_.size(); ++i) a.c_[b.lo_ - a.lo_ + static_cast<long>(i)] += b.c_[i];
    if (!b.exact_) {
        a.trunc_ = a.exact_ ? b.trunc_ : std::min(a.trunc_, b.trunc_);
        a.exact_ = false;
    }
    a.normalize();
    return *this = std::move(a);
}

Series& Series::operator-=(const Series& o) { return *this += -o; }

Series mul_impl(const Series& a, const Series& b, const std::optional<Rat>& cap)
{
    if (a.is_exact_zero() || b.is_exact_zero()) return Series();
    std::optional<Rat> t = cap;
    if (!a.exact_) t = min_opt(t, a.trunc_ + b.val_lower_bound());
    if (!b.exact_) t = min_opt(t, b.trunc_ + a.val_lower_bound());
    long e = std::lcm(a.e_, b.e_);
    Series x = a.with_ram(e), y = b.with_ram(e);
    Series r;
    r.e_ = e;
    r.lo_ = x.lo_ + y.lo_;
    if (t) {
        r.exact_ = false;
        r.trunc_ = *t;
    }
    if (!x.c_.empty() && !y.c_.empty()) {
        long n = static_cast<long>(x.c_.size() + y.c_.size() - 1);
        if (t) n = std::min(n, ceil_times(*t, e) - r.lo_);
        if (n > 0) {
            r.c_.assign(static_cast<std::size_t>(n), Cyclo());
            for (long i = 0; i < static_cast<long>(x.c_.size()) && i < n; ++i) {
                if (x.c_[i].is_zero()) continue;
                long jmax = std::min<long>(static_cast<long>(y.c_.size()), n - i);
                for (long j = 0; j < jmax; ++j)
                    if (!y.c_[j].is_zero()) r.c_[i + j] += x.c_[i] * y.c_[j];
            }
        }
    }
    r.normalize();
    return r;
}

Series& Series::operator*=(const Series& o) { return *this = mul_impl(*this, o, std::nullopt); }

Series Series::inv_to(const Rat& target) const
{
    if (c_.empty())
    {
        if (exact_) throw std::domain_error("inversion of zero");
        throw PrecisionError("insufficient precision: divisor is zero to O(t^" + to_string(trunc_) + ")");
    }
    Rat v = val();
    if (is_monomial()) return monomial(c_[0].inv(), -v);
    Rat t = exact_ ? target : std::min(target, Rat(trunc_ - 2 * v));
    Series r;
    r.e_ = e_;
    r.lo_ = -lo_;
    r.exact_ = false;
    r.trunc_ = t;
    long n = ceil_times(t, e_) - r.lo_;
    if (n > 0) {
        Cyclo g0inv = c_[0].inv();
        r.c_.assign(static_cast<std::size_t>(n), Cyclo());
        r.c_[0] = g0inv;
        for (long k = 1; k < n; ++k) {
            Cyclo s;
            long imax = std::min<long>(k, static_cast<long>(c_.size()) - 1);
            for (long i = 1; i <= imax; ++i)
                if (!c_[i].is_zero()) s += c_[i] * r.c_[k - i];
            r.c_[k] = -(g0inv * s);
        }
    }
    r.normalize();
    return r;
}

Series Series::inv() const
{
    if (!exact_ && !c_.empty()) return inv_to(trunc_ - 2 * val());
    return inv_to(working_prec());
}

Series& Series::operator/=(const Series& o)
{
    if (is_exact_zero()) {
        if (o.c_.empty()) throw std::domain_error("division by zero");
        return *this;
    }
    if (o.is_monomial()) return *this *= o.inv();
    if (o.exact_) return *this *= o.inv_to(working_prec() - val_lower_bound());
    return *this *= o.inv();
}

Series Series::pow(long k) const
{
    if (k < 0) return pow(-k).inv();
    Series r(1), base = *this;
    while (k) {
        if (k & 1) r *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return r;
}

bool Series::operator==(const Series& o) const
{
    if (exact_ != o.exact_) return false;
    if (!exact_ && trunc_ != o.trunc_) return false;
    return e_ == o.e_ && lo_ == o.lo_ && c_ == o.c_;
}

namespace {

std::string exponent_text(const Rat& x, bool force_parens)
{
    if (!force_parens && x.get_den() == 1 && x > 0) return to_string(x);
    return "(" + to_string(x) + ")";
}

} // namespace

std::string Series::str() const
{
    std::string out;
    for (const auto& [x, c] : terms()) {
        auto coords = c.session_coords();
        for (std::size_t i = 0; i < coords.size(); ++i) {
            const Rat& r = coords[i];
            if (sgn(r) == 0) continue;
            if (out.empty())
                out = sgn(r) < 0 ? "-" : "";
            else
                out += sgn(r) < 0 ? " - " : " + ";
            std::vector<std::string> parts;
            Rat m = abs(r);
            bool bare = i == 0 && sgn(x) == 0;
            if (m != 1 || bare) parts.push_back(m.get_den() == 1 ? to_string(m) : "(" + to_string(m) + ")");
            if (i == 1) parts.push_back("z");
            if (i > 1) parts.push_back("z^" + std::to_string(i));
            if (x == 1)
                parts.push_back("t");
            else if (sgn(x) != 0)
                parts.push_back("t^" + exponent_text(x, false));
            for (std::size_t p = 0; p < parts.size(); ++p) out += (p ? "*" : "") + parts[p];
        }
    }
    if (!exact_) out += (out.empty() ? "" : " + ") + std::string("O(t^") + exponent_text(trunc_, true) + ")";
    return out.empty() ? "0" : out;
}

std::optional<Rat> agreement_order(const Series& a, const Series& b)
{
    Series d = a - b;
    if (d.has_support()) return d.val();
    return d.trunc();
}

std::vector<Series> series_root(const Series& f, unsigned m)
{
    if (m == 0) throw std::invalid_argument("root order must be positive");
    if (!f.has_support()) {
        if (f.is_exact()) throw std::domain_error("root of exact zero");
        throw PrecisionError("insufficient precision: root of a series with no known terms");
    }
    Rat v = f.val();
    auto rk = f.lead().as_root_of_unity_multiple();
    if (!rk) throw std::domain_error("leading coefficient " + f.lead().str() + " is not a rational multiple of a root of unity");
    Rat rr;
    if (!rational_root(rk->first, m, rr))
        throw std::domain_error("leading coefficient " + f.lead().str() + " has no rational " + std::to_string(m) + "-th root modulus");
    // Q(zeta3) = Q(zeta6) holds all sixth roots of unity.
    int step = session().zeta_order == 12 ? 1 : 2;
    std::vector<int> ls;
    for (int l = 0; l < 12; l += step)
        if ((static_cast<long>(l) * m) % 12 == rk->second) ls.push_back(l);
    if (ls.empty())
        throw std::domain_error("leading coefficient " + f.lead().str() + " has no " + std::to_string(m) + "-th root in Q(zeta_" + std::to_string(session().zeta_order) + ")");

    Rat w = v / m;
    Series unit;
    if (f.is_monomial()) {
        unit = Series(1);
    } else {
        Series p = f * Series::monomial(f.lead().inv(), -v);
        Rat rel = f.is_exact() ? working_prec() - w : *f.trunc() - v;
        long e = p.ram();
        long n = to_long(ceil_rat(rel * e));
        std::vector<Cyclo> pc(static_cast<std::size_t>(std::max(n, 1L)));
        for (long k = 0; k < n; ++k) {
            Rat x(k, e);
            x.canonicalize();
            pc[k] = p.coeff(x);
        }
        Rat alpha(1, m);
        std::vector<Cyclo> q(pc.size());
        q[0] = Cyclo(1);
        for (long k = 1; k < n; ++k) {
            Cyclo s;
            for (long i = 1; i <= k; ++i) {
                if (pc[i].is_zero()) continue;
                s += pc[i] * q[k - i] * Rat((alpha + 1) * i - k);
            }
            q[k] = s * Rat(Rat(1) / k);
        }
        unit = Series::big_o(rel);
        for (long k = 0; k < n; ++k)
            if (!q[k].is_zero()) unit += Series::monomial(q[k], Rat(k, e));
    }
    std::vector<Series> out;
    for (int l : ls) out.push_back(unit * Series::monomial(Cyclo::zeta12(l) * rr, w));
    return out;
}

Series series_compose(const Series& f, const Series& g)
{
    if (!g.has_support() || g.val() <= 0) throw std::domain_error("composition needs an inner series of positive valuation");
    if (f.is_exact_zero()) return f;
    if (f.has_support() && f.ram() != 1) throw std::domain_error("composition needs integer exponents in the outer series");
    Rat vg = g.val();
    std::optional<Rat> cap;
    if (!f.is_exact()) cap = *f.trunc() * vg;
    Series result = cap ? Series::big_o(*cap) : Series();
    if (!f.has_support()) return result;
    long lo = to_long(Int(f.val().get_num()));
    long hi = to_long(Int(f.max_exponent()->get_num()));
    Series pw(1);
    long pw_exp = 0;
    for (long k = lo; k <= hi; ++k) {
        Cyclo c = f.coeff(Rat(k));
        if (c.is_zero()) continue;
        Series term;
        if (k < 0) {
            term = g.pow(k);
        } else {
            while (pw_exp < k) {
                pw *= g;
                ++pw_exp;
                if (cap) pw = pw.truncated(*cap);
            }
            term = pw;
        }
        result += term * Series(c);
    }
    return cap ? result.truncated(*cap) : result;
}

Series series_reversion(const Series& f, long order)
{
    if (!f.has_support() || f.val() != 1) throw std::domain_error("reversion needs a series of valuation 1");
    if (f.lead().is_zero()) throw std::domain_error("leading coefficient not a unit");
    Cyclo cinv = f.lead().inv();
    Series X = Series::t_pow(1);
    Series g = Series::monomial(cinv, 1).truncated(order);
    for (long it = 0; it <= order + 1; ++it) {
        Series r = series_compose(f, g) - X;
        if (r.is_zero_below(order)) return g;
        g = (g - r * Series(cinv)).truncated(order);
    }
    throw std::domain_error("reversion failed to converge");
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Series parse()
    {
        Series r = expr();
        skip();
        if (pos_ < s_.size()) fail("unexpected token");
        return r;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const
    {
        std::string tok = pos_ < s_.size() ? s_.substr(pos_, 1) : "end of input";
        throw std::invalid_argument(msg + " '" + tok + "' at position " + std::to_string(pos_) + " in series literal");
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) fail(std::string("expected '") + c + "', found");
    }

    Int integer()
    {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer, found");
        return Int(s_.substr(start, pos_ - start));
    }

    Rat exponent()
    {
        if (accept('(')) {
            int sign = 1;
            if (accept('-'))
                sign = -1;
            else
                accept('+');
            Rat r(integer());
            if (accept('/')) {
                Int d = integer();
                if (d == 0) fail("zero denominator before");
                r /= Rat(d);
            }
            expect(')');
            r.canonicalize();
            return sign * r;
        }
        if (accept('-')) return -Rat(integer());
        return Rat(integer());
    }

    Series expr()
    {
        Series r;
        bool neg = accept('-');
        if (!neg) accept('+');
        r = term();
        if (neg) r = -r;
        while (true) {
            if (accept('+'))
                r += term();
            else if (accept('-'))
                r -= term();
            else
                return r;
        }
    }

    Series term()
    {
        Series r = factor();
        while (true) {
            if (accept('*'))
                r *= factor();
            else if (accept('/'))
                r /= factor();
            else
                return r;
        }
    }

    Series factor()
    {
        Series base = atom();
        if (!accept('^')) return base;
        std::size_t at = pos_;
        Rat x = exponent();
        if (x.get_den() == 1) return base.pow(to_long(Int(x.get_num())));
        if (base.is_monomial() && base.lead() == Cyclo(1)) return Series::t_pow(base.val() * x);
        pos_ = at;
        fail("fractional power of a non-monomial at");
    }

    Series atom()
    {
        skip();
        if (pos_ >= s_.size()) fail("unexpected");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return Series(Rat(integer()));
        if (c == 't') {
            ++pos_;
            return Series::t_pow(1);
        }
        if (c == 'z') {
            ++pos_;
            return Series(Cyclo::zeta(1));
        }
        if (c == 'O') {
            ++pos_;
            expect('(');
            std::size_t at = pos_;
            Series inner = expr();
            expect(')');
            if (!inner.is_monomial() || inner.lead() != Cyclo(1)) {
                pos_ = at;
                fail("O() expects a power of t at");
            }
            return Series::big_o(inner.val());
        }
        if (c == '(') {
            ++pos_;
            Series r = expr();
            expect(')');
            return r;
        }
        fail("unexpected token");
    }
};

} // namespace

Series parse_series(const std::string& text) { return Parser(text).parse(); }

} // namespace hc
