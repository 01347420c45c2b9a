#pragma once

#include "hc/cyclo.hpp"
#include "hc/rational.hpp"
#include "hc/session.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hc {

/// Raised when a result cannot be certified at the current precision.
struct PrecisionError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Truncated Puiseux series in t over Q(ζ12), with precision bookkeeping.
///
/// Stores coefficients densely for exponents k/e, k = lo, lo+1, … .
/// An exact series has no truncation; otherwise terms at or beyond trunc()
/// are unknown.  Exact expansions that do not terminate (inverses, roots)
/// are cut at working_prec().
class Series {
public:
    Series() = default; // exact zero
    Series(long n);
    Series(const Rat& r);
    Series(const Cyclo& c);

    static Series monomial(const Cyclo& c, const Rat& exponent);
    static Series t_pow(const Rat& exponent) { return monomial(Cyclo(1), exponent); }
    /// O(t^r): no known terms.
    static Series big_o(const Rat& r);

    long ram() const { return e_; }
    bool is_exact() const { return exact_; }
    /// Truncation order; nullopt for exact series.
    std::optional<Rat> trunc() const;
    bool has_support() const { return !c_.empty(); }
    bool is_exact_zero() const { return exact_ && c_.empty(); }
    /// Empty support: exact zero or zero to the known precision.
    bool is_zero_to_prec() const { return c_.empty(); }
    /// True if every coefficient below r is zero and all of them are known.
    bool is_zero_below(const Rat& r) const;
    bool is_monomial() const { return exact_ && c_.size() == 1; }

    /// Minimal exponent of the support; throws on empty support.
    Rat val() const;
    /// val() for nonempty support, else the truncation bound (throws on exact zero).
    Rat val_lower_bound() const;
    const Cyclo& lead() const;
    Cyclo coeff(const Rat& exponent) const;
    std::vector<std::pair<Rat, Cyclo>> terms() const;
    /// Highest exponent present, if any.
    std::optional<Rat> max_exponent() const;

    /// Drops everything at or beyond r and marks the series inexact there.
    Series truncated(const Rat& r) const;
    /// Multiplies by t^r.
    Series shifted(const Rat& r) const;
    /// t ↦ c·t, valid when all exponents are integers.
    Series scale_variable(const Cyclo& c) const;

    Series operator-() const;
    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Series& o);
    Series& operator/=(const Series& o);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const Series& b) { return a *= b; }
    friend Series operator/(Series a, const Series& b) { return a /= b; }

    Series inv() const;
    Series pow(long k) const;

    /// Structural equality: same terms and same precision state.
    bool operator==(const Series& o) const;
    bool operator!=(const Series& o) const { return !(*this == o); }

    std::string str() const;

    /// Multiplicative inverse known to absolute order target (used by division).
    Series inv_to(const Rat& target) const;

private:
    long e_ = 1;
    long lo_ = 0;
    std::vector<Cyclo> c_;
    bool exact_ = true;
    Rat trunc_ = 0;

    Series with_ram(long e) const;
    void normalize();
    long first_index_at_or_beyond(const Rat& r) const;
    friend Series mul_impl(const Series& a, const Series& b, const std::optional<Rat>& cap);
};

/// The precision at which a and b are known to agree: the minimal exponent
/// where they differ, capped by their truncations (nullopt when both exact
/// and equal).
std::optional<Rat> agreement_order(const Series& a, const Series& b);

/// All m-th roots of f lying in Q(ζ_N)((t^{1/e})).
std::vector<Series> series_root(const Series& f, unsigned m);

/// f(g) with f read as a series in an integer-exponent variable X.
Series series_compose(const Series& f, const Series& g);

/// g with f(g(X)) = X + O(X^order), f = X + higher terms.
Series series_reversion(const Series& f, long order);

/// Runs f, raising the working precision and retrying while it throws
/// PrecisionError (up to `extra` above the current setting).
template <class F>
auto with_precision_retry(F&& f, long extra = 256)
{
    const Rat base = working_prec();
    long margin = 0;
    while (true) {
        try {
            PrecisionGuard g(base + margin);
            return f();
        } catch (const PrecisionError&) {
            if (margin >= extra) throw;
            margin = margin ? 2 * margin : 8;
        }
    }
}

/// Parses the series literal grammar.
Series parse_series(const std::string& text);

} // namespace hc
