#pragma once

#include "hc/series.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hc {

/// Univariate polynomial with Puiseux-series coefficients, index = degree.
struct SeriesPoly {
    std::vector<Series> c;

    SeriesPoly() = default;
    explicit SeriesPoly(std::vector<Series> coeffs) : c(std::move(coeffs)) {}

    long degree() const { return static_cast<long>(c.size()) - 1; }
    Series eval(const Series& x) const;
    /// Horner evaluation truncated at cap; requires nonnegative valuations.
    Series eval_capped(const Series& x, const Rat& cap) const;
    SeriesPoly derivative() const;
    /// p(X + y).
    SeriesPoly taylor_shift(const Series& y) const;
    /// p(t^v · X).
    SeriesPoly scale_root(const Rat& v) const;
    void trim();
};

SeriesPoly poly_add(const SeriesPoly& a, const SeriesPoly& b);
SeriesPoly poly_mul(const SeriesPoly& a, const SeriesPoly& b);
SeriesPoly poly_pow(const SeriesPoly& a, unsigned k);
SeriesPoly poly_scale(const SeriesPoly& a, const Series& s);

/// A lower-hull segment.  `valuation` is the common valuation of the roots it
/// accounts for (the negated slope of the hull segment); `length` counts them.
struct PolygonSegment {
    Rat valuation;
    long length = 0;
    long from = 0;
    long to = 0;
};

std::vector<PolygonSegment> newton_polygon(const SeriesPoly& p);

/// Roots of a polynomial with Q(ζ12) coefficients that lie in the session field.
struct CycloRoots {
    std::vector<std::pair<Cyclo, int>> roots; ///< value and multiplicity
    int unrepresentable = 0;                 ///< degree minus the multiplicities found
};
CycloRoots cyclo_poly_roots(const std::vector<Cyclo>& coeffs);

struct PuiseuxResult {
    std::vector<Series> roots;
    /// Roots whose initial coefficient leaves Q(ζ_N), with the branch valuation.
    std::vector<std::pair<Rat, int>> unrepresentable;
    int unrepresentable_count() const;
};

/// All roots of p to absolute precision target_prec, or only those of one valuation.
PuiseuxResult puiseux_roots(const SeriesPoly& p, const Rat& target_prec, const std::optional<Rat>& only_valuation = std::nullopt);

} // namespace hc
