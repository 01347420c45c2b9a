#include "hc/poly.hpp"
#include "hc/session.hpp"

#include <doctest.h>

using namespace hc;

namespace {

Series S(const char* s) { return parse_series(s); }

SeriesPoly mul(const SeriesPoly& a, const SeriesPoly& b)
{
    SeriesPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Series());
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
}

SeriesPoly pw(const SeriesPoly& a, int k)
{
    SeriesPoly r({Series(1)});
    for (int i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

// (48b^3 - 24b^2 + 1)^3 - iota * b^6 (2b-1)^3 (3b-1)^2 (6b+1)
SeriesPoly b_equation(const Series& iota)
{
    SeriesPoly num = pw(SeriesPoly({Series(1), Series(0), Series(-24), Series(48)}), 3);
    SeriesPoly den = mul(mul(pw(SeriesPoly({Series(0), Series(1)}), 6), pw(SeriesPoly({Series(-1), Series(2)}), 3)),
                         mul(pw(SeriesPoly({Series(-1), Series(3)}), 2), SeriesPoly({Series(1), Series(6)})));
    SeriesPoly r = num;
    r.c.resize(13);
    for (std::size_t i = 0; i < den.c.size(); ++i) r.c[i] -= iota * den.c[i];
    return r;
}

const char* kPublished =
    "t + t^2 - 5*t^3 - 7*t^4 + 30*t^5 + 43*t^6 - 60*t^7 - 15*t^8 - 731*t^9 - 1858*t^10 + 11676*t^11 + 22091*t^12 - 30612*t^13 + O(t^14)";

} // namespace

TEST_CASE("newton polygon examples")
{
    auto s1 = newton_polygon(SeriesPoly({S("-t"), Series(0), Series(1)}));
    REQUIRE(s1.size() == 1);
    CHECK(s1[0].valuation == make_rat(1, 2));
    CHECK(s1[0].length == 2);

    // (X - t)(X - t^2)
    auto s2 = newton_polygon(SeriesPoly({S("t^3"), S("-t - t^2"), Series(1)}));
    REQUIRE(s2.size() == 2);
    CHECK(s2[0].valuation == 2);
    CHECK(s2[1].valuation == 1);
    CHECK(s2[0].length + s2[1].length == 2);

    auto s3 = newton_polygon(b_equation(S("t^(-6)")));
    REQUIRE(s3.size() == 2);
    CHECK(s3[0].valuation == 1);
    CHECK(s3[0].length == 6);
    CHECK(s3[1].valuation == 0);
    CHECK(s3[1].length == 6);

    CHECK_THROWS(newton_polygon(SeriesPoly({S("O(t^(-1))"), Series(0), Series(1)})));
}

TEST_CASE("simple roots")
{
    auto r = puiseux_roots(SeriesPoly({S("-t"), Series(0), Series(1)}), 5);
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0] == S("t^(1/2)"));
    CHECK(r.roots[1] == S("-t^(1/2)"));

    auto c = puiseux_roots(SeriesPoly({Series(-1), Series(0), Series(0), Series(1)}), 5);
    REQUIRE(c.roots.size() == 3);
    for (const auto& x : c.roots) {
        CHECK(x.is_exact());
        CHECK(x.pow(3) == Series(1));
    }
}

TEST_CASE("repeated initial terms are separated by lifting")
{
    // (X - 1 - t)(X - 1 - t - t^3)(X + 2)
    SeriesPoly p = mul(mul(SeriesPoly({S("-1 - t"), Series(1)}), SeriesPoly({S("-1 - t - t^3"), Series(1)})),
                       SeriesPoly({Series(2), Series(1)}));
    auto r = puiseux_roots(p, 6);
    REQUIRE(r.roots.size() == 3);
    int hits = 0;
    for (const auto& x : r.roots) {
        CHECK(p.eval(x).is_zero_below(6));
        hits += x == S("1 + t + O(t^6)") || x == S("1 + t + t^3 + O(t^6)") || x == S("-2 + O(t^6)") || x == S("-2");
    }
    CHECK(hits == 3);
}

TEST_CASE("unrepresentable initial coefficients are reported")
{
    auto r = puiseux_roots(SeriesPoly({Series(-2), Series(0), Series(1)}), 4);
    CHECK(r.roots.empty());
    CHECK(r.unrepresentable_count() == 2);
}

TEST_CASE("b-expansion, rational branch")
{
    // With iota = -t^(-6) the val-1 branch with unit leading coefficient is the published series.
    auto r = puiseux_roots(b_equation(S("-t^(-6)")), 14);
    CHECK(r.roots.size() + r.unrepresentable_count() == 12);
    int val1 = 0;
    bool found = false;
    for (const auto& x : r.roots) {
        if (x.val() != 1) continue;
        ++val1;
        if (x.lead() == Cyclo(1)) found = x == S(kPublished);
    }
    CHECK(val1 == 6);
    CHECK(found);
}

TEST_CASE("b-expansion, iota = t^(-6) branches")
{
    auto r = puiseux_roots(b_equation(S("t^(-6)")), 14);
    Series pub = S(kPublished);
    int matched = 0;
    for (int k = 1; k < 12; k += 2) {
        Series expect = pub.scale_variable(Cyclo::zeta12(k));
        for (const auto& x : r.roots) matched += x == expect;
    }
    CHECK(matched == 6);
}
