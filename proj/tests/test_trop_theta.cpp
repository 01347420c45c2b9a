#include "hc/trop_theta.hpp"

#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace hc;

namespace {

Rat brute_min(const Rat& Q, const Rat& A, const Rat& X)
{
    Rat best;
    for (long m = -200; m <= 200; ++m) {
        Rat v = Rat(m * m - m) * Q / 2 + Rat(m) * (A - X);
        if (m == -200 || v < best) best = v;
    }
    return best;
}

using Seg = std::pair<Pt2, Pt2>;

std::set<Seg> edge_set(const TropicalCubicCurve& c)
{
    std::set<Seg> s;
    for (const auto& e : c.edges) {
        Pt2 a = c.vertices[e.from], b = c.vertices[e.to];
        if (b < a) std::swap(a, b);
        s.insert({a, b});
    }
    return s;
}

std::multiset<std::pair<Pt2, Dir2>> ray_set(const TropicalCubicCurve& c)
{
    std::multiset<std::pair<Pt2, Dir2>> s;
    for (const auto& r : c.rays)
        for (long k = 0; k < r.mult; ++k) s.insert({c.vertices[r.base], r.dir});
    return s;
}

TropPoint tp(const Rat& h, int id = 0, const Rat& d = Rat(0))
{
    TropPoint p;
    p.hex = h;
    p.id = id;
    p.dist = d;
    return p;
}

} // namespace

TEST_CASE("tropical theta closed form agrees with the series and a brute-force minimum")
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> num(-80, 80), den(1, 4);
    for (const Rat Q : {Rat(1), Rat(6), make_rat(5, 2)}) {
        TropThetaEnv env{Q};
        for (int i = 0; i < 100; ++i) {
            const Rat A = make_rat(num(rng), den(rng)), X = make_rat(num(rng), den(rng));
            const auto v = trop_theta_eval(env, A, X);
            CHECK(v.value == brute_min(Q, A, X));
            CHECK(v.value == trop_theta_sum(env, A, X));
            CHECK(v.value == Rat(v.m * v.m - v.m) * Q / 2 + Rat(v.m) * (A - X));
        }
    }
    CHECK(trop_theta_eval({Rat(6)}, Rat(0), Rat(0)).value == 0);
    CHECK(trop_theta_eval({Rat(6)}, Rat(0), Rat(-1)).value == 0);
    CHECK(trop_theta_eval({Rat(6)}, Rat(0), Rat(7)).value == -8); // m = 2
    CHECK_THROWS_AS(trop_theta_eval({Rat(0)}, Rat(0), Rat(0)), std::domain_error);
}

TEST_CASE("delta examples and errors")
{
    const Series q = Series::t_pow(Rat(6));
    CHECK(delta(Series(1) + Series::t_pow(Rat(2)), Series(1), q) == 2);
    CHECK(delta(Series::t_pow(Rat(6)) * (Series(1) + Series::t_pow(make_rat(1, 2))), Series(1), q) == make_rat(1, 2));
    CHECK(delta(Series(3), Series(1), q) == 0);
    CHECK_THROWS_AS(delta(Series::t_pow(Rat(1)), Series(1), q), std::domain_error);
    CHECK_THROWS_AS(delta(Series(2), Series(2), q), PrecisionError);

    // among three points with equal V the minimum of the pairwise δ is attained twice
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> c(1, 3), e(1, 8);
    for (int i = 0; i < 60; ++i) {
        auto pt = [&] { return Series(1) + Series(Rat(c(rng))) * Series::t_pow(make_rat(e(rng), 4)) + Series::t_pow(Rat(3)) * Series(Rat(c(rng))); };
        const Series x = pt(), y = pt() * q, z = pt() * q.inv();
        try {
            std::vector<Rat> d = {delta(x, y, q), delta(y, z, q), delta(x, z, q)};
            std::sort(d.begin(), d.end());
            CHECK(d[0] == d[1]);
        } catch (const PrecisionError&) {
            // coincident draws
        }
    }
}

TEST_CASE("theta valuation gap is delta")
{
    PrecisionGuard g(16);
    const Series q = Series::t_pow(Rat(6));
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<long> c(1, 4), e(1, 12);
    for (int i = 0; i < 30; ++i) {
        const Series a = Series::t_pow(make_rat(e(rng), 4)) * Series(Rat(c(rng)));
        // x with V(x) = V(a) (half the time), otherwise generic
        Series x = i % 2 ? a * (Series(1) + Series::t_pow(make_rat(e(rng), 4))) * q.pow(c(rng) % 2)
                         : Series::t_pow(make_rat(e(rng), 4) + make_rat(1, 8)) * Series(Rat(c(rng)));
        const GapCheck gc = theta_gap_check(a, x, q);
        CHECK(gc.residual == 0);
    }
}

TEST_CASE("two routes to the tropical curve agree")
{
    PrecisionGuard g(12);
    std::vector<ThetaParams> cases = {symmetric_example_params(Rat(6), make_rat(1, 2))};
    std::mt19937_64 rng(17);
    cases.push_back(testing::random_honeycomb_params(rng, false));
    for (const auto& P : cases) {
        const TropicalCubicCurve a = trop_parametrize(P);
        const TropicalCubicCurve b = tropicalize_cubic(implicitize(P));
        CHECK(std::set<Pt2>(a.vertices.begin(), a.vertices.end()) == std::set<Pt2>(b.vertices.begin(), b.vertices.end()));
        CHECK(edge_set(a) == edge_set(b));
        CHECK(ray_set(a) == ray_set(b));
        for (const auto& e : a.edges) CHECK(e.mult == 1);
        REQUIRE(a.hexagon);
        Rat total = 0;
        for (const auto& l : a.hexagon->ell) total += l;
        CHECK(total == P.q.val());
    }
}

TEST_CASE("symmetric example: circle coordinates and retractions")
{
    const ThetaParams P = symmetric_example_params(Rat(6), make_rat(1, 2));
    const TropParametrization T = trop_parametrization(P);
    std::set<Rat> pos(T.hex_pos.begin(), T.hex_pos.end());
    CHECK(pos == std::set<Rat>{0, 1, 2, 3, 4, 5});
    for (int k = 0; k < 6; ++k) CHECK(T.curve.hexagon->ell[k] == 1);
    const int k3 = T.vertex_at(T.r[2]);
    REQUIRE(k3 >= 0);
    CHECK(T.segment[k3] == make_rat(1, 2));

    const Series& p3 = P.p[2];
    CHECK(retract(p3 * (Series(1) + Series::t_pow(Rat(1))), P, T) == tp(T.r[2], 3, Rat(1)));
    CHECK(retract(p3 * (Series(1) + Series(2) * Series::t_pow(make_rat(1, 4))), P, T) == tp(T.r[2], 3, make_rat(1, 4)));
    CHECK(retract(P.p[3] * (Series(1) + Series::t_pow(Rat(2))), P, T) == tp(T.r[3], 4, Rat(2)));
    CHECK(retract(Series(2), P, T) == tp(Rat(0)));
    CHECK(retract(Series(1) + Series::t_pow(Rat(1)), P, T) == tp(Rat(0), 2, Rat(1)));
    CHECK(retract(Series::t_pow(make_rat(1, 2)), P, T) == tp(make_rat(1, 2)));
    // q-periodic
    CHECK(retract(P.q * (Series(1) + Series::t_pow(Rat(1))), P, T) == tp(Rat(0), 2, Rat(1)));
}

TEST_CASE("theta map tropicalizes to the embedded retraction")
{
    PrecisionGuard g(16);
    std::mt19937_64 rng(23);
    std::vector<ThetaParams> cases = {symmetric_example_params(Rat(6), make_rat(1, 2)), testing::random_honeycomb_params(rng, false)};
    std::uniform_int_distribution<long> num(1, 9), frac(0, 47);
    for (const auto& P : cases) {
        const TropParametrization T = trop_parametrization(P);
        for (int i = 0; i < 30; ++i) {
            Series x;
            if (i % 3 == 0) {
                x = Series(Rat(num(rng))) * Series::t_pow(make_rat(frac(rng), 8));
            } else {
                const int id = static_cast<int>(num(rng));
                x = P.p[id - 1] * (Series(1) + Series(Rat(num(rng))) * Series::t_pow(make_rat(static_cast<long>(num(rng)), 4)));
            }
            const TropPoint X = retract(x, P, T);
            CHECK(trop_point(parametrize_point(P, x)) == T.embed(X));
        }
    }
}
