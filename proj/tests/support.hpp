#pragma once

#include "hc/tate.hpp"

#include <random>

namespace hc::testing {

// Random honeycomb parameters with val q = 6 and three shared tentacles
// (p3/p4, p6/p7, p9/p1).  With `flex`, p1p2p3 = 1 so the identity maps to an
// inflection point.
inline ThetaParams random_honeycomb_params(std::mt19937_64& rng, bool flex, Rat* r2_out = nullptr)
{
    const Rat Q = 6;
    std::uniform_int_distribution<long> grid(1, 23), num(1, 5), den(1, 4), sgn(0, 1), bet(1, 3);
    auto unit = [&] {
        long a = num(rng) * (sgn(rng) ? 1 : -1);
        return Series(make_rat(a, den(rng))) + Series(make_rat(num(rng), den(rng))) * Series::t_pow(make_rat(1, 4));
    };
    auto coef = [&] { return Series(make_rat(num(rng) * (sgn(rng) ? 1 : -1), den(rng))); };
    for (;;) {
        const Rat r2 = make_rat(grid(rng), 4), r3 = make_rat(grid(rng), 4), r5 = make_rat(grid(rng), 4);
        const Rat r6 = mod_rat(r2 - r5, Q);
        const Rat r8 = mod_rat(r2 + r3 - r6, Q);
        if (!(r2 < r3 && r3 < r5 && r5 < r6 && r6 < r8 && r8 < Q)) continue;
        const Series u1 = unit(), u2 = unit();
        const Series u3 = flex ? (u1 * u2).inv() : unit();
        ThetaParams P;
        P.q = Series::t_pow(Q);
        P.a = P.b = P.c = Series(1);
        auto& p = P.p;
        p[0] = u1;
        p[1] = Series::t_pow(r2) * u2;
        p[2] = Series::t_pow(r3) * u3;
        const Series prod = p[0] * p[1] * p[2];
        p[3] = p[2] * (Series(1) + coef() * Series::t_pow(make_rat(bet(rng), 4)));
        p[5] = Series::t_pow(r6) * unit();
        p[4] = prod / (p[3] * p[5]);
        p[6] = p[5] * (Series(1) + coef() * Series::t_pow(make_rat(bet(rng), 4)));
        p[8] = p[0] * (Series(1) + coef() * Series::t_pow(make_rat(bet(rng), 4)));
        p[7] = prod / (p[6] * p[8]);
        if (flex) P = scale_p(P, Series::t_pow(-(r2 + r3) / 3));
        if (r2_out) *r2_out = r2;
        return P;
    }
}

} // namespace hc::testing
