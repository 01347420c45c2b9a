#pragma once

#include "hc/cubic.hpp"

#include <array>
#include <string>
#include <vector>

namespace hc {

/// Parameters of the theta map x ↦ (a·Θ_{p1}Θ_{p2}Θ_{p3} : b·Θ_{p4}Θ_{p5}Θ_{p6} : c·Θ_{p7}Θ_{p8}Θ_{p9}).
struct ThetaParams {
    Series q, a, b, c;
    std::array<Series, 9> p;
};

/// Throws std::domain_error when the product condition or the q-lattice separation fails.
void validate_params(const ThetaParams& P);

/// Coefficients of j(q) = Σ c_n qⁿ for n = −1, 0, …, n_max.
std::vector<Rat> j_coefficients(long n_max);
/// j(q) through q^order (composition of the q-expansion with a series q).
Series j_of_q(const Series& q, long order);
/// Coefficients of the reversion q = Σ_{k≥1} d_k u^k of u = 1/j(q), k = 1..order.
std::vector<Rat> q_reversion_coefficients(long order);
/// Tate parameter with j(q) = ι; `order` reversion terms, val(q) = −val(ι).
Series q_from_j(const Series& iota, long order);

struct ModularCheck {
    Series a4;       ///< −5 Σ n³qⁿ/(1−qⁿ)
    Series delta;    ///< q ∏(1−qⁿ)²⁴
    Series residual; ///< (1−48a₄)³/Δ − (1/q + 744 + 196884q + …)
    Rat checked_to;  ///< residual must vanish below this absolute order
};
ModularCheck modular_check(const Series& q, long order);

/// Θ(x) = ∏_{n>0}(1−qⁿx) ∏_{n≥0}(1−qⁿ/x), to relative precision working_prec().
Series theta(const Series& x, const Series& q);
/// Θ_a(x) = Θ(x/a).
Series theta_shifted(const Series& x, const Series& a, const Series& q);

Point3 parametrize_point(const ThetaParams& P, const Series& x);

/// Implicit cubic of the theta map, with c030 equal to the product of the group-one denominators.
TernaryCubic implicitize(const ThetaParams& P, const Series& witness);
/// Same, trying a fixed list of unit witnesses.
TernaryCubic implicitize(const ThetaParams& P);

// Reparametrizations that keep the plane cubic.
ThetaParams permute_params(const ThetaParams& P, const std::array<int, 9>& perm); ///< p'_i = p_{perm[i]}, groups preserved
ThetaParams scale_abc(const ThetaParams& P, const Series& lambda);
ThetaParams scale_p(const ThetaParams& P, const Series& lambda);
ThetaParams invert_p(const ThetaParams& P);
/// p_i ↦ p_i q^{n_i}; requires equal group sums of n.
ThetaParams q_shift(const ThetaParams& P, const std::array<long, 9>& n);

struct HoneycombOrderCertificate {
    Rat Q;
    std::array<Rat, 9> r;
    std::array<long, 9> n;
    bool inverted = false;
    std::array<int, 9> perm{}; ///< applied relabeling, p'_i = p_{perm[i]}
    Rat shift;                 ///< valuation of the common scaling
    ThetaParams normalized;
};
HoneycombOrderCertificate honeycomb_certificate(const ThetaParams& P);

/// The parameters of the worked symmetric example: r = t^{Q/6}, s = 1 + t^β, a = b = c = 1.
ThetaParams symmetric_example_params(const Rat& Q, const Rat& beta);

} // namespace hc
