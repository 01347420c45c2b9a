#pragma once

#include "hc/honeycomb.hpp"
#include "hc/tate.hpp"

#include <array>
#include <optional>
#include <vector>

namespace hc {

struct TropThetaEnv {
    Rat Q;
};

struct TropThetaValue {
    Rat value;
    long m = 0;
};

/// min over m of (m²−m)Q/2 + m(A−X), with its minimizer.
TropThetaValue trop_theta_eval(const TropThetaEnv& env, const Rat& A, const Rat& X);
/// Σ_{n>0} min(0, nQ+X−A) + Σ_{n≥0} min(0, nQ+A−X), summed directly.
Rat trop_theta_sum(const TropThetaEnv& env, const Rat& A, const Rat& X);

/// val(1 − (x/y)qⁱ) for the i aligning the valuations.
/// Throws std::domain_error when val(x) ≢ val(y) mod val(q), PrecisionError when the difference vanishes to precision.
Rat delta(const Series& x, const Series& y, const Series& q);

struct GapCheck {
    Rat observed;  ///< val Θ_a(x) − trop_theta_eval(val a, val x)
    Rat predicted; ///< δ(x, a) when V(x) = V(a), else 0
    Rat residual;  ///< observed − predicted
};
GapCheck theta_gap_check(const Series& a, const Series& x, const Series& q);

/// A point of the tropical curve: its retraction to the hexagon circle and,
/// off the hexagon, the tentacle and distance.  Distances up to the shared
/// segment length are reported on the smaller id of the pair.
struct TropPoint {
    Rat hex; ///< in [0, Q)
    int id = 0; ///< 0 on the hexagon, else 1..9
    Rat dist;

    bool on_hexagon() const { return id == 0; }
    bool operator==(const TropPoint& o) const { return hex == o.hex && id == o.id && dist == o.dist; }
};

/// Tropical curve of a theta map with the circle coordinates of its pieces.
struct TropParametrization {
    Rat Q;
    std::array<Rat, 9> A{};           ///< val(p_i)
    std::array<Rat, 9> r{};           ///< val(p_i) mod Q
    std::array<Rat, 6> hex_pos{};     ///< circle coordinate of hexagon.v[k]
    std::array<Pt2, 6> hex_pt{};      ///< its plane point
    std::array<std::array<int, 2>, 6> anchors{}; ///< p-ids at hexagon.v[k] (second 0 when single)
    std::array<Rat, 6> segment{};     ///< shared segment length at hexagon.v[k] (0 when single)
    std::array<Rat, 3> offset{};      ///< valuations of a, b, c
    TropicalCubicCurve curve;

    /// Position on the hexagon of a circle coordinate.
    Pt2 embed_hex(const Rat& h) const;
    Pt2 embed(const TropPoint& p) const;
    /// Index k of the hexagon vertex at circle coordinate h, or −1.
    int vertex_at(const Rat& h) const;
};

/// Builds the curve from the piecewise-linear map X ↦ Σ trop Θ_{p_i}(X) and the δ's of the shared tentacles.
TropParametrization trop_parametrization(const ThetaParams& P);
TropicalCubicCurve trop_parametrize(const ThetaParams& P);

/// Retraction of x ∈ K*/q^ℤ to the tropical curve.
TropPoint retract(const Series& x, const ThetaParams& P);
TropPoint retract(const Series& x, const ThetaParams& P, const TropParametrization& T);

/// (val x − val z, val y − val z) of a projective point with nonzero z.
Pt2 trop_point(const Point3& p);

} // namespace hc
