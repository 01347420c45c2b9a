#pragma once

#include "hc/cubic.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hc {

using Dir2 = std::array<long, 2>;
using Pt2 = std::array<Rat, 2>;

/// Plane tropical curve in valuation coordinates (X, Y) = (val x − val z, val y − val z).
/// Min convention: the rays of a cubic point along (1,0), (0,1) and (−1,−1).
struct TropicalCubicCurve {
    struct Edge {
        int from = 0, to = 0;
        Dir2 dir{}; ///< primitive, from → to
        Rat length; ///< lattice length
        long mult = 1;
    };
    struct Ray {
        int base = 0;
        Dir2 dir{};
        long mult = 1;
    };
    /// v[i] is v_{i+1}; edge e_i runs from v_i to v_{i+1}.  v₁ is the vertex whose
    /// counterclockwise outgoing edge has direction (1,1).
    struct Hexagon {
        std::array<int, 6> v{};
        std::array<Rat, 6> ell{};
    };
    /// Tentacle of p_id: its ray, and the bounded segment from the hexagon
    /// (length 0 when the ray starts on the hexagon).
    struct Tentacle {
        int id = 0;
        int hex_index = 0; ///< 0-based position in hexagon.v
        int ray = 0;
        Rat segment_length;
    };

    std::vector<Pt2> vertices;
    std::vector<Edge> edges;
    std::vector<Ray> rays;
    std::optional<Hexagon> hexagon;
    std::vector<Tentacle> tentacles;

    bool balanced() const;
    Rat hexagon_length() const;
    bool hexagon_relations_hold() const;
};

/// Builds hexagon and tentacle data from the graph when it has the honeycomb shape.
void attach_honeycomb_structure(TropicalCubicCurve& c);

enum class HoneycombClass { not_honeycomb, honeycomb, symmetric_honeycomb };
std::string to_string(HoneycombClass c);

struct HoneycombRatios {
    HoneycombClass cls = HoneycombClass::not_honeycomb;
    std::array<Rat, 6> hexagon_vals{};
    std::array<Rat, 3> tentacle_vals{};
    /// Corner coefficient without known support: the value above is only a lower bound.
    std::array<bool, 3> tentacle_unbounded{};
    std::string reason;
};

HoneycombRatios honeycomb_ratios(const TernaryCubic& f);

/// Dual of the regular subdivision induced by the coefficient valuations.
TropicalCubicCurve tropicalize_cubic(const TernaryCubic& f);

} // namespace hc
