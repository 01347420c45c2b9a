#pragma once

#include "hc/trop_theta.hpp"

#include <array>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace hc {

struct HexSum {
    Rat sum; ///< U∘V = U + V − O
    Rat neg; ///< −(U∘V) = 3O − U − V
};
/// Addition of retractions on ℝ/Qℤ relative to the identity position O.
HexSum hex_add(const TropPoint& U, const TropPoint& V, const Rat& O, const Rat& Q);

/// Retraction of a group of three inflection points, located from v2, v4 or v6.
struct InflectionPosition {
    int vertex = 0;     ///< 0-based hexagon index (1, 3 or 5)
    int edge = -1;      ///< 0-based index of the edge carrying the point, −1 for a ray flag
    Rat distance;       ///< from the vertex along that edge
    bool ray_flag = false;
    int multiplicity = 3;
};
std::array<InflectionPosition, 3> inflection_retractions(const TropicalCubicCurve& C);
/// Circle coordinate of an inflection position under a theta parametrization.
Rat circle_position(const InflectionPosition& p, const TropParametrization& T);

enum class FiberKind { single_point, subray, segment_and_rays };
std::string to_string(FiberKind k);

/// Distances along the tentacle of p_id.  The shared segment is reported on the smaller id.
struct FiberPiece {
    int id = 0;
    Rat lo;
    bool lo_closed = true;
    std::optional<Rat> hi; ///< nullopt: unbounded
    bool hi_closed = true;
};

struct FiberDescription {
    FiberKind kind = FiberKind::single_point;
    Rat position;                ///< circle coordinate of −(U∘V)
    std::vector<int> tentacles;  ///< p-ids at that position
    std::vector<FiberPiece> pieces;

    bool contains(const TropPoint& w) const;
    std::string str() const;
};

/// Realizable retractions of (uv)⁻¹ over all lifts u, v of U, V (identity at x = 1).
FiberDescription fiber(const TropPoint& U, const TropPoint& V, const ThetaParams& P);

enum class CellClass { vertex, bounded_edge, ray, square, triangle, polygon, flap, quadrant };
std::string to_string(CellClass c);

struct TGLCell {
    int dim = 0;
    CellClass cls = CellClass::vertex;
    std::vector<int> boundary; ///< indices of cells of dimension dim − 1
    std::string locus;         ///< human-readable origin
};

struct FVector {
    long vertices = 0, bounded_edges = 0, rays = 0, squares = 0, triangles = 0, polygons = 0, flaps = 0, quadrants = 0;
    long euler() const { return vertices - bounded_edges + squares + triangles + polygons; }
    std::string str() const; ///< "V E R S T F Q" (polygons appended when present)
};

namespace detail {
struct TGLData;
}

struct TGLComplex {
    Rat Q;
    std::vector<TGLCell> cells;
    FVector f;
    /// Torus net in circle coordinates (h_U, h_V) for drawing.
    std::vector<std::array<Rat, 2>> torus_vertices;
    std::vector<std::array<int, 2>> torus_edges;
    std::vector<std::array<Pt2, 2>> torus_segments; ///< edge endpoints, unwrapped from the first vertex
    std::vector<std::vector<int>> torus_faces;
    std::shared_ptr<const detail::TGLData> data;

    /// Cell containing the triple (U, V, W), or −1 when the triple is not on the surface.
    int locate(const TropPoint& U, const TropPoint& V, const TropPoint& W) const;
    bool boundary_closed() const;
};

TGLComplex tgl_build(const ThetaParams& P);

struct TGLSampleReport {
    int samples = 0;
    int located = 0;
    int theta_mismatches = 0; ///< trop of the theta map disagreeing with the retraction
    std::vector<std::string> failures;
};
/// Random lift pairs (u, v): checks that (U, V, retract((uv)⁻¹)) lies in the complex.
TGLSampleReport tgl_sample(const ThetaParams& P, const TGLComplex& C, int n, std::mt19937_64& rng, bool theta_check = true);

/// Random lift of a tropical point (generic unit and higher terms).
Series random_lift(const TropPoint& X, const ThetaParams& P, const TropParametrization& T, std::mt19937_64& rng);

} // namespace hc
