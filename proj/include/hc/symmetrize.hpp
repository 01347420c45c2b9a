#pragma once

#include "hc/cubic.hpp"
#include "hc/poly.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hc {

using PointList = std::vector<Point3>;
using Triple = std::array<int, 3>;

/// The degree-12 equation in b whose roots give j(a,b) = ι for the symmetric family.
SeriesPoly symmetric_b_equation(const Series& iota, const Series& a);

/// Roots b with val(b) = −val(ι)/6, ordered by the exponent k of their leading
/// coefficient r·ζ12^k (principal root first).
std::vector<Series> solve_symmetric_b(const Series& iota, const Series& a, const Rat& prec);

/// ω = (3a+6b+1)/(−3a+3b−1).
Series omega_of(const Series& a, const Series& b);

/// Rows of A_ω for the given cube root choice (principal when omitted).
PointList inflection_matrix(const Series& omega);
PointList inflection_matrix_from_root(const Series& cube_root);

/// The twelve collinear triples of the Hesse configuration (1-based, sorted).
const std::vector<Triple>& hesse_triples();
/// Triples whose 3×3 determinant has no known nonzero term.
std::vector<Triple> collinear_triples(const PointList& pts);

/// Linear forms as coefficient vectors (u, v, w) of ux + vy + wz.
struct SyzygeticTriangle {
    Series s;                ///< member s·f + H_f
    std::array<Point3, 3> lines;
    Rat residual_order;      ///< order to which the product of lines matches the member
};

/// disc(s·f + H_f) as a polynomial in s.
SeriesPoly pencil_discriminant(const TernaryCubic& f);
/// Monic cube root of a degree-12 polynomial; throws when it is not a cube at precision.
SeriesPoly polynomial_cube_root(const SeriesPoly& p);

std::vector<SyzygeticTriangle> syzygetic_triangles(const TernaryCubic& f, const Rat& prec);

/// Points labeled so that collinear triples follow the Hesse configuration.
struct HesseLabeling {
    PointList points;
};
HesseLabeling inflection_points(const TernaryCubic& f, const Rat& prec);

/// Scales p so that its coordinate of least valuation becomes 1.
Point3 normalize_point(const Point3& p);
bool projectively_equal(const Point3& p, const Point3& q);

/// Matrix sending src[k] to dst[k] projectively (adjugate-based, no division).
Mat3 projective_from_correspondence(const std::array<Point3, 4>& src, const std::array<Point3, 4>& dst);

/// Permutation of {1..9}; perm[i] is the image of i (perm[0] unused).
using Perm9 = std::array<int, 10>;
Perm9 parse_cycles(const std::string& text);
Perm9 compose(const Perm9& outer, const Perm9& inner); ///< (outer ∘ inner)(i)
const std::vector<std::string>& coset_representatives();

struct SymmetrizeResult {
    Mat3 m;
    TernaryCubic g;
    TernaryCubic transformed; ///< f ∘ M
    Series a, b, omega;
    int transforms_tested = 0;
    std::string accepted_perm;
    Rat agreement;
};

SymmetrizeResult symmetrize_pipeline(const TernaryCubic& f, const Rat& prec, const std::optional<Series>& a = std::nullopt);

} // namespace hc
