#pragma once

#include "hc/series.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace hc {

using Mono = std::array<int, 3>;
using Point3 = std::array<Series, 3>;
using Mat3 = std::array<std::array<Series, 3>, 3>;

/// Polynomial in x, y, z with series coefficients.
class MPoly {
public:
    std::map<Mono, Series> terms;

    static MPoly var(int i);
    static MPoly constant(const Series& s);

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const Series& s);

    MPoly diff(int var) const;
    Series coeff(const Mono& m) const;
    Series eval(const Point3& p) const;
    void prune();
};

/// The ten coefficients c_ijk of a plane cubic.
struct TernaryCubic {
    std::array<Series, 10> c;

    /// Monomials in the order c300 c210 c120 c030 c021 c012 c003 c102 c201 c111.
    static const std::array<Mono, 10>& monomials();
    static std::string key(int idx);
    static int index(const Mono& m);

    Series& at(int i, int j, int k) { return c[index({i, j, k})]; }
    const Series& at(int i, int j, int k) const { return c[index({i, j, k})]; }

    MPoly poly() const;
    static TernaryCubic from_poly(const MPoly& p);
    Series eval(const Point3& p) const;
    bool is_zero_to_prec() const;
};

TernaryCubic operator*(const TernaryCubic& f, const Series& s);
TernaryCubic operator+(const TernaryCubic& f, const TernaryCubic& g);

/// a(x³+y³+z³) + b(x²y+x²z+xy²+xz²+y²z+yz²) + xyz.
TernaryCubic symmetric_cubic(const Series& a, const Series& b);

Mat3 identity3();
Mat3 mat_mul(const Mat3& a, const Mat3& b);
Point3 mat_apply(const Mat3& m, const Point3& p);
Series det3(const Mat3& m);
Mat3 adjugate3(const Mat3& m);
/// Determinant of a square matrix by expansion over column subsets.
Series det_n(const std::vector<std::vector<Series>>& m);

TernaryCubic hessian(const TernaryCubic& f);
/// f(M·(x,y,z)ᵀ); throws when det M is zero to precision.
TernaryCubic apply_transform(const TernaryCubic& f, const Mat3& m);

/// S' and T' with tr(adj(M_f)·M_H) = S'·f and Hess(H) ≡ T'·H mod f.
struct Invariants {
    Series s_prime;
    Series t_prime;
};
Invariants aronhold_invariants(const TernaryCubic& f);

/// Degree-12 discriminant, −det₆/13824 of the partials of f and of H_f.
Series discriminant(const TernaryCubic& f);
/// j = 6912·S'³ / (27T'² − 4S'³).
Series j_invariant(const TernaryCubic& f);

/// Scalar λ with g = λ·f, from the coefficient of f of least valuation;
/// also returns the order to which g − λf is known to vanish.
std::pair<Series, Rat> proportionality(const TernaryCubic& f, const TernaryCubic& g);

} // namespace hc
