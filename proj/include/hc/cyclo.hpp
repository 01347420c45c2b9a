#pragma once

#include "hc/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hc {

/// Element of Q(ζ12) in the power basis 1, ζ, ζ², ζ³ modulo x⁴ − x² + 1.
/// Q(ζ3) and Q(ζ6) are the subfield spanned by 1 and ζ².
class Cyclo {
public:
    Cyclo() = default;
    Cyclo(long n) { c_[0] = n; }
    Cyclo(const Rat& r) { c_[0] = r; }
    Cyclo(const Rat& a0, const Rat& a1, const Rat& a2, const Rat& a3) : c_{a0, a1, a2, a3} {}

    /// ζ12^k for any integer k.
    static Cyclo zeta12(long k);
    /// ζ_N^k where N is the session order.
    static Cyclo zeta(long k);

    const Rat& operator[](int i) const { return c_[i]; }

    bool is_zero() const;
    bool is_rational() const;
    bool in_session_field() const;
    const Rat& rational_part() const { return c_[0]; }

    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);
    Cyclo& operator*=(const Rat& r);
    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
    friend Cyclo operator*(Cyclo a, const Rat& r) { return a *= r; }
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inv(); }
    bool operator==(const Cyclo& o) const { return c_ == o.c_; }
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    Cyclo inv() const;
    Cyclo pow(long k) const;

    /// If this equals r·ζ12^k with r > 0 rational, returns (r, k) with k in [0,12).
    std::optional<std::pair<Rat, int>> as_root_of_unity_multiple() const;

    /// Coordinates in the basis 1, z, z², … of Q(ζ_N), z = ζ_N of the session.
    /// Throws if the value lies outside the session field.
    std::vector<Rat> session_coords() const;
    static Cyclo from_session_coords(const std::vector<Rat>& v);

    /// Sum of terms "r*z^k" in the literal grammar ("0" for zero).
    std::string str() const;

private:
    std::array<Rat, 4> c_{};
};

} // namespace hc
