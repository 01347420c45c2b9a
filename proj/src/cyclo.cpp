#include "hc/cyclo.hpp"

#include "hc/session.hpp"

#include <stdexcept>

namespace hc {

namespace {

// ζ12^k in the power basis, k = 0..11.
const std::array<std::array<int, 4>, 12> kZetaTable = {{
    {1, 0, 0, 0},  {0, 1, 0, 0},  {0, 0, 1, 0},  {0, 0, 0, 1},
    {-1, 0, 1, 0}, {0, -1, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0},
    {0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, -1, 0}, {0, 1, 0, -1},
}};

long mod12(long k) { return ((k % 12) + 12) % 12; }

} // namespace

Cyclo Cyclo::zeta12(long k)
{
    const auto& row = kZetaTable[mod12(k)];
    return Cyclo(row[0], row[1], row[2], row[3]);
}

Cyclo Cyclo::zeta(long k) { return zeta12(k * (12 / session().zeta_order)); }

bool Cyclo::is_zero() const
{
    for (const auto& c : c_)
        if (sgn(c) != 0) return false;
    return true;
}

bool Cyclo::is_rational() const { return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }

bool Cyclo::in_session_field() const
{
    if (session().zeta_order == 12) return true;
    return sgn(c_[1]) == 0 && sgn(c_[3]) == 0;
}

Cyclo Cyclo::operator-() const
{
    Cyclo r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o)
{
    for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o)
{
    for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyclo& Cyclo::operator*=(const Rat& r)
{
    for (auto& c : c_) c *= r;
    return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& o)
{
    if (o.is_rational()) return *this *= o.c_[0];
    if (is_rational()) {
        Rat r = c_[0];
        *this = o;
        return *this *= r;
    }
    std::array<Rat, 7> p{};
    for (int i = 0; i < 4; ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (int j = 0; j < 4; ++j) p[i + j] += c_[i] * o.c_[j];
    }
    // x^6 = -1, x^5 = x^3 - x, x^4 = x^2 - 1
    p[0] -= p[6];
    p[3] += p[5];
    p[1] -= p[5];
    p[2] += p[4];
    p[0] -= p[4];
    for (int i = 0; i < 4; ++i) c_[i] = p[i];
    return *this;
}

Cyclo Cyclo::inv() const
{
    if (is_zero()) throw std::domain_error("inversion of zero in Q(zeta12)");
    if (is_rational()) return Cyclo(Rat(1) / c_[0]);
    // Columns of the multiplication-by-this matrix are this·x^j.
    std::array<std::array<Rat, 5>, 4> m{};
    for (int j = 0; j < 4; ++j) {
        Cyclo col = *this * zeta12(j);
        for (int i = 0; i < 4; ++i) m[i][j] = col.c_[i];
    }
    m[0][4] = 1;
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        while (sgn(m[piv][col]) == 0) ++piv;
        std::swap(m[piv], m[col]);
        Rat d = m[col][col];
        for (int k = col; k < 5; ++k) m[col][k] /= d;
        for (int r = 0; r < 4; ++r) {
            if (r == col || sgn(m[r][col]) == 0) continue;
            Rat f = m[r][col];
            for (int k = col; k < 5; ++k) m[r][k] -= f * m[col][k];
        }
    }
    return Cyclo(m[0][4], m[1][4], m[2][4], m[3][4]);
}

Cyclo Cyclo::pow(long k) const
{
    Cyclo base = k < 0 ? inv() : *this;
    unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    Cyclo r(1);
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

std::optional<std::pair<Rat, int>> Cyclo::as_root_of_unity_multiple() const
{
    if (is_zero()) return std::nullopt;
    for (int k = 0; k < 12; ++k) {
        Cyclo v = *this * zeta12(-k);
        if (v.is_rational() && sgn(v.c_[0]) > 0) return std::make_pair(v.c_[0], k);
    }
    return std::nullopt;
}

std::vector<Rat> Cyclo::session_coords() const
{
    switch (session().zeta_order) {
    case 12:
        return {c_[0], c_[1], c_[2], c_[3]};
    case 6:
        if (!in_session_field()) break;
        return {c_[0], c_[2]};
    case 3:
        if (!in_session_field()) break;
        // z = x^2 - 1
        return {c_[0] + c_[2], c_[2]};
    default:
        break;
    }
    throw std::domain_error("value lies outside Q(zeta_" + std::to_string(session().zeta_order) + ")");
}

Cyclo Cyclo::from_session_coords(const std::vector<Rat>& v)
{
    Cyclo r;
    for (std::size_t i = 0; i < v.size(); ++i) r += zeta(static_cast<long>(i)) * v[i];
    return r;
}

std::string Cyclo::str() const
{
    auto v = session_coords();
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) == 0) continue;
        Rat a = abs(v[i]);
        if (out.empty())
            out = sgn(v[i]) < 0 ? "-" : "";
        else
            out += sgn(v[i]) < 0 ? " - " : " + ";
        if (i == 0) {
            out += to_string(a);
            continue;
        }
        if (a != 1) out += (a.get_den() == 1 ? to_string(a) : "(" + to_string(a) + ")") + "*";
        out += i == 1 ? "z" : "z^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

} // namespace hc
