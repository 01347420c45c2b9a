#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <string>

namespace hc {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long n, long d = 1)
{
    Rat r(n, d);
    r.canonicalize();
    return r;
}

/// Parses "p", "-p" or "p/q".
Rat parse_rat(const std::string& s);
std::string to_string(const Rat& r);

Int floor_rat(const Rat& r);
Int ceil_rat(const Rat& r);

/// r mod m in [0, m) for m > 0.
Rat mod_rat(const Rat& r, const Rat& m);

inline long lcm_long(long a, long b) { return std::lcm(a, b); }
inline long gcd_long(long a, long b) { return std::gcd(a, b); }

/// Exact m-th root of a nonnegative rational, if it is rational.
bool rational_root(const Rat& r, unsigned m, Rat& out);

long to_long(const Int& z);

} // namespace hc
