#include "hc/rational.hpp"

#include <stdexcept>

namespace hc {

Rat parse_rat(const std::string& s)
{
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal '" + s + "'");
    r.canonicalize();
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator in '" + s + "'");
    return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

Int floor_rat(const Rat& r)
{
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Int ceil_rat(const Rat& r)
{
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Rat mod_rat(const Rat& r, const Rat& m)
{
    Rat q(r / m);
    Rat out = r - Rat(floor_rat(q)) * m;
    out.canonicalize();
    return out;
}

bool rational_root(const Rat& r, unsigned m, Rat& out)
{
    if (r < 0) return false;
    Int num, den;
    if (mpz_root(num.get_mpz_t(), r.get_num_mpz_t(), m) == 0) return false;
    if (mpz_root(den.get_mpz_t(), r.get_den_mpz_t(), m) == 0) return false;
    out = Rat(num, den);
    out.canonicalize();
    return true;
}

long to_long(const Int& z)
{
    if (!z.fits_slong_p()) throw std::overflow_error("integer exceeds long");
    return z.get_si();
}

} // namespace hc
