// basic.hh -- exact integer/rational ground types shared by the whole kernel.

#ifndef MTPROOT_BASIC_HH
#define MTPROOT_BASIC_HH

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mtproot {

// Arbitrary-precision integers and rationals.  mpq_class keeps values
// canonical (reduced, positive denominator), which is exactly the invariant
// the kernel relies on everywhere.
using ZZ = mpz_class;
using QQ = mpq_class;

// -1, 0 or +1.
using Sign = int;

inline Sign sign_of(const ZZ& a) { return sgn(a); }
inline Sign sign_of(const QQ& a) { return sgn(a); }

inline QQ rat(long num, long den = 1)
{
    if (den == 0)
        throw std::invalid_argument("rat: zero denominator");
    QQ q(num, den);
    q.canonicalize();
    return q;
}

inline QQ rat(const ZZ& num, const ZZ& den)
{
    if (den == 0)
        throw std::invalid_argument("rat: zero denominator");
    QQ q(num, den);
    q.canonicalize();
    return q;
}

inline ZZ pow_zz(const ZZ& base, unsigned long e)
{
    ZZ r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline QQ pow_qq(const QQ& base, unsigned long e)
{
    QQ r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    return r;
}

// floor(a/b) for exact integers (GMP's fdiv).
inline ZZ floor_div(const ZZ& a, const ZZ& b)
{
    ZZ q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline ZZ floor_qq(const QQ& q) { return floor_div(q.get_num(), q.get_den()); }

inline ZZ ceil_qq(const QQ& q)
{
    ZZ c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return c;
}

inline bool is_integer(const QQ& q) { return q.get_den() == 1; }

// 2^-bits as an exact rational.
inline QQ pow2_inv(unsigned long bits)
{
    QQ q;
    q = 1;
    mpz_mul_2exp(q.get_den_mpz_t(), q.get_den().get_mpz_t(), bits);
    return q;
}

inline std::string to_string(const QQ& q) { return q.get_str(); }

} // namespace mtproot

#endif
