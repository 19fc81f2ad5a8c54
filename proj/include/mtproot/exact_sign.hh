// exact_sign.hh -- exact sign determination of polynomial expressions at
// transcendental points r*pi + arctan(q).

#ifndef MTPROOT_EXACT_SIGN_HH
#define MTPROOT_EXACT_SIGN_HH

#include <mtproot/enclosure.hh>
#include <mtproot/mpoly.hh>
#include <mtproot/upoly.hh>

namespace mtproot {

// Enclosure of r*pi + arctan(q), width shrinking with bits.
Enclosure shifted_arctan_enclosure(const QQ& r, const QQ& q, unsigned bits);

// Exact sign of h(r*pi + arctan q, q) for h in Q[x,y] and r in (1/4)Z.
// The point r*pi + arctan q is transcendental except when it is exactly 0,
// so the value vanishes iff every coefficient c_i(q) of h w.r.t. x does;
// otherwise enclosure refinement certifies the sign in finitely many steps.
Sign sign_at_shifted_arctan(const mpoly& h, const QQ& r, const QQ& q);

// Exact sign of p(r*pi) for univariate p over Q and rational r.
Sign sign_of_univar_at_pi_multiple(const upoly& p, const QQ& r);

} // namespace mtproot

#endif
