// polyops.hh -- gcd, resultants, discriminants and the structural maps
// between a trigonometric polynomial f(x, sin x, cos x) and its tangent /
// cotangent images in Q[x,y].
//
// Variable convention: 0 = x, 1 = y (also the tangent variable t),
// 2 = z (cos, or the resultant parameter delta).

#ifndef MTPROOT_POLYOPS_HH
#define MTPROOT_POLYOPS_HH

#include <mtproot/mpoly.hh>

namespace mtproot {

inline constexpr int VX = 0;
inline constexpr int VY = 1;
inline constexpr int VZ = 2;

// Primitive gcd with positive leading rational (lex order).  Throws
// std::invalid_argument when both inputs are zero.
mpoly poly_gcd(const mpoly& a, const mpoly& b, int v = VY);

// Resultant eliminating v.  Zero input gives zero by convention.  Uses a
// fraction-free Sylvester determinant for small degrees and the subresultant
// recursion otherwise.
mpoly resultant(const mpoly& a, const mpoly& b, int v);

// Fraction-free (Bareiss) Sylvester determinant; exposed for cross-checks.
mpoly sylvester_resultant(const mpoly& a, const mpoly& b, int v);

// discrim(g, v) = (-1)^(n(n-1)/2) res(g, dg/dv, v) / lc(g, v), n = deg(g,v).
// Throws std::invalid_argument when deg(g,v) = 0.
mpoly discriminant(const mpoly& g, int v);

// Reciprocal polynomial R(g) = g(x, 1/y) y^deg(g,y); R(0) = 0.
mpoly reciprocal(const mpoly& g);

// phi(g) = g(x, (1+y)/(1-y)) (1-y)^deg(g,y); the quarter-turn tangent shift.
mpoly phi(const mpoly& g);

// g(x,t) = f(2x, 2t/(1+t^2), (1-t^2)/(1+t^2)) (1+t^2)^tdeg(f,[y,z]).
mpoly mtp_to_tan(const mpoly& f);

// Same with cos replaced by the cotangent image (t^2-1)/(1+t^2).
mpoly mtp_to_cot(const mpoly& f);

// g(-x, -y).
mpoly mirror_xy(const mpoly& g);

// Largest m with y^m | g (0 for g = 0 by convention here; callers check).
unsigned adicity(const mpoly& g, int v);

// Quotient g / v^m (exact).
mpoly shift_down(const mpoly& g, int v, unsigned m);

} // namespace mtproot

#endif
