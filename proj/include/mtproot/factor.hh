// factor.hh -- irreducible factorization over Q for univariate and bivariate
// polynomials.

#ifndef MTPROOT_FACTOR_HH
#define MTPROOT_FACTOR_HH

#include <mtproot/mpoly.hh>
#include <mtproot/upoly.hh>

#include <vector>

namespace mtproot {

struct FactorResult {
    QQ constant; // c0
    std::vector<std::pair<mpoly, unsigned>> factors; // irreducible, exponent

    mpoly product() const; // constant * prod factors^exponents
};

// Full factorization of a nonzero polynomial in Q[x], Q[y] or Q[x,y]:
// each factor irreducible over Q, primitive with positive leading
// coefficient, factors sorted canonically.  Throws on zero input.
FactorResult factor(const mpoly& g);

// Univariate form (used directly by the isolator for Q[x] factors).
struct UnivarFactorResult {
    QQ constant;
    std::vector<std::pair<upoly, unsigned>> factors;
};
UnivarFactorResult factor_univariate(const upoly& p);

} // namespace mtproot

#endif
