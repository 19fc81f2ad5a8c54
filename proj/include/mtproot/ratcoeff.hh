// ratcoeff.hh -- polynomials in x whose coefficients are a(y)/(1+y^2)^m,
// the closure of Q[x,y] under the arctan-derivative.

#ifndef MTPROOT_RATCOEFF_HH
#define MTPROOT_RATCOEFF_HH

#include <mtproot/mpoly.hh>
#include <mtproot/upoly.hh>

#include <utility>
#include <vector>

namespace mtproot {

class ratcoeff_poly {
public:
    struct Coef {
        upoly num;  // polynomial in y
        unsigned m; // denominator exponent of (1+y^2)
    };

    static ratcoeff_poly from_bivar(const mpoly& g);

    bool is_zero() const { return c_.empty(); }
    bool is_rational_constant() const;
    QQ rational_value() const; // requires is_rational_constant()
    long deg_x() const { return (long)c_.size() - 1; }
    const std::vector<Coef>& coeffs() const { return c_; }

    // G* = (dG/dx)/(1+y^2) + dG/dy multiplied by the denominator of its
    // leading x-coefficient, the common-term (1+y^2)^m.  Returns (Gd, m).
    // Throws std::invalid_argument on constant input.
    std::pair<ratcoeff_poly, unsigned> arctan_derivative() const;

    // (1+y^2)^(max m_j) * G as a polynomial in Q[x,y]; same signs and real
    // roots as G along y -> (r pi + arctan y, y).
    mpoly polynomialize() const;
    unsigned max_m() const;

private:
    std::vector<Coef> c_; // ascending in x, trimmed, each Coef reduced
    void normalize();
};

} // namespace mtproot

#endif
