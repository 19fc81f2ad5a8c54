#include <mtproot/exact_sign.hh>
#include <mtproot/polyops.hh>

#include <stdexcept>

namespace mtproot {

Enclosure shifted_arctan_enclosure(const QQ& r, const QQ& q, unsigned bits)
{
    Enclosure at = arctan_enclosure(q, bits);
    if (sgn(r) == 0)
        return at;
    return pi_enclosure(bits) * r + at;
}

namespace {

// r*pi + arctan(q) = 0 happens exactly for these three rational points
// (any other combination is transcendental, hence nonzero).
bool point_is_zero(const QQ& r, const QQ& q)
{
    if (sgn(r) == 0)
        return sgn(q) == 0;
    if (r == rat(1, 4))
        return q == -1;
    if (r == rat(-1, 4))
        return q == 1;
    return false;
}

} // namespace

Sign sign_at_shifted_arctan(const mpoly& h, const QQ& r, const QQ& q)
{
    QQ r4 = r * 4;
    if (!is_integer(r4))
        throw std::invalid_argument("sign_at_shifted_arctan: r must be in (1/4)Z");
    if (h.degree(VZ) > 0)
        throw std::invalid_argument("sign_at_shifted_arctan: h must be bivariate in x,y");

    // specialise y := q
    std::vector<QQ> c; // ascending coefficients of X
    bool any = false;
    for (const auto& ci : h.coeffs_wrt(VX)) {
        QQ v = upoly::from_mpoly(ci, VY).eval(q);
        any = any || sgn(v) != 0;
        c.push_back(v);
    }
    if (!any)
        return 0;
    if (point_is_zero(r, q))
        return sign_of(c.empty() ? QQ(0) : c[0]);

    for (unsigned bits = 32;; bits *= 2) {
        Enclosure x = shifted_arctan_enclosure(r, q, bits);
        Sign s = eval_poly(c, x).certain_sign();
        if (s != 0)
            return s;
    }
}

Sign sign_of_univar_at_pi_multiple(const upoly& p, const QQ& r)
{
    if (p.is_zero())
        return 0;
    if (sgn(r) == 0)
        return sign_of(p[0]);
    if (p.degree() == 0)
        return sign_of(p[0]);
    // r*pi transcendental: nonzero value, certify by refinement
    for (unsigned bits = 32;; bits *= 2) {
        Enclosure x = pi_enclosure(bits) * r;
        Sign s = p.eval(x).certain_sign();
        if (s != 0)
            return s;
    }
}

} // namespace mtproot
