// enclosure.hh -- verified rational enclosures of pi, arctan and interval
// arithmetic over exact rational endpoints.

#ifndef MTPROOT_ENCLOSURE_HH
#define MTPROOT_ENCLOSURE_HH

#include <mtproot/basic.hh>
#include <vector>

namespace mtproot {

// A closed interval [lo, hi] with rational endpoints.  When returned for a
// real value v the guarantee is lo <= v <= hi.
struct Enclosure {
    QQ lo, hi;

    Enclosure() : lo(0), hi(0) {}
    Enclosure(QQ l, QQ h) : lo(std::move(l)), hi(std::move(h)) {}
    explicit Enclosure(const QQ& point) : lo(point), hi(point) {}

    QQ width() const { return hi - lo; }
    bool contains(const QQ& v) const { return lo <= v && v <= hi; }
    bool contains(const Enclosure& o) const { return lo <= o.lo && o.hi <= hi; }
    bool excludes_zero() const { return lo > 0 || hi < 0; }

    // Sign if certain, 0 when the interval straddles or touches zero.
    Sign certain_sign() const
    {
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        return 0;
    }

    Enclosure operator+(const Enclosure& o) const { return {lo + o.lo, hi + o.hi}; }
    Enclosure operator-(const Enclosure& o) const { return {lo - o.hi, hi - o.lo}; }
    Enclosure operator-() const { return {-hi, -lo}; }

    Enclosure operator*(const Enclosure& o) const
    {
        QQ a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        QQ mn = a, mx = a;
        for (const QQ* v : {&b, &c, &d}) {
            if (*v < mn) mn = *v;
            if (*v > mx) mx = *v;
        }
        return {mn, mx};
    }

    Enclosure operator*(const QQ& s) const
    {
        if (sgn(s) >= 0) return {lo * s, hi * s};
        return {hi * s, lo * s};
    }

    Enclosure operator+(const QQ& s) const { return {lo + s, hi + s}; }
};

// Interval Horner evaluation of a polynomial with rational coefficients
// (ascending order) at an enclosure.
Enclosure eval_poly(const std::vector<QQ>& coeffs_ascending, const Enclosure& x);

// Enclosure of pi of width <= 2^-bits.  Monotone: the result for bits+1 is
// contained in the result for bits.  Machin's identity with exact alternating
// partial sums, memoised internally.
Enclosure pi_enclosure(unsigned bits);

// Enclosure of arctan(q) of width <= 2^-bits for any rational q.
Enclosure arctan_enclosure(const QQ& q, unsigned bits);

} // namespace mtproot

#endif
