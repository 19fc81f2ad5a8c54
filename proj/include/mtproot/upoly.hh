// upoly.hh -- dense univariate polynomials over Q.

#ifndef MTPROOT_UPOLY_HH
#define MTPROOT_UPOLY_HH

#include <mtproot/basic.hh>
#include <mtproot/enclosure.hh>
#include <mtproot/mpoly.hh>

#include <string>
#include <utility>
#include <vector>

namespace mtproot {

class upoly {
public:
    upoly() = default;
    upoly(const QQ& c);
    upoly(long c);
    static upoly from_coeffs(std::vector<QQ> ascending);
    static upoly x(unsigned e = 1);

    // Conversion for polynomials of a single variable v.
    static upoly from_mpoly(const mpoly& p, int v);
    mpoly to_mpoly(int v) const;

    bool is_zero() const { return c_.empty(); }
    long degree() const { return (long)c_.size() - 1; }
    const QQ& lc() const;
    const QQ& operator[](std::size_t k) const; // 0 beyond degree
    const std::vector<QQ>& coeffs() const { return c_; }

    upoly operator-() const;
    upoly operator+(const upoly& o) const;
    upoly operator-(const upoly& o) const;
    upoly operator*(const upoly& o) const;
    upoly operator*(const QQ& s) const;
    upoly operator*(long s) const { return *this * QQ(s); }
    bool operator==(const upoly& o) const { return c_ == o.c_; }

    QQ eval(const QQ& v) const;
    Enclosure eval(const Enclosure& v) const;
    upoly derivative() const;

    // Exact rational division with remainder (divisor nonzero).
    std::pair<upoly, upoly> divrem(const upoly& d) const;

    // Primitive integer coefficients, same sign as this: this = scale * prim.
    std::pair<QQ, std::vector<ZZ>> primitive_zz() const;

    std::string str(const std::string& name = "x") const;

private:
    std::vector<QQ> c_; // ascending, no trailing zeros
    void trim();
};

// gcd over Q, primitive with positive leading coefficient.
upoly upoly_gcd(const upoly& a, const upoly& b);

// Yun square-free decomposition: p = c * prod f_i^(m_i), factors primitive
// with positive lc, pairwise coprime and square-free, sorted by multiplicity.
struct SquarefreePart {
    upoly factor;
    unsigned multiplicity;
};
std::vector<SquarefreePart> squarefree_decomposition(const upoly& p);

} // namespace mtproot

#endif
