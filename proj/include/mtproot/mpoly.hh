// mpoly.hh -- sparse exact polynomials over Q in up to three variables.
//
// One representation serves Q[x], Q[x,y] and Q[x,y,z]; variables are indexed
// 0,1,2 and terms are kept sorted in descending lex order with var 0 most
// significant.  Values are immutable in spirit: every operation returns a new
// polynomial.

#ifndef MTPROOT_MPOLY_HH
#define MTPROOT_MPOLY_HH

#include <mtproot/basic.hh>

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mtproot {

constexpr int kMaxVars = 3;
using Mono = std::array<unsigned, kMaxVars>;

int mono_cmp(const Mono& a, const Mono& b); // lex, var 0 most significant

class mpoly {
public:
    using Term = std::pair<Mono, QQ>;

    mpoly() = default;
    mpoly(const QQ& c);
    mpoly(long c);
    static mpoly var(int v, unsigned exp = 1);
    static mpoly term(const QQ& c, const Mono& m);
    // Takes arbitrary (possibly unsorted, duplicated) terms and normalizes.
    static mpoly from_terms(std::vector<Term> terms);

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    bool is_rational_constant() const { return is_constant(); }
    const QQ& constant_value() const; // requires is_constant()

    const std::vector<Term>& terms() const { return t_; }
    std::size_t size() const { return t_.size(); }

    long degree(int v) const;           // -1 for the zero polynomial
    long total_degree(int v1, int v2) const; // max of e1+e2 over terms
    bool depends_on(int v) const { return degree(v) > 0; }

    mpoly operator-() const;
    mpoly operator+(const mpoly& o) const;
    mpoly operator-(const mpoly& o) const;
    mpoly operator*(const mpoly& o) const;
    mpoly operator*(const QQ& s) const;
    mpoly operator*(long s) const { return *this * QQ(s); }
    mpoly operator/(const QQ& s) const;
    bool operator==(const mpoly& o) const { return t_ == o.t_; }
    bool operator!=(const mpoly& o) const { return !(t_ == o.t_); }

    mpoly pow(unsigned e) const;

    // Coefficient of v^k, a polynomial not involving v.
    mpoly coeff_wrt(int v, unsigned k) const;
    mpoly lc_wrt(int v) const; // leading coefficient w.r.t. v
    std::vector<mpoly> coeffs_wrt(int v) const; // ascending, size deg+1 (empty if zero)

    mpoly derivative(int v) const;
    mpoly eval(int v, const QQ& value) const; // substitute a rational
    QQ eval_all(const QQ& x, const QQ& y, const QQ& z) const;

    // Substitute v := num/den and clear denominators with den^deg(v).
    mpoly subst_rational(int v, const mpoly& num, const mpoly& den) const;

    // Exact division; nullopt when this is not a multiple of d.
    std::optional<mpoly> divexact(const mpoly& d) const;

    // Pseudo-remainder of this by d w.r.t. v: lc(d,v)^(deg-degd+1)*this mod d.
    mpoly prem(const mpoly& d, int v) const;

    // Rational content: unique c > 0 (sign carried by the polynomial) such
    // that this/c has coprime integer coefficients.  Content of 0 is 0.
    QQ rational_content() const;
    // this/rational_content with positive leading coefficient; returns the
    // (signed) scalar s with *this == s * primitive.
    std::pair<QQ, mpoly> primitive() const;

    std::string str(const std::array<std::string, 3>& names = {"x", "y", "z"}) const;

private:
    std::vector<Term> t_; // sorted descending lex, no zero coefficients
    void normalize();
};

inline mpoly operator*(const QQ& s, const mpoly& p) { return p * s; }

} // namespace mtproot

#endif
