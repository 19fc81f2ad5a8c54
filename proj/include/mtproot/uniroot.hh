// uniroot.hh -- exact real root isolation, counting and refinement for
// univariate polynomials over Q.

#ifndef MTPROOT_UNIROOT_HH
#define MTPROOT_UNIROOT_HH

#include <mtproot/upoly.hh>

#include <vector>

namespace mtproot {

// Either an exact rational root or an open interval (a,b) holding exactly
// one distinct real root of its polynomial.
struct RootBox {
    bool exact = false;
    QQ a, b; // exact: a == b == the root
    unsigned multiplicity = 1;

    static RootBox point(QQ q, unsigned mult)
    {
        return RootBox{true, q, q, mult};
    }
    static RootBox interval(QQ lo, QQ hi, unsigned mult)
    {
        return RootBox{false, std::move(lo), std::move(hi), mult};
    }
};

// Pairwise disjoint boxes covering all real roots of p, ascending, with
// multiplicities from the square-free decomposition.  Throws on p = 0.
std::vector<RootBox> isolate(const upoly& p);

// Cauchy bound 1 + max |a_i| / |a_n|; all real roots are strictly below it.
// Throws on constant or zero input.
QQ root_upper_bound(const upoly& p);

// Number of distinct real roots in the open interval (a,b) by Sturm sign
// variations.  Throws std::domain_error if an endpoint is a root.
unsigned count_roots_in(const upoly& p, const QQ& a, const QQ& b);

// Shrink an isolating box below width eps by sign-preserving bisection.
RootBox refine(const upoly& p, RootBox box, const QQ& eps);

// One bisection step on an isolating interval of the square-free poly s.
RootBox refine_step(const upoly& s, const RootBox& box);

// Sign variation count of p's Sturm chain at t (helper shared with other
// modules needing "no roots of W on [c,d]" style checks).
class SturmChain {
public:
    explicit SturmChain(const upoly& p);
    unsigned variations_at(const QQ& t) const;
    // distinct roots in (a,b); endpoints must not be roots
    unsigned count(const QQ& a, const QQ& b) const;

private:
    std::vector<std::vector<ZZ>> chain_; // primitive integer forms
};

} // namespace mtproot

#endif
