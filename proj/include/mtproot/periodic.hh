// periodic.hh -- detecting, locating and exactly counting the periodic
// (unbounded) roots of g(x, tan x).

#ifndef MTPROOT_PERIODIC_HH
#define MTPROOT_PERIODIC_HH

#include <mtproot/endpoint.hh>
#include <mtproot/mpoly.hh>

#include <vector>

namespace mtproot {

// Potential periodic interval set: [(-inf, b0), (a_1,b_1)...(a_s,b_s),
// (a_last, +inf)], each interior interval isolating one real root of
// lc(g, x).
struct PPIS {
    QQ b0;
    std::vector<std::pair<QQ, QQ>> interior;
    QQ a_last;

    std::size_t s() const { return interior.size(); }
    // all finite endpoints in order b0, a_1, b_1, ..., a_s, b_s, a_last
    std::vector<QQ> finite_endpoints() const;
};

// Interior intervals refined to arctan-length < eps/2; outer endpoints with
// arctan within eps/2 of -pi/2 / +pi/2.
PPIS build_ppis(const mpoly& g, const QQ& eps);

// The reflected set [(-inf,-a_last), (-b_s,-a_s), ..., (a_1? ...)], a general
// PPIS of g(-x,-y) whenever the input is one of g.
PPIS mirror_ppis(const PPIS& I);

struct PeriodicBunch {
    HalfEndpoint lo, hi; // arctan a_j, arctan b_j (outer: +-pi/2)
    unsigned count = 0;
    std::size_t j = 0; // PPIS slot, 0..s+1
};

struct FarZeroResult {
    long k_prime = 0;
    long x0 = 0; // the integer sample point
    std::vector<PeriodicBunch> bunches;
};

// At-least counts: beyond k', every period has >= count roots per bunch,
// and no roots outside the bunch intervals.  g must be square-free with
// deg(g,y) >= 1, I a general PPIS of g.
FarZeroResult isolating_far_zero(const mpoly& g, const PPIS& I);

struct CompleteFarZeroResult {
    long k_star = 0;
    long k_prime = 0, k_dprime = 0, k_tprime = 0;
    QQ delta1, delta2;
    std::vector<PeriodicBunch> bunches; // exact counts beyond k_star
};

// Exact counts beyond k*.  Additionally requires y to not divide g.
CompleteFarZeroResult complete_isolating_far_zero(const mpoly& g, const PPIS& I);

} // namespace mtproot

#endif
