// bounded.hh -- isolation of the roots of g(x, tan x) inside single periods:
// quarter-period sub-solver, certified root-free bracketing, and the
// per-period driver.

#ifndef MTPROOT_BOUNDED_HH
#define MTPROOT_BOUNDED_HH

#include <mtproot/endpoint.hh>
#include <mtproot/fourier.hh>
#include <mtproot/uniroot.hh>

#include <memory>
#include <optional>
#include <vector>

namespace mtproot {

// (r pi + arctan c, r pi + arctan d) with 0 <= c < d <= 1, one root inside.
struct QuarterRootInterval {
    QQ r, c, d;
};

struct SubIbrResult {
    std::shared_ptr<const WeakFourierSequence> seq; // for later refinement
    std::vector<std::pair<QQ, QQ>> intervals;       // (c,d) pairs on (0,1)
};

// Algorithm: isolate the roots of g(x, tan x) in (r pi, r pi + pi/4) for an
// irreducible g with deg(g,y) >= 1 and r in Z or Z + 1/4.
SubIbrResult sub_ibr(const mpoly& g, const QQ& r);
std::vector<QuarterRootInterval> sub_ibr_intervals(const mpoly& g, const QQ& r);

// Reusable per-factor state: the sequence polynomials are independent of the
// period, so one factor shares them across all k.
struct FactorQuarterCache {
    mpoly g;       // irreducible factor
    mpoly gm;      // g(-x,-y), normalized
    // templates for (g, integer r), (g, quarter r), (gm, integer), (gm, quarter)
    std::shared_ptr<WeakFourierSequence> tmpl[4];

    explicit FactorQuarterCache(const mpoly& gi);
};

// Q with F_l = Q * F_1 and Q in Q[y], if that holds.
std::optional<upoly> poly_multiple_test(const mpoly& Fl, const mpoly& F1);

// Shrinks (c,d) around the simple root sr of w_l until limit polynomials
// certify that w_1 has no roots on the closed bracket; returns the bracket.
std::pair<QQ, QQ> rational_endpoint(const WeakFourierSequence& seq,
                                    std::size_t ell, QQ c, QQ d);

// One isolated root of g(x, tan x), in half-angle coordinates.
struct BoundedHit {
    enum class Kind { point, quarter, algebraic };
    Kind kind = Kind::point;
    mpoly factor;            // attribution for multiplicity assignment
    unsigned multiplicity = 1;

    // point
    HalfEndpoint value;

    // quarter: (r pi + arctan c, r pi + arctan d), possibly mirrored to
    // (-r pi - arctan d, -r pi - arctan c)
    QQ r, c, d;
    bool mirrored = false;
    std::shared_ptr<const WeakFourierSequence> seq;

    // algebraic: open rational interval (a,b) around a root of poly
    QQ a, b;
    upoly poly; // square-free part used for bisection

    HalfEndpoint lo() const;
    HalfEndpoint hi() const;
    bool is_point() const { return kind == Kind::point; }
    void refine_once();             // one bisection step (no-op on points)
    QQ coordinate_width() const;    // d-c or b-a; 0 for points
};

bool hits_overlap(const BoundedHit& x, const BoundedHit& y);
void refine_disjoint(std::vector<BoundedHit>& hits);

// All roots of g(x, tan x) in (k pi - pi/2, k pi + pi/2), pairwise disjoint.
std::vector<BoundedHit> isolating_bounded_roots(const mpoly& g, long k);

// Per-factor variant used by the isolator: point checks plus the quarter
// solvers for one irreducible factor, reusing its cached sequences.
void bounded_roots_for_factor(FactorQuarterCache& ctx, unsigned mult, long k,
                              std::vector<BoundedHit>& hits);

} // namespace mtproot

#endif
