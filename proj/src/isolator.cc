#include <mtproot/isolator.hh>
#include <mtproot/bounded.hh>
#include <mtproot/factor.hh>
#include <mtproot/periodic.hh>
#include <mtproot/polyops.hh>

#include <algorithm>
#include <cassert>

namespace mtproot {

namespace {

bool endpoint_repr_equal(const Endpoint& a, const Endpoint& b)
{
    if (a.kind != b.kind)
        return false;
    if (a.kind == Endpoint::Kind::rational)
        return a.q == b.q;
    if (a.kind == Endpoint::Kind::symbolic)
        return a.u == b.u && a.q == b.q;
    return true;
}

} // namespace

bool report_equal(const MTPRootReport& a, const MTPRootReport& b)
{
    if (a.epsilon != b.epsilon || a.bounded.size() != b.bounded.size() ||
        a.periodic.size() != b.periodic.size())
        return false;
    for (std::size_t i = 0; i < a.bounded.size(); ++i) {
        if (a.bounded[i].multiplicity != b.bounded[i].multiplicity ||
            !endpoint_repr_equal(a.bounded[i].interval.lo, b.bounded[i].interval.lo) ||
            !endpoint_repr_equal(a.bounded[i].interval.hi, b.bounded[i].interval.hi))
            return false;
    }
    for (std::size_t i = 0; i < a.periodic.size(); ++i) {
        const auto& x = a.periodic[i];
        const auto& y = b.periodic[i];
        if (x.count != y.count || x.multiplicity != y.multiplicity ||
            x.threshold != y.threshold ||
            !endpoint_repr_equal(x.base.lo, y.base.lo) ||
            !endpoint_repr_equal(x.base.hi, y.base.hi))
            return false;
    }
    return true;
}

bool is_identically_zero(const mpoly& f)
{
    return mtp_to_tan(f).is_zero();
}

unsigned multiplicity_at_zero(const mpoly& f)
{
    if (is_identically_zero(f))
        throw std::invalid_argument("multiplicity_at_zero: identically zero");
    if (sgn(f.eval_all(QQ(0), QQ(0), QQ(1))) != 0)
        throw std::invalid_argument("multiplicity_at_zero: f(0,0,1) != 0");
    // D F = dF/dx + z dF/dy - y dF/dz is d/dx of F(x, sin x, cos x)
    mpoly F = f;
    for (unsigned n = 1;; ++n) {
        F = F.derivative(VX) + mpoly::var(VZ) * F.derivative(VY) -
            mpoly::var(VY) * F.derivative(VZ);
        if (sgn(F.eval_all(QQ(0), QQ(0), QQ(1))) != 0)
            return n;
    }
}

namespace {

struct FamilyDraft {
    Endpoint lo, hi;
    unsigned count;
    unsigned mult;
    int direction; // +1 (accumulated from g), -1 (from the mirrored call)
};

bool interval_lt(const Interval& a, const Interval& b)
{
    int c = compare_endpoints(a.lo, b.lo);
    if (c != 0)
        return c < 0;
    return compare_endpoints(a.hi, b.hi) < 0;
}

} // namespace

MTPRootReport isolate_mtp(const mpoly& f, const QQ& eps)
{
    if (f.is_zero())
        throw std::invalid_argument("isolate_mtp: zero polynomial");
    if (sgn(eps) <= 0)
        throw std::invalid_argument("isolate_mtp: eps must be positive");

    mpoly g = mtp_to_tan(f);
    if (g.is_zero())
        throw identically_zero_error();
    mpoly gcot = mtp_to_cot(f);
    assert(!gcot.is_zero());

    MTPRootReport report;
    report.epsilon = eps;

    const Endpoint pi_pt = Endpoint::symbolic(ZZ(2), QQ(0));
    const Endpoint zero_pt = Endpoint::rational(QQ(0));

    // roots at odd multiples of pi, from the cotangent image
    unsigned m1 = adicity(gcot, VY);
    if (m1 > 0) {
        report.periodic.push_back({{pi_pt, pi_pt}, 1, m1, 0});
        report.periodic.push_back({{pi_pt, pi_pt}, 1, m1, -1});
    }
    // the root at 0
    if (sgn(f.eval_all(QQ(0), QQ(0), QQ(1))) == 0)
        report.bounded.push_back({{zero_pt, zero_pt}, multiplicity_at_zero(f)});
    // roots at even multiples of pi
    unsigned m3 = adicity(g, VY);
    if (m3 > 0) {
        report.periodic.push_back({{zero_pt, zero_pt}, 1, m3, 1});
        report.periodic.push_back({{zero_pt, zero_pt}, 1, m3, -1});
        g = shift_down(g, VY, m3);
    }

    PPIS I;
    PPIS Im;
    bool have_ppis = g.degree(VY) >= 1;
    if (have_ppis) {
        I = build_ppis(g, eps);
        Im = mirror_ppis(I);
    }
    auto fr = factor(g);

    long kplus = 0, kminus = 0;
    std::vector<FamilyDraft> drafts;
    std::vector<BoundedHit> hits;

    for (const auto& [gi, pi] : fr.factors) {
        if (gi.degree(VY) >= 1) {
            auto res1 = complete_isolating_far_zero(gi, I);
            kplus = std::max(kplus, res1.k_star);
            for (const auto& b : res1.bunches)
                drafts.push_back({b.lo.doubled(), b.hi.doubled(), b.count, pi, +1});

            mpoly gin = mirror_xy(gi).primitive().second;
            auto res2 = complete_isolating_far_zero(gin, Im);
            kminus = std::min(kminus, -res2.k_star);
            for (const auto& b : res2.bunches)
                drafts.push_back({-b.hi.doubled(), -b.lo.doubled(), b.count, pi, -1});
        } else {
            // rational factor in Q[x]: the nonzero algebraic roots
            upoly u = upoly::from_mpoly(gi, VX);
            if (u.degree() < 1)
                continue;
            for (auto box : isolate(u)) {
                if (box.exact && sgn(box.a) == 0)
                    continue; // 0 is owned by the multiplicity-at-zero record
                while (!box.exact && box.a < 0 && 0 < box.b)
                    box = refine_step(u, box);
                if (box.exact && sgn(box.a) == 0)
                    continue;
                BoundedHit h;
                if (box.exact) {
                    h.kind = BoundedHit::Kind::point;
                    h.value = HalfEndpoint::from_rational(box.a);
                } else {
                    h.kind = BoundedHit::Kind::algebraic;
                    h.a = box.a;
                    h.b = box.b;
                    h.poly = u;
                }
                h.factor = gi;
                h.multiplicity = pi;
                hits.push_back(h);
            }
        }
    }

    // unified thresholds across factors
    for (const auto& d : drafts)
        report.periodic.push_back({{d.lo, d.hi}, d.count, d.mult,
                                   d.direction > 0 ? kplus + 1 : kminus - 1});

    // bounded window, period by period, one cached context per factor
    std::vector<std::pair<FactorQuarterCache, unsigned>> ctxs;
    for (const auto& [gi, pi] : fr.factors)
        if (gi.degree(VY) >= 1)
            ctxs.push_back({FactorQuarterCache(gi), pi});
    for (long k = kminus; k <= kplus; ++k) {
        for (auto& [ctx, pi] : ctxs) {
            std::vector<BoundedHit> part;
            bounded_roots_for_factor(ctx, pi, k, part);
            for (auto& h : part) {
                if (h.is_point() && h.value.rational && sgn(h.value.q) == 0)
                    continue; // drop [0,0]
                hits.push_back(std::move(h));
            }
        }
    }

    // widths below eps/2 in half coordinates (so below eps once doubled),
    // then pairwise disjoint
    const QQ half_eps = eps / 2;
    for (auto& h : hits)
        while (!h.is_point() && h.coordinate_width() >= half_eps)
            h.refine_once();
    refine_disjoint(hits);

    for (const auto& h : hits)
        report.bounded.push_back({{h.lo().doubled(), h.hi().doubled()},
                                  h.multiplicity});

    std::sort(report.bounded.begin(), report.bounded.end(),
              [](const BoundedRootRecord& a, const BoundedRootRecord& b) {
                  return interval_lt(a.interval, b.interval);
              });
    std::sort(report.periodic.begin(), report.periodic.end(),
              [](const PeriodicFamily& a, const PeriodicFamily& b) {
                  if (a.threshold != b.threshold)
                      return a.threshold < b.threshold;
                  return interval_lt(a.base, b.base);
              });
    return report;
}

} // namespace mtproot
