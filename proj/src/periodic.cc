#include <mtproot/periodic.hh>
#include <mtproot/factor.hh>
#include <mtproot/polyops.hh>
#include <mtproot/uniroot.hh>

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace mtproot {

std::vector<QQ> PPIS::finite_endpoints() const
{
    std::vector<QQ> out;
    out.push_back(b0);
    for (auto& [a, b] : interior) {
        out.push_back(a);
        out.push_back(b);
    }
    out.push_back(a_last);
    return out;
}

PPIS build_ppis(const mpoly& g, const QQ& eps)
{
    if (g.degree(VY) < 1)
        throw std::invalid_argument("build_ppis: deg(g,y) >= 1 required");
    if (sgn(eps) <= 0)
        throw std::invalid_argument("build_ppis: eps > 0 required");

    PPIS I;
    upoly lc = upoly::from_mpoly(g.lc_wrt(VX), VY);
    std::vector<RootBox> boxes;
    if (lc.degree() >= 1)
        boxes = isolate(lc);

    // a rational width below eps/2 also bounds the arctan-length (arctan is
    // 1-Lipschitz)
    QQ target = eps / 2;
    upoly sf = lc;
    if (lc.degree() >= 1) {
        upoly gg = upoly_gcd(lc, lc.derivative());
        if (gg.degree() > 0)
            sf = lc.divrem(gg).first;
    }
    for (auto& b : boxes)
        while (!b.exact && b.b - b.a >= target)
            b = refine_step(sf, b);

    // widen exact points into small open intervals with non-root endpoints
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        auto& b = boxes[i];
        if (!b.exact) {
            I.interior.push_back({b.a, b.b});
            continue;
        }
        QQ h = target / 4;
        if (i > 0)
            h = std::min(h, QQ((b.a - boxes[i - 1].b) / 3));
        if (i + 1 < boxes.size())
            h = std::min(h, QQ((boxes[i + 1].a - b.a) / 3));
        assert(sgn(h) > 0);
        I.interior.push_back({b.a - h, b.a + h});
    }

    QQ first_a = I.interior.empty() ? QQ(0) : I.interior.front().first;
    QQ last_b = I.interior.empty() ? QQ(0) : I.interior.back().second;
    // arctan(b0) + pi/2 = arctan(-1/b0) <= -1/b0 < eps/2 for b0 <= -2/eps
    QQ bound = QQ(2) / eps;
    I.b0 = -(QQ(ceil_qq(bound)) + 1);
    if (I.b0 >= first_a)
        I.b0 = first_a - 1;
    I.a_last = QQ(ceil_qq(bound)) + 1;
    if (I.a_last <= last_b)
        I.a_last = last_b + 1;
    return I;
}

PPIS mirror_ppis(const PPIS& I)
{
    PPIS M;
    M.b0 = -I.a_last;
    M.a_last = -I.b0;
    for (auto it = I.interior.rbegin(); it != I.interior.rend(); ++it)
        M.interior.push_back({-it->second, -it->first});
    return M;
}

namespace {

// smallest natural k with (k + 1/2) pi > bound
long smallest_k_above(const QQ& bound)
{
    if (sgn(bound) <= 0)
        return 0;
    for (long k = 0;; ++k) {
        QQ factor = rat(2 * k + 1, 2);
        bool above = false;
        for (unsigned bits = 32;; bits *= 2) {
            Enclosure v = pi_enclosure(bits) * factor;
            if (v.lo > bound) {
                above = true;
                break;
            }
            if (v.hi < bound)
                break;
            if (bits > (1u << 20))
                throw std::runtime_error("smallest_k_above: stalled");
        }
        if (above)
            return k;
    }
}

// smallest integer strictly above (k + 1/2) pi
long first_integer_beyond(long k)
{
    QQ factor = rat(2 * k + 1, 2);
    for (unsigned bits = 32;; bits *= 2) {
        Enclosure v = pi_enclosure(bits) * factor;
        ZZ flo = floor_qq(v.lo), fhi = floor_qq(v.hi);
        if (flo == fhi)
            return fhi.get_si() + 1;
        if (bits > (1u << 20))
            throw std::runtime_error("first_integer_beyond: stalled");
    }
}

// root bound over the factors of the paper's product polynomial, computed
// factor-wise (the roots of a product are the union of the factors' roots)
QQ factorwise_root_bound(const std::vector<upoly>& factors)
{
    QQ best(0);
    bool any = false;
    for (const auto& f : factors) {
        if (f.is_zero())
            throw std::invalid_argument("root bound: zero factor");
        if (f.degree() < 1)
            continue;
        QQ b = root_upper_bound(f);
        if (!any || b > best) {
            best = b;
            any = true;
        }
    }
    return any ? best : QQ(0);
}

} // namespace

FarZeroResult isolating_far_zero(const mpoly& g, const PPIS& I)
{
    if (g.degree(VY) < 1)
        throw std::invalid_argument("isolating_far_zero: deg(g,y) >= 1 required");

    std::vector<upoly> bound_factors;
    bound_factors.push_back(upoly::from_mpoly(g.lc_wrt(VY), VX));
    bound_factors.push_back(upoly::from_mpoly(discriminant(g, VY), VX));
    PPIS J = I;
    for (std::size_t idx = 0;; ++idx) {
        // endpoint evaluations; nudge an endpoint inward in the (impossible
        // for irreducible inputs, defensive otherwise) degenerate case
        bool ok = true;
        for (const QQ& q : J.finite_endpoints()) {
            if (g.eval(VY, q).is_zero()) {
                ok = false;
                break;
            }
        }
        if (ok)
            break;
        if (idx >= 8)
            throw std::runtime_error("isolating_far_zero: degenerate PPIS endpoint");
        for (auto& [a, b] : J.interior) {
            QQ w = (b - a) / 1024;
            if (g.eval(VY, a).is_zero())
                a += w;
            if (g.eval(VY, b).is_zero())
                b -= w;
        }
        if (g.eval(VY, J.b0).is_zero())
            J.b0 -= 1;
        if (g.eval(VY, J.a_last).is_zero())
            J.a_last += 1;
    }
    for (const QQ& q : J.finite_endpoints())
        bound_factors.push_back(upoly::from_mpoly(g.eval(VY, q), VX));

    FarZeroResult res;
    res.k_prime = smallest_k_above(factorwise_root_bound(bound_factors));
    res.x0 = first_integer_beyond(res.k_prime);

    // count the roots of g(x0, y) per PPIS slot
    upoly gy = upoly::from_mpoly(g.eval(VX, QQ(res.x0)), VY);
    std::vector<unsigned> counts(J.s() + 2, 0);
    if (!gy.is_zero() && gy.degree() >= 1) {
        upoly sfp = gy;
        upoly gg = upoly_gcd(gy, gy.derivative());
        if (gg.degree() > 0)
            sfp = gy.divrem(gg).first;
        for (auto box : isolate(gy)) {
            for (;;) {
                // locate the box within the slots
                long slot = -1;
                const QQ& lo = box.a;
                const QQ& hi = box.b;
                if (box.exact ? lo < J.b0 : hi <= J.b0)
                    slot = 0;
                else if (box.exact ? lo > J.a_last : lo >= J.a_last)
                    slot = (long)J.s() + 1;
                else {
                    for (std::size_t j = 0; j < J.s(); ++j) {
                        const auto& [a, b] = J.interior[j];
                        bool inside = box.exact ? (a < lo && lo < b)
                                                : (a <= lo && hi <= b);
                        if (inside) {
                            slot = (long)j + 1;
                            break;
                        }
                    }
                }
                if (slot >= 0) {
                    counts[(std::size_t)slot] += 1;
                    break;
                }
                if (box.exact)
                    throw std::logic_error("isolating_far_zero: root on a PPIS gap");
                box = refine_step(sfp, box);
            }
        }
    }

    for (std::size_t j = 0; j < counts.size(); ++j) {
        if (counts[j] == 0)
            continue;
        PeriodicBunch b;
        b.count = counts[j];
        b.j = j;
        if (j == 0) {
            b.lo = HalfEndpoint::quarter(ZZ(-2), QQ(0)); // -pi/2
            b.hi = HalfEndpoint::quarter(ZZ(0), J.b0);
        } else if (j == counts.size() - 1) {
            b.lo = HalfEndpoint::quarter(ZZ(0), J.a_last);
            b.hi = HalfEndpoint::quarter(ZZ(2), QQ(0)); // +pi/2
        } else {
            b.lo = HalfEndpoint::quarter(ZZ(0), J.interior[j - 1].first);
            b.hi = HalfEndpoint::quarter(ZZ(0), J.interior[j - 1].second);
        }
        res.bunches.push_back(b);
    }
    return res;
}

namespace {

const long kDeltaNumerators[] = {999, 997, 991, 983, 977, 971, 967, 953,
                                 947, 941, 937, 929, 919, 911, 907, 887};

// Choose delta from the schedule so that res(dg/dx + delta dg/dy, g, y) is
// not the zero polynomial, and return that resultant.  Specializing delta
// before the elimination computes the lemma's polynomial directly (when the
// y-degree drops at some delta, the two routes differ only by a power of
// lc(g,y), which never affects the zero test nor adds new roots beyond the
// lc factor that already enters the bound).
std::pair<QQ, mpoly> pick_delta(const mpoly& g, bool positive)
{
    mpoly gx = g.derivative(VX), gy = g.derivative(VY);
    for (long num : kDeltaNumerators) {
        QQ delta = rat(positive ? num : -num, 1000);
        mpoly d = resultant(gx + gy * delta, g, VY);
        if (!d.is_zero())
            return {delta, d};
    }
    throw std::runtime_error("pick_delta: schedule exhausted");
}

} // namespace

CompleteFarZeroResult complete_isolating_far_zero(const mpoly& g, const PPIS& I)
{
    if (adicity(g, VY) > 0)
        throw std::invalid_argument("complete_isolating_far_zero: y | g");
    if (g.degree(VY) < 1)
        throw std::invalid_argument("complete_isolating_far_zero: deg(g,y) >= 1");

    CompleteFarZeroResult res;
    auto far = isolating_far_zero(g, I);
    res.k_prime = far.k_prime;
    res.bunches = std::move(far.bunches);

    auto [delta1, d1] = pick_delta(g, true);
    res.delta1 = delta1;
    {
        std::vector<upoly> fs;
        fs.push_back(upoly::from_mpoly(d1, VX));
        fs.push_back(upoly::from_mpoly(g.lc_wrt(VY), VX));
        fs.push_back(upoly::from_mpoly(discriminant(g, VY), VX));
        res.k_dprime = smallest_k_above(factorwise_root_bound(fs));
    }

    mpoly h = reciprocal(g);
    auto [delta2, d2] = pick_delta(h, false);
    res.delta2 = delta2;
    {
        std::vector<upoly> fs;
        fs.push_back(upoly::from_mpoly(d2, VX));
        fs.push_back(upoly::from_mpoly(h.lc_wrt(VY), VX));
        fs.push_back(upoly::from_mpoly(discriminant(h, VY), VX));
        res.k_tprime = smallest_k_above(factorwise_root_bound(fs));
    }

    res.k_star = std::max({res.k_prime, res.k_dprime, res.k_tprime});
    return res;
}

} // namespace mtproot
