#include <mtproot/oracle.hh>
#include <mtproot/polyops.hh>

#include <mpfr.h>

#include <algorithm>
#include <cassert>
#include <sstream>

namespace mtproot {

namespace {

// minimal mpfr interval with directed rounding
class MI {
public:
    explicit MI(mpfr_prec_t prec)
    {
        mpfr_init2(lo_, prec);
        mpfr_init2(hi_, prec);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }
    MI(const MI& o)
    {
        mpfr_init2(lo_, mpfr_get_prec(o.lo_));
        mpfr_init2(hi_, mpfr_get_prec(o.hi_));
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    MI& operator=(const MI& o)
    {
        if (this != &o) {
            mpfr_set_prec(lo_, mpfr_get_prec(o.lo_));
            mpfr_set_prec(hi_, mpfr_get_prec(o.hi_));
            mpfr_set(lo_, o.lo_, MPFR_RNDD);
            mpfr_set(hi_, o.hi_, MPFR_RNDU);
        }
        return *this;
    }
    ~MI()
    {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(lo_); }

    static MI from_q(const QQ& q, mpfr_prec_t prec)
    {
        MI r(prec);
        mpfr_set_q(r.lo_, const_cast<mpq_ptr>(q.get_mpq_t()), MPFR_RNDD);
        mpfr_set_q(r.hi_, const_cast<mpq_ptr>(q.get_mpq_t()), MPFR_RNDU);
        return r;
    }
    static MI from_qq(const QQ& lo, const QQ& hi, mpfr_prec_t prec)
    {
        MI r(prec);
        mpfr_set_q(r.lo_, const_cast<mpq_ptr>(lo.get_mpq_t()), MPFR_RNDD);
        mpfr_set_q(r.hi_, const_cast<mpq_ptr>(hi.get_mpq_t()), MPFR_RNDU);
        return r;
    }

    MI operator+(const MI& o) const
    {
        MI r(prec());
        mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
        mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
        return r;
    }
    MI operator*(const MI& o) const
    {
        MI r(prec());
        mpfr_t t;
        mpfr_init2(t, prec());
        bool first = true;
        auto consider = [&](mpfr_srcptr a, mpfr_srcptr b) {
            mpfr_mul(t, a, b, MPFR_RNDD);
            if (first || mpfr_cmp(t, r.lo_) < 0)
                mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_mul(t, a, b, MPFR_RNDU);
            if (first || mpfr_cmp(t, r.hi_) > 0)
                mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        };
        consider(lo_, o.lo_);
        consider(lo_, o.hi_);
        consider(hi_, o.lo_);
        consider(hi_, o.hi_);
        mpfr_clear(t);
        return r;
    }

    bool contains_zero() const
    {
        return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
    }
    int certain_sign() const
    {
        if (mpfr_sgn(lo_) > 0)
            return 1;
        if (mpfr_sgn(hi_) < 0)
            return -1;
        return 0;
    }

    // sin over the interval via the midpoint and |sin'| <= 1
    MI msin() const { return lipschitz(mpfr_sin); }
    MI mcos() const { return lipschitz(mpfr_cos); }

    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }
    mpfr_ptr lo() { return lo_; }
    mpfr_ptr hi() { return hi_; }

private:
    mpfr_t lo_, hi_;

    MI lipschitz(int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) const
    {
        mpfr_prec_t p = prec();
        MI r(p);
        mpfr_t mid, rad, t;
        mpfr_init2(mid, p);
        mpfr_init2(rad, p);
        mpfr_init2(t, p);
        mpfr_add(mid, lo_, hi_, MPFR_RNDN);
        mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
        mpfr_sub(rad, hi_, lo_, MPFR_RNDU); // over-estimate of the radius
        fn(r.lo_, mid, MPFR_RNDD);
        fn(r.hi_, mid, MPFR_RNDU);
        mpfr_sub(r.lo_, r.lo_, rad, MPFR_RNDD);
        mpfr_add(r.hi_, r.hi_, rad, MPFR_RNDU);
        mpfr_set_si(t, -1, MPFR_RNDN);
        if (mpfr_cmp(r.lo_, t) < 0)
            mpfr_set(r.lo_, t, MPFR_RNDD);
        mpfr_set_si(t, 1, MPFR_RNDN);
        if (mpfr_cmp(r.hi_, t) > 0)
            mpfr_set(r.hi_, t, MPFR_RNDU);
        mpfr_clear(mid);
        mpfr_clear(rad);
        mpfr_clear(t);
        return r;
    }
};

// f(x, sin x, cos x) over an x-interval
MI eval_mtp(const mpoly& f, const MI& x)
{
    const mpfr_prec_t prec = x.prec();
    MI s = x.msin();
    MI c = x.mcos();
    long dx = std::max(0L, f.degree(VX));
    long dy = std::max(0L, f.degree(VY));
    long dz = std::max(0L, f.degree(VZ));
    std::vector<MI> px(dx + 1, MI(prec)), py(dy + 1, MI(prec)), pz(dz + 1, MI(prec));
    px[0] = MI::from_q(QQ(1), prec);
    py[0] = px[0];
    pz[0] = px[0];
    for (long i = 1; i <= dx; ++i)
        px[i] = px[i - 1] * x;
    for (long i = 1; i <= dy; ++i)
        py[i] = py[i - 1] * s;
    for (long i = 1; i <= dz; ++i)
        pz[i] = pz[i - 1] * c;
    MI acc(prec);
    for (const auto& [m, coef] : f.terms()) {
        MI term = MI::from_q(coef, prec) * px[m[0]] * py[m[1]] * pz[m[2]];
        acc = acc + term;
    }
    return acc;
}

// first-order (mean value) form: f(x) in f(mid) + f'(X) (x - mid)
MI eval_mtp_mean(const mpoly& f, const mpoly& df, const MI& x)
{
    const mpfr_prec_t prec = x.prec();
    MI mid(prec);
    mpfr_add(mid.lo(), x.lo(), x.hi(), MPFR_RNDN);
    mpfr_div_2ui(mid.lo(), mid.lo(), 1, MPFR_RNDN);
    mpfr_set(mid.hi(), mid.lo(), MPFR_RNDU);

    MI dev(prec); // [-r, r] with r >= max distance from mid
    mpfr_sub(dev.hi(), x.hi(), x.lo(), MPFR_RNDU);
    mpfr_neg(dev.lo(), dev.hi(), MPFR_RNDD);

    return eval_mtp(f, mid) + eval_mtp(df, x) * dev;
}

// Taylor form around the midpoint through the whole derivative chain:
// f(mid + t) = sum_j D^j f(mid) t^j / j! + D^M f(X) t^M / M!.  The residual
// term is the only interval contribution, so near a multiplicity-m root
// (m < M) the enclosure width scales like w^m and exclusion succeeds once
// the segment is about as far from the root as it is wide.
MI eval_mtp_taylor(const std::vector<mpoly>& chain, const MI& x)
{
    const mpfr_prec_t prec = x.prec();
    MI mid(prec);
    mpfr_add(mid.lo(), x.lo(), x.hi(), MPFR_RNDN);
    mpfr_div_2ui(mid.lo(), mid.lo(), 1, MPFR_RNDN);
    mpfr_set(mid.hi(), mid.lo(), MPFR_RNDU);

    MI dev(prec);
    mpfr_sub(dev.hi(), x.hi(), x.lo(), MPFR_RNDU);
    mpfr_neg(dev.lo(), dev.hi(), MPFR_RNDD);

    const std::size_t M = chain.size() - 1;
    MI acc = eval_mtp(chain[M], x);
    for (std::size_t j = M; j-- > 0;) {
        MI scale = MI::from_q(rat(1, (long)(j + 1)), prec);
        acc = eval_mtp(chain[j], mid) + acc * dev * scale;
    }
    return acc;
}

int point_sign(const mpoly& f, const QQ& t, mpfr_prec_t prec)
{
    MI x = MI::from_q(t, prec);
    return eval_mtp(f, x).certain_sign();
}

// sign at t, escalating precision; 0 means undecided (possibly a true zero)
int point_sign_robust(const mpoly& f, const QQ& t, mpfr_prec_t prec)
{
    for (mpfr_prec_t p = prec; p <= prec * 8; p *= 2) {
        int s = point_sign(f, t, p);
        if (s != 0)
            return s;
    }
    return 0;
}

mpoly mtp_derivative(const mpoly& f)
{
    return f.derivative(VX) + mpoly::var(VZ) * f.derivative(VY) -
           mpoly::var(VY) * f.derivative(VZ);
}

void collect_atoms(const std::vector<mpoly>& chain, const QQ& lo, const QQ& hi,
                   const QQ& floor_w, mpfr_prec_t prec, long& budget,
                   std::vector<std::pair<QQ, QQ>>& atoms)
{
    // out of budget: emit whole segments; the cluster analysis then reports
    // them inconclusive rather than claiming anything
    if (budget <= 0) {
        atoms.push_back({lo, hi});
        return;
    }
    --budget;
    MI x = MI::from_qq(lo, hi, prec);
    MI v = hi - lo <= rat(1, 4) ? eval_mtp_taylor(chain, x) : eval_mtp(chain[0], x);
    if (!v.contains_zero())
        return;
    if (hi - lo <= floor_w) {
        atoms.push_back({lo, hi});
        return;
    }
    QQ mid = (lo + hi) / 2;
    collect_atoms(chain, lo, mid, floor_w, prec, budget, atoms);
    collect_atoms(chain, mid, hi, floor_w, prec, budget, atoms);
}

std::vector<std::pair<QQ, QQ>> clusters_at_floor(const std::vector<mpoly>& chain,
                                                 const QQ& a, const QQ& b,
                                                 const QQ& floor_w,
                                                 mpfr_prec_t prec, long budget)
{
    std::vector<std::pair<QQ, QQ>> atoms;
    collect_atoms(chain, a, b, floor_w, prec, budget, atoms);
    std::vector<std::pair<QQ, QQ>> clusters;
    for (auto& at : atoms) {
        if (!clusters.empty() && clusters.back().second == at.first)
            clusters.back().second = at.second;
        else
            clusters.push_back(at);
    }
    return clusters;
}

// Analyze one cluster.  On failure at the coarse resolution, one bounded
// retry at the final floor separates nearby roots; anything still unresolved
// is reported inconclusive (never as a certified claim).
void analyze_cluster(const std::vector<mpoly>& chain, QQ L, QQ R,
                     const QQ& final_w, mpfr_prec_t prec, int depth,
                     std::vector<CertifiedRoot>& out)
{
    CertifiedRoot root;
    root.lo = L;
    root.hi = R;

    // multiplicity: smallest m with D^m f certainly nonzero on the cluster
    unsigned mstar = 0;
    for (unsigned m = 1; m + 1 < chain.size(); ++m) {
        MI x = MI::from_qq(L, R, prec);
        MI v = eval_mtp_mean(chain[m], chain[m + 1], x);
        if (!v.contains_zero()) {
            mstar = m;
            break;
        }
    }

    int sL = 0, sR = 0;
    if (mstar != 0) {
        // D^(m-1) f must change sign across (a slightly widened) cluster
        const mpoly& g = chain[mstar - 1];
        QQ step = (R - L) / 7 + final_w;
        QQ Lx = L, Rx = R;
        for (int t = 0; t < 3 && sL == 0; ++t) {
            Lx = L - QQ(t) * step;
            sL = point_sign_robust(g, Lx, prec);
        }
        for (int t = 0; t < 3 && sR == 0; ++t) {
            Rx = R + QQ(t) * step;
            sR = point_sign_robust(g, Rx, prec);
        }
        if (sL * sR == -1) {
            // tighten the bracket by bisection on D^(m-1) f
            while (Rx - Lx > final_w) {
                QQ mid = (Lx + Rx) / 2;
                int sm = point_sign_robust(g, mid, prec);
                if (sm == 0) {
                    // likely an exact zero of g; shift the cut point
                    mid = mid + (Rx - Lx) / 7;
                    sm = point_sign_robust(g, mid, prec);
                    if (sm == 0)
                        break; // keep the current bracket
                }
                if (sm == sL)
                    Lx = mid;
                else
                    Rx = mid;
            }
            root.lo = Lx;
            root.hi = Rx;
            root.multiplicity = mstar;
            root.cert = mstar == 1 ? CertifiedRoot::Cert::sign_change
                                   : CertifiedRoot::Cert::derivative_chain;
            out.push_back(root);
            return;
        }
    }

    if (depth == 0) {
        auto finer = clusters_at_floor(chain, L, R, final_w, prec, 20000);
        if (!finer.empty() && finer.size() <= 16) {
            for (auto& [l2, r2] : finer)
                analyze_cluster(chain, l2, r2, final_w, prec, 1, out);
            return;
        }
    }
    root.inconclusive = true;
    out.push_back(root);
}

} // namespace

std::vector<CertifiedRoot> numeric_roots_in_window(const mpoly& f, const QQ& a,
                                                   const QQ& b, unsigned bits)
{
    if (!(a < b))
        throw std::invalid_argument("numeric_roots_in_window: need a < b");
    if (mtp_to_tan(f).is_zero())
        throw std::invalid_argument("numeric_roots_in_window: identically zero");

    const mpfr_prec_t prec = (mpfr_prec_t)bits + 64;
    const QQ coarse_w = pow2_inv(std::max(16u, bits / 8));
    const QQ final_w = pow2_inv(bits / 2);

    std::vector<mpoly> chain{f};
    for (int j = 1; j <= 9; ++j)
        chain.push_back(mtp_derivative(chain.back()));

    std::vector<CertifiedRoot> roots;
    for (auto& [L, R] : clusters_at_floor(chain, a, b, coarse_w, prec, 400000))
        analyze_cluster(chain, L, R, final_w, prec, 0, roots);
    std::sort(roots.begin(), roots.end(),
              [](const CertifiedRoot& x, const CertifiedRoot& y) {
                  return x.lo < y.lo;
              });
    return roots;
}

namespace {

struct Instance {
    Enclosure lo, hi; // rational enclosures of the endpoints
    bool point = false;
    unsigned count = 1;
    unsigned mult = 1;
    bool enforce = true; // capacity enforced (fully inside the window)
    std::string label;
};

std::string approx(const Enclosure& e)
{
    std::ostringstream os;
    os.precision(6);
    os << e.lo.get_d();
    return os.str();
}

} // namespace

ValidationResult validate_report(const mpoly& f, const MTPRootReport& report,
                                 unsigned periods, unsigned bits)
{
    const unsigned ebits = 256;
    Enclosure two_pi = pi_enclosure(ebits) * QQ(2);

    std::vector<Instance> instances;
    auto family_instance = [&](const PeriodicFamily& p, long kappa) {
        Instance in;
        Enclosure shift = two_pi * QQ(kappa);
        in.lo = p.base.lo.enclose(ebits) + shift;
        in.hi = p.base.hi.enclose(ebits) + shift;
        in.point = p.base.is_point();
        in.count = p.count;
        in.mult = p.multiplicity;
        std::ostringstream os;
        os << "family(" << p.base.lo.str() << "," << p.base.hi.str()
           << ") thr " << p.threshold << " at k=" << kappa;
        in.label = os.str();
        return in;
    };

    for (const auto& b : report.bounded) {
        Instance in;
        in.lo = b.interval.lo.enclose(ebits);
        in.hi = b.interval.hi.enclose(ebits);
        in.point = b.interval.is_point();
        in.count = 1;
        in.mult = b.multiplicity;
        in.label = "bounded [" + b.interval.lo.str() + ", " + b.interval.hi.str() + "]";
        instances.push_back(in);
    }
    for (const auto& p : report.periodic) {
        for (unsigned i = 0; i < periods; ++i) {
            long kappa = p.threshold >= 0 ? p.threshold + (long)i
                                          : p.threshold - (long)i;
            instances.push_back(family_instance(p, kappa));
        }
    }
    if (instances.empty())
        return {true, "nothing to validate"};

    QQ wlo = instances[0].lo.lo, whi = instances[0].hi.hi;
    for (const auto& in : instances) {
        wlo = std::min(wlo, QQ(in.lo.lo));
        whi = std::max(whi, QQ(in.hi.hi));
    }
    wlo -= rat(1, 2);
    whi += rat(1, 2);

    // guard instances: any other family repetition that pokes into the window
    for (const auto& p : report.periodic) {
        for (long dir : {1L, -1L}) {
            for (long kappa = p.threshold + dir * (long)periods;; kappa += dir) {
                if (p.threshold >= 0 && kappa < p.threshold)
                    break;
                if (p.threshold < 0 && kappa > p.threshold)
                    break;
                Instance in = family_instance(p, kappa);
                if (in.hi.hi < wlo || in.lo.lo > whi)
                    break;
                in.enforce = in.lo.lo > wlo && in.hi.hi < whi;
                instances.push_back(in);
            }
        }
    }

    auto roots = numeric_roots_in_window(f, wlo, whi, bits);
    std::ostringstream err;
    for (const auto& r : roots)
        if (r.inconclusive)
            err << "inconclusive oracle cluster near " << r.lo.get_d() << "\n";
    if (!err.str().empty())
        return {false, err.str()};

    // match roots to instances
    std::vector<unsigned> used(instances.size(), 0);
    for (const auto& r : roots) {
        long chosen = -1;
        int candidates = 0;
        bool mult_mismatch = false;
        for (std::size_t i = 0; i < instances.size(); ++i) {
            const Instance& in = instances[i];
            bool contains;
            if (in.point)
                contains = r.lo < in.lo.lo && in.hi.hi < r.hi;
            else
                contains = in.lo.hi < r.lo && r.hi < in.hi.lo;
            if (!contains)
                continue;
            if (in.mult != r.multiplicity) {
                mult_mismatch = true;
                continue;
            }
            if (used[i] >= in.count)
                continue;
            ++candidates;
            if (chosen < 0)
                chosen = (long)i;
        }
        if (chosen < 0) {
            err << "oracle root near " << r.lo.get_d()
                << (mult_mismatch ? " has mismatched multiplicity "
                                  : " is not covered by the report ")
                << "(estimated multiplicity " << r.multiplicity << ")\n";
            continue;
        }
        used[(std::size_t)chosen] += 1;
    }
    for (std::size_t i = 0; i < instances.size(); ++i) {
        if (!instances[i].enforce)
            continue;
        if (used[i] != instances[i].count)
            err << instances[i].label << " near " << approx(instances[i].lo)
                << ": expected " << instances[i].count << " root(s), matched "
                << used[i] << "\n";
    }
    if (!err.str().empty())
        return {false, err.str()};
    return {true, ""};
}

} // namespace mtproot
