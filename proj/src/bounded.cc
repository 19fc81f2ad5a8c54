#include <mtproot/bounded.hh>
#include <mtproot/exact_sign.hh>
#include <mtproot/factor.hh>
#include <mtproot/polyops.hh>

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>

namespace mtproot {

namespace {

// sign of w_j just right (plus) / left (minus) of a point, lifting across
// zeros through the derivative chain
Sign one_sided_sign(const WeakFourierSequence& seq, std::size_t j,
                    const QQ& point, Side side)
{
    for (std::size_t i = j; i <= seq.length(); ++i) {
        Sign l = i == seq.length() ? sign_of(seq.last_constant)
                                   : wfs_sign_at(seq, i, point);
        if (l == 0)
            continue;
        // lift back down: each zero level copies (plus) or flips (minus)
        if (side == Side::minus && (i - j) % 2 != 0)
            return -l;
        return l;
    }
    throw std::logic_error("one_sided_sign: sequence tail vanished");
}

// number of roots of u in the open interval (c,d)
unsigned count_roots_open(upoly u, const QQ& c, const QQ& d)
{
    if (u.is_zero())
        throw std::invalid_argument("count_roots_open: zero polynomial");
    if (u.degree() == 0)
        return 0;
    upoly lin_c = upoly::from_coeffs({-c, QQ(1)});
    upoly lin_d = upoly::from_coeffs({-d, QQ(1)});
    while (sign_of(u.eval(c)) == 0)
        u = u.divrem(lin_c).first;
    while (sign_of(u.eval(d)) == 0)
        u = u.divrem(lin_d).first;
    if (u.degree() < 1)
        return 0;
    return count_roots_in(u, c, d);
}

// ---- interval-coefficient polynomials in y, sound for y >= 0 ----

using ipoly = std::vector<Enclosure>; // ascending

ipoly imul(const ipoly& a, const ipoly& b)
{
    if (a.empty() || b.empty())
        return {};
    ipoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = r[i + j] + a[i] * b[j];
    return r;
}

ipoly iadd(ipoly a, const ipoly& b)
{
    if (b.size() > a.size())
        a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] = a[i] + b[i];
    return a;
}

ipoly from_upoly(const upoly& p)
{
    ipoly r;
    for (long i = 0; i <= p.degree(); ++i)
        r.push_back(Enclosure(p[(std::size_t)i]));
    return r;
}

// dyadic outward rounding keeps the one-sided bounds valid on y >= 0 while
// keeping the certificate computations on small integers
QQ dyadic_up(const QQ& q, unsigned long bits)
{
    QQ scaled = q;
    mpz_mul_2exp(scaled.get_num_mpz_t(), scaled.get_num().get_mpz_t(), bits);
    scaled.canonicalize();
    return rat(ceil_qq(scaled), ZZ(1)) / pow_zz(ZZ(2), bits);
}

QQ dyadic_down(const QQ& q, unsigned long bits) { return -dyadic_up(QQ(-q), bits); }

// bracket of x = r pi + arctan y on [0,1]: alternating Taylor sums plus a pi
// enclosure folded into the constant coefficient
ipoly shifted_arctan_bracket(const QQ& r, unsigned pairs, unsigned bits)
{
    ipoly a;
    a.resize(4 * pairs, Enclosure(QQ(0)));
    unsigned terms = 2 * pairs; // P_{2m} has 2m terms, last one interval
    for (unsigned i = 0; i + 1 < terms; ++i) {
        QQ coef = rat(i % 2 == 0 ? 1 : -1, 2 * (long)i + 1);
        a[2 * i + 1] = Enclosure(coef);
    }
    // last term: between dropping it and keeping it
    unsigned deg = 4 * pairs - 1;
    a[deg] = Enclosure(rat(-1, (long)deg), QQ(0));
    if (sgn(r) != 0) {
        Enclosure rpi = pi_enclosure(bits) * r;
        a[0] = a[0] + rpi;
    }
    // dyadic outward rounding keeps the later polynomial arithmetic on
    // small power-of-two denominators
    for (auto& e : a)
        e = Enclosure(dyadic_down(e.lo, bits + 32), dyadic_up(e.hi, bits + 32));
    return a;
}

upoly lower_poly(const ipoly& w)
{
    std::vector<QQ> c;
    for (const auto& e : w)
        c.push_back(dyadic_down(e.lo, 128));
    return upoly::from_coeffs(std::move(c));
}

upoly upper_poly(const ipoly& w)
{
    std::vector<QQ> c;
    for (const auto& e : w)
        c.push_back(dyadic_up(e.hi, 128));
    return upoly::from_coeffs(std::move(c));
}

bool no_roots_on_closed(const upoly& w, const QQ& c, const QQ& d)
{
    if (w.is_zero())
        return false;
    if (sign_of(w.eval(c)) == 0 || sign_of(w.eval(d)) == 0)
        return false;
    if (w.degree() < 1)
        return true;
    return count_roots_in(w, c, d) == 0;
}

} // namespace

std::optional<upoly> poly_multiple_test(const mpoly& Fl, const mpoly& F1)
{
    if (F1.is_zero())
        throw std::invalid_argument("poly_multiple_test: F1 = 0");
    auto q = Fl.divexact(F1);
    if (!q.has_value())
        return std::nullopt;
    if (q->degree(VX) > 0)
        return std::nullopt;
    return upoly::from_mpoly(*q, VY);
}

// limit polynomials for one weak Fourier sequence, cached per level n;
// reused across the whole quarter-isolation
class LimitPolys {
public:
    explicit LimitPolys(const WeakFourierSequence& seq) : seq_(seq) {}

    struct Level {
        upoly wmax, wmin;
    };

    const Level& level(unsigned n)
    {
        while (levels_.size() < n) {
            unsigned ln = (unsigned)levels_.size() + 1;
            ipoly X = shifted_arctan_bracket(seq_.r, ln + 2, 32 * ln);
            ipoly W;
            auto coeffs = seq_.F[0].coeffs_wrt(VX);
            for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
                W = imul(W, X);
                W = iadd(std::move(W), from_upoly(upoly::from_mpoly(*it, VY)));
            }
            levels_.push_back({upper_poly(W), lower_poly(W)});
        }
        return levels_[n - 1];
    }

private:
    const WeakFourierSequence& seq_;
    std::deque<Level> levels_;
};

// Certifies that w has no roots on [c,d] by a Descartes sign-variation count
// of the interval transform (variations 0 excludes roots; a positive count
// is treated as unknown, which only delays the caller's loop).
bool descartes_no_roots_on_closed(const upoly& w, const QQ& c, const QQ& d)
{
    if (w.is_zero())
        return false;
    if (sign_of(w.eval(c)) == 0 || sign_of(w.eval(d)) == 0)
        return false;
    if (w.degree() < 1)
        return true;

    // P(t) = w(c + (d-c) t) via Horner, then count variations of the (0,1)
    // Moebius transform
    const QQ s = d - c;
    std::vector<QQ> p{w.lc()};
    for (long k = w.degree(); k-- > 0;) {
        // p <- p * (c + s t) + w_k
        std::vector<QQ> np(p.size() + 1, QQ(0));
        for (std::size_t i = 0; i < p.size(); ++i) {
            np[i] += p[i] * c;
            np[i + 1] += p[i] * s;
        }
        np[0] += w[(std::size_t)k];
        p = std::move(np);
    }
    auto [scale, z] = upoly::from_coeffs(std::move(p)).primitive_zz();
    (void)scale;
    // reverse and shift by one: variations bound the roots in (0,1)
    std::vector<ZZ> rev(z.rbegin(), z.rend());
    while (!rev.empty() && sgn(rev.back()) == 0)
        rev.pop_back();
    const std::size_t n = rev.size();
    for (std::size_t k = 0; k + 1 < n; ++k)
        for (std::size_t j = n - 1; j >= 1 && j > k; --j)
            rev[j - 1] += rev[j];
    int last = 0;
    for (const auto& cz : rev) {
        int sg = sgn(cz);
        if (sg == 0)
            continue;
        if (last != 0 && sg != last)
            return false;
        last = sg;
    }
    return true;
}

std::pair<QQ, QQ> rational_endpoint_cached(const WeakFourierSequence& seq,
                                           LimitPolys& limits, std::size_t ell,
                                           QQ c, QQ d)
{
    for (unsigned n = 1;; ++n) {
        const LimitPolys::Level& lv = limits.level(n);
        QQ q = (c + d) / 2;
        if ((sign_of(lv.wmax.eval(q)) < 0 &&
             descartes_no_roots_on_closed(lv.wmax, c, d)) ||
            (sign_of(lv.wmin.eval(q)) > 0 &&
             descartes_no_roots_on_closed(lv.wmin, c, d)))
            return {c, d};

        // shrink around the simple root sr of w_ell
        Sign sq = wfs_sign_at(seq, ell, q);
        if (sq == 0) {
            c = (q * 63 + c) / 64;
            d = (q * 63 + d) / 64;
        } else if (one_sided_sign(seq, ell, c, Side::plus) * sq == -1) {
            d = q;
        } else {
            c = q;
        }
    }
}

std::pair<QQ, QQ> rational_endpoint(const WeakFourierSequence& seq,
                                    std::size_t ell, QQ c, QQ d)
{
    LimitPolys limits(seq);
    return rational_endpoint_cached(seq, limits, ell, std::move(c), std::move(d));
}

namespace {

// core of the quarter solver; tmpl carries the shift-independent sequence
// polynomials when the caller reuses them across periods
SubIbrResult sub_ibr_impl(const mpoly& g, const QQ& r,
                          std::shared_ptr<WeakFourierSequence>* tmpl)
{
    if (g.degree(VY) < 1)
        throw std::invalid_argument("sub_ibr: deg(g,y) >= 1 required");
    QQ r4 = r * 4;
    if (!is_integer(r4))
        throw std::invalid_argument("sub_ibr: r must be in Z or Z+1/4");

    SubIbrResult res;
    mpoly yp1 = mpoly::var(VY) + mpoly(1);
    if (g == yp1) {
        // tan x = -1 has no roots in (r pi, r pi + pi/4)
        res.seq = nullptr;
        return res;
    }
    bool quarter_shift = !is_integer(r);
    std::shared_ptr<WeakFourierSequence> seq;
    if (tmpl && *tmpl) {
        seq = std::make_shared<WeakFourierSequence>(**tmpl);
        seq->r = r; // the F_i do not depend on the shift
    } else {
        mpoly F1 = quarter_shift ? phi(g) : g;
        seq = std::make_shared<WeakFourierSequence>(weak_fourier_seq(F1, r));
        if (tmpl)
            *tmpl = std::make_shared<WeakFourierSequence>(*seq);
    }
    res.seq = seq;
    const std::size_t k = seq->length();

    struct Triple {
        QQ c, d;
        std::size_t m;
    };
    LimitPolys limits(*seq);
    std::vector<Triple> stack{{QQ(0), QQ(1), k}};
    while (!stack.empty()) {
        Triple t = stack.back();
        stack.pop_back();
        // one sign vector per side serves every sgc_{i,m} below
        std::vector<Sign> sp = sgc_signs(*seq, t.m, t.c, t.d, Side::plus);
        std::vector<Sign> sm = sgc_signs(*seq, t.m, t.c, t.d, Side::minus);
        std::vector<unsigned> vp(t.m + 2, 0), vm(t.m + 2, 0); // suffix changes
        for (std::size_t i = t.m; i-- > 1;) {
            vp[i] = vp[i + 1] + (sp[i] != sp[i + 1] ? 1 : 0);
            vm[i] = vm[i + 1] + (sm[i] != sm[i + 1] ? 1 : 0);
        }
        if (vp[1] < vm[1])
            throw std::logic_error("sub_ibr: negative sgc difference");
        unsigned diff = vp[1] - vm[1];
        if (diff == 0)
            continue;
        if (diff == 1) {
            res.intervals.push_back({t.c, t.d});
            continue;
        }
        std::size_t ell = 0;
        for (std::size_t i = 2; i <= t.m; ++i) {
            if (vp[i] - vm[i] == 1) {
                ell = i;
                break;
            }
        }
        if (ell == 0)
            throw std::logic_error("sub_ibr: no descent index");

        auto Q = poly_multiple_test(seq->F[ell - 1], seq->F[0]);
        if (Q.has_value()) {
            if (count_roots_open(*Q, t.c, t.d) == 0)
                res.intervals.push_back({t.c, t.d});
            continue;
        }
        auto [u, v] = rational_endpoint_cached(*seq, limits, ell, t.c, t.d);
        if (t.c < u)
            stack.push_back({t.c, u, ell});
        if (v < t.d)
            stack.push_back({v, t.d, ell});
    }
    std::sort(res.intervals.begin(), res.intervals.end());
    return res;
}

} // namespace

SubIbrResult sub_ibr(const mpoly& g, const QQ& r)
{
    return sub_ibr_impl(g, r, nullptr);
}

std::vector<QuarterRootInterval> sub_ibr_intervals(const mpoly& g, const QQ& r)
{
    auto res = sub_ibr(g, r);
    std::vector<QuarterRootInterval> out;
    for (auto& [c, d] : res.intervals)
        out.push_back({r, c, d});
    return out;
}

HalfEndpoint BoundedHit::lo() const
{
    switch (kind) {
    case Kind::point:
        return value;
    case Kind::quarter:
        if (mirrored)
            return HalfEndpoint::quarter(ZZ(QQ(-4 * r).get_num()), QQ(-d));
        return HalfEndpoint::quarter(ZZ(QQ(4 * r).get_num()), c);
    default:
        return HalfEndpoint::from_rational(a);
    }
}

HalfEndpoint BoundedHit::hi() const
{
    switch (kind) {
    case Kind::point:
        return value;
    case Kind::quarter:
        if (mirrored)
            return HalfEndpoint::quarter(ZZ(QQ(-4 * r).get_num()), QQ(-c));
        return HalfEndpoint::quarter(ZZ(QQ(4 * r).get_num()), d);
    default:
        return HalfEndpoint::from_rational(b);
    }
}

QQ BoundedHit::coordinate_width() const
{
    switch (kind) {
    case Kind::point:
        return QQ(0);
    case Kind::quarter:
        return d - c;
    default:
        return b - a;
    }
}

void BoundedHit::refine_once()
{
    if (kind == Kind::point)
        return;
    if (kind == Kind::algebraic) {
        RootBox box = RootBox::interval(a, b, multiplicity);
        box = refine_step(poly, box);
        if (box.exact) {
            kind = Kind::point;
            value = HalfEndpoint::from_rational(box.a);
        } else {
            a = box.a;
            b = box.b;
        }
        return;
    }
    // quarter: bisect in the arctan coordinate
    QQ mid = (c + d) / 2;
    Sign s = wfs_sign_at(*seq, 1, mid);
    if (s == 0) {
        // the root is exactly r pi + arctan(mid)
        kind = Kind::point;
        if (mirrored)
            value = HalfEndpoint::quarter(ZZ(QQ(-4 * r).get_num()), QQ(-mid));
        else
            value = HalfEndpoint::quarter(ZZ(QQ(4 * r).get_num()), mid);
        return;
    }
    unsigned left = sgc(*seq, 1, seq->length(), c, mid, Side::plus) -
                    sgc(*seq, 1, seq->length(), c, mid, Side::minus);
    if (left == 1)
        d = mid;
    else
        c = mid;
}

bool hits_overlap(const BoundedHit& x, const BoundedHit& y)
{
    if (x.is_point() && y.is_point())
        return compare_half(x.value, y.value) == 0;
    if (x.is_point())
        return compare_half(y.lo(), x.value) < 0 && compare_half(x.value, y.hi()) < 0;
    if (y.is_point())
        return compare_half(x.lo(), y.value) < 0 && compare_half(y.value, x.hi()) < 0;
    return compare_half(x.lo(), y.hi()) < 0 && compare_half(y.lo(), x.hi()) < 0;
}

void refine_disjoint(std::vector<BoundedHit>& hits)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < hits.size(); ++i)
            for (std::size_t j = i + 1; j < hits.size(); ++j)
                while (hits_overlap(hits[i], hits[j])) {
                    if (hits[i].is_point() && hits[j].is_point())
                        throw std::logic_error("refine_disjoint: duplicate point roots");
                    changed = true;
                    hits[i].refine_once();
                    hits[j].refine_once();
                }
    }
}

namespace {

// drop or trim algebraic boxes so they lie inside the open period around
// k pi and avoid the three special points
void place_algebraic_box(const upoly& sf, RootBox box, long k, const mpoly& fac,
                         unsigned mult, std::vector<BoundedHit>& out)
{
    HalfEndpoint lo_b = HalfEndpoint::quarter(ZZ(4 * k - 2), QQ(0));
    HalfEndpoint hi_b = HalfEndpoint::quarter(ZZ(4 * k + 2), QQ(0));
    std::vector<HalfEndpoint> specials{
        HalfEndpoint::quarter(ZZ(4 * k - 1), QQ(0)),
        HalfEndpoint::quarter(ZZ(4 * k), QQ(0)),
        HalfEndpoint::quarter(ZZ(4 * k + 1), QQ(0)),
    };

    if (box.exact) {
        HalfEndpoint v = HalfEndpoint::from_rational(box.a);
        if (compare_half(lo_b, v) >= 0 || compare_half(v, hi_b) >= 0)
            return;
        for (auto& s : specials)
            if (compare_half(v, s) == 0)
                return; // rational special point: only 0 itself
        BoundedHit h;
        h.kind = BoundedHit::Kind::point;
        h.value = v;
        h.factor = fac;
        h.multiplicity = mult;
        out.push_back(h);
        return;
    }

    for (;;) {
        HalfEndpoint a = HalfEndpoint::from_rational(box.a);
        HalfEndpoint b = HalfEndpoint::from_rational(box.b);
        if (compare_half(b, lo_b) <= 0 || compare_half(hi_b, a) <= 0)
            return; // entirely outside
        bool inside = compare_half(lo_b, a) < 0 && compare_half(b, hi_b) < 0;
        bool clear = inside;
        if (inside)
            for (auto& s : specials)
                if (compare_half(a, s) < 0 && compare_half(s, b) < 0) {
                    clear = false;
                    break;
                }
        if (clear)
            break;
        box = refine_step(sf, box);
        if (box.exact) {
            place_algebraic_box(sf, box, k, fac, mult, out);
            return;
        }
    }
    BoundedHit h;
    h.kind = BoundedHit::Kind::algebraic;
    h.a = box.a;
    h.b = box.b;
    h.poly = sf;
    h.factor = fac;
    h.multiplicity = mult;
    out.push_back(h);
}

} // namespace

FactorQuarterCache::FactorQuarterCache(const mpoly& gi)
    : g(gi), gm(mirror_xy(gi).primitive().second)
{
}

void bounded_roots_for_factor(FactorQuarterCache& ctx, unsigned mult, long k,
                              std::vector<BoundedHit>& hits)
{
    const mpoly& gi = ctx.g;
    mpoly y = mpoly::var(VY);

    // point roots at k pi and +-pi/4 + k pi (the pi-multiple lemma)
    bool root_kpi = k == 0 ? sgn(gi.eval_all(QQ(0), QQ(0), QQ(0))) == 0
                           : gi.eval(VY, QQ(0)).is_zero();
    if (root_kpi) {
        BoundedHit h;
        h.kind = BoundedHit::Kind::point;
        h.value = HalfEndpoint::quarter(ZZ(4 * k), QQ(0));
        h.factor = gi;
        h.multiplicity = mult;
        hits.push_back(h);
    }
    if (gi.eval(VY, QQ(-1)).is_zero()) { // gi = y + 1
        BoundedHit h;
        h.kind = BoundedHit::Kind::point;
        h.value = HalfEndpoint::quarter(ZZ(4 * k - 1), QQ(0));
        h.factor = gi;
        h.multiplicity = mult;
        hits.push_back(h);
    }
    if (gi.eval(VY, QQ(1)).is_zero()) { // gi = y - 1
        BoundedHit h;
        h.kind = BoundedHit::Kind::point;
        h.value = HalfEndpoint::quarter(ZZ(4 * k + 1), QQ(0));
        h.factor = gi;
        h.multiplicity = mult;
        hits.push_back(h);
    }

    if (gi.degree(VY) < 1) {
        // rational factor in Q[x]
        upoly f = upoly::from_mpoly(gi, VX);
        if (f.degree() >= 1)
            for (auto& box : isolate(f))
                place_algebraic_box(f, box, k, gi, mult, hits);
        return;
    }
    if (gi == y + mpoly(1) || gi == y - mpoly(1) || gi == y)
        return; // fully handled by the point checks

    auto S1 = sub_ibr_impl(ctx.gm, rat(-4 * k + 1, 4), &ctx.tmpl[3]);
    auto S2 = sub_ibr_impl(ctx.gm, QQ(-k), &ctx.tmpl[2]);
    auto S3 = sub_ibr_impl(gi, QQ(k), &ctx.tmpl[0]);
    auto S4 = sub_ibr_impl(gi, rat(4 * k + 1, 4), &ctx.tmpl[1]);

    auto add = [&](const SubIbrResult& s, const QQ& r, bool mirrored) {
        for (auto& [c, d] : s.intervals) {
            BoundedHit h;
            h.kind = BoundedHit::Kind::quarter;
            h.r = r;
            h.c = c;
            h.d = d;
            h.mirrored = mirrored;
            h.seq = s.seq;
            h.factor = gi;
            h.multiplicity = mult;
            hits.push_back(h);
        }
    };
    add(S1, rat(-4 * k + 1, 4), true);
    add(S2, QQ(-k), true);
    add(S3, QQ(k), false);
    add(S4, rat(4 * k + 1, 4), false);
}

std::vector<BoundedHit> isolating_bounded_roots(const mpoly& g, long k)
{
    if (g.is_zero())
        throw std::invalid_argument("isolating_bounded_roots: zero polynomial");
    std::vector<BoundedHit> hits;

    auto factored = factor(g);
    for (const auto& [gi, pi] : factored.factors) {
        FactorQuarterCache ctx(gi);
        bounded_roots_for_factor(ctx, pi, k, hits);
    }

    if (k == 0) {
        // several factors may vanish at the origin; report [0,0] once
        std::erase_if(hits, [](const BoundedHit& h) {
            return h.is_point() && h.value.rational && sgn(h.value.q) == 0;
        });
        if (sgn(g.eval_all(QQ(0), QQ(0), QQ(0))) == 0) {
            BoundedHit h;
            h.kind = BoundedHit::Kind::point;
            h.value = HalfEndpoint::from_rational(QQ(0));
            h.factor = adicity(g, VY) > 0 ? mpoly::var(VY) : g;
            hits.push_back(h);
        }
    }

    refine_disjoint(hits);
    std::sort(hits.begin(), hits.end(), [](const BoundedHit& x, const BoundedHit& y) {
        return compare_half(x.lo(), y.lo()) < 0;
    });
    return hits;
}

} // namespace mtproot
