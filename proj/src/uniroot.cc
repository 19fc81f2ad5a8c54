#include <mtproot/uniroot.hh>

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace mtproot {

namespace {

// ---- integer polynomial helpers (coefficients ascending) ----

void ztrim(std::vector<ZZ>& p)
{
    while (!p.empty() && sgn(p.back()) == 0)
        p.pop_back();
}

Sign zeval_sign(const std::vector<ZZ>& p, const QQ& t)
{
    // sign of p(t) via homogeneous Horner: sum c_k u^k v^(n-k), v > 0
    const ZZ& u = t.get_num();
    const ZZ& v = t.get_den();
    ZZ acc(0), vp(1);
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = acc * u + *it * vp;
        vp *= v;
    }
    return sgn(acc);
}

// p(x+1), in place
void ztaylor1(std::vector<ZZ>& p)
{
    const std::size_t n = p.size();
    if (n < 2)
        return;
    for (std::size_t k = 0; k + 1 < n; ++k)
        for (std::size_t j = n - 1; j >= 1 && j > k; --j)
            p[j - 1] += p[j];
}

// x^deg * p(1/x)
std::vector<ZZ> zreverse(const std::vector<ZZ>& p)
{
    std::vector<ZZ> r(p.rbegin(), p.rend());
    ztrim(r);
    return r;
}

// 2^deg * p(x/2)
std::vector<ZZ> zhalf(const std::vector<ZZ>& p)
{
    std::vector<ZZ> r = p;
    const std::size_t n = r.size();
    for (std::size_t k = 0; k < n; ++k)
        r[k] <<= (unsigned long)(n - 1 - k);
    return r;
}

unsigned zvariations(const std::vector<ZZ>& p)
{
    unsigned v = 0;
    int last = 0;
    for (const auto& c : p) {
        int s = sgn(c);
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++v;
        last = s;
    }
    return v;
}

// Descartes bound for the number of roots in (0,1).
unsigned zvar01(const std::vector<ZZ>& p)
{
    std::vector<ZZ> q = zreverse(p);
    ztaylor1(q);
    return zvariations(q);
}

struct Emitter {
    std::vector<RootBox>* out;
    unsigned mult;
};

// Isolate roots of the square-free integer polynomial r mapped onto the real
// interval (a,b); r's roots in (0,1) correspond to the target's in (a,b).
void vca(std::vector<ZZ> r, const QQ& a, const QQ& b, const Emitter& em)
{
    unsigned v = zvar01(r);
    if (v == 0)
        return;
    QQ mid = (a + b) / 2;
    if (v == 1) {
        // exact hit at the midpoint is worth reporting as a point
        if (zeval_sign(r, rat(1, 2)) == 0)
            em.out->push_back(RootBox::point(mid, em.mult));
        else
            em.out->push_back(RootBox::interval(a, b, em.mult));
        return;
    }
    std::vector<ZZ> left = zhalf(r);
    std::vector<ZZ> right = left;
    ztaylor1(right);
    ztrim(right);
    ztrim(left);
    if (!right.empty() && sgn(right[0]) == 0) {
        em.out->push_back(RootBox::point(mid, em.mult));
        right.erase(right.begin());
    }
    vca(std::move(left), a, mid, em);
    vca(std::move(right), mid, b, em);
}

// Isolate all real roots of a square-free primitive integer polynomial.
void isolate_squarefree(const std::vector<ZZ>& z, unsigned mult,
                        std::vector<RootBox>& out)
{
    std::vector<ZZ> p = z;
    ztrim(p);
    if (p.size() <= 1)
        return;
    if (sgn(p[0]) == 0) {
        out.push_back(RootBox::point(QQ(0), mult));
        p.erase(p.begin());
        ztrim(p);
        if (p.size() <= 1)
            return;
    }
    // power-of-two Cauchy bound
    ZZ mx(0);
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        mx = std::max(mx, ZZ(abs(p[i])));
    ZZ lead = abs(p.back());
    unsigned long g = 1;
    while (pow_zz(ZZ(2), g) * lead <= lead + mx)
        ++g;
    const ZZ B = pow_zz(ZZ(2), g);

    Emitter em{&out, mult};
    // positive roots: q(B x) on (0,1)
    {
        std::vector<ZZ> r = p;
        for (std::size_t k = 0; k < r.size(); ++k)
            r[k] *= pow_zz(B, (unsigned long)k);
        vca(std::move(r), QQ(0), QQ(B), em);
    }
    // negative roots: q(-B x) on (0,1), mapped back by negation
    {
        std::vector<ZZ> r = p;
        for (std::size_t k = 0; k < r.size(); ++k) {
            r[k] *= pow_zz(B, (unsigned long)k);
            if (k % 2 == 1)
                r[k] = -r[k];
        }
        std::vector<RootBox> neg;
        Emitter em2{&neg, mult};
        vca(std::move(r), QQ(0), QQ(B), em2);
        for (auto& bx : neg) {
            if (bx.exact)
                out.push_back(RootBox::point(QQ(-bx.a), mult));
            else
                out.push_back(RootBox::interval(QQ(-bx.b), QQ(-bx.a), mult));
        }
    }
}

bool boxes_overlap(const RootBox& x, const RootBox& y)
{
    if (x.exact && y.exact)
        return x.a == y.a;
    if (x.exact)
        return y.a < x.a && x.a < y.b;
    if (y.exact)
        return x.a < y.a && y.a < x.b;
    return x.a < y.b && y.a < x.b;
}

} // namespace

namespace {

// sign of the square-free s just right of t (t may itself be a simple root)
Sign edge_sign_right(const upoly& s, const QQ& t)
{
    Sign v = sign_of(s.eval(t));
    return v != 0 ? v : sign_of(s.derivative().eval(t));
}

} // namespace

RootBox refine_step(const upoly& s, const RootBox& box)
{
    if (box.exact)
        return box;
    QQ mid = (box.a + box.b) / 2;
    Sign sm = sign_of(s.eval(mid));
    if (sm == 0)
        return RootBox::point(mid, box.multiplicity);
    // the single interior root lies left of mid iff the sign changed
    RootBox r = box;
    if (edge_sign_right(s, box.a) * sm < 0)
        r.b = mid;
    else
        r.a = mid;
    return r;
}

std::vector<RootBox> isolate(const upoly& p)
{
    if (p.is_zero())
        throw std::invalid_argument("isolate: zero polynomial");
    std::vector<RootBox> out;
    if (p.degree() < 1)
        return out;

    auto parts = squarefree_decomposition(p);
    std::vector<upoly> owner; // square-free factor per box, for refinement
    for (const auto& part : parts) {
        std::vector<RootBox> boxes;
        auto [scale, zz] = part.factor.primitive_zz();
        isolate_squarefree(zz, part.multiplicity, boxes);
        for (auto& b : boxes) {
            out.push_back(b);
            owner.push_back(part.factor);
        }
    }

    // Boxes of one factor are disjoint by construction; separate the rest.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = i + 1; j < out.size(); ++j)
                while (boxes_overlap(out[i], out[j])) {
                    changed = true;
                    out[i] = refine_step(owner[i], out[i]);
                    out[j] = refine_step(owner[j], out[j]);
                }
    }
    // shrink interval boxes to width <= 1
    for (std::size_t i = 0; i < out.size(); ++i)
        while (!out[i].exact && out[i].b - out[i].a > 1)
            out[i] = refine_step(owner[i], out[i]);

    std::vector<std::size_t> idx(out.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
        return out[i].a < out[j].a || (out[i].a == out[j].a && out[i].b < out[j].b);
    });
    std::vector<RootBox> sorted;
    sorted.reserve(out.size());
    for (auto i : idx)
        sorted.push_back(out[i]);
    return sorted;
}

QQ root_upper_bound(const upoly& p)
{
    if (p.degree() < 1)
        throw std::invalid_argument("root_upper_bound: need degree >= 1");
    QQ mx(0);
    for (long i = 0; i < p.degree(); ++i) {
        QQ a = abs(p[(std::size_t)i]);
        if (a > mx)
            mx = a;
    }
    return QQ(1) + mx / abs(p.lc());
}

namespace {

// primitive part with the sign kept (positive rescale only)
void zprimitive(std::vector<ZZ>& p)
{
    ZZ g(0);
    for (const auto& c : p)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
        for (auto& c : p)
            c /= g;
}

// lc(d)^(2k) * a mod d over Z: an even power keeps the remainder a positive
// multiple of the rational remainder, so Sturm signs survive
std::vector<ZZ> zpseudo_rem_even(std::vector<ZZ> a, const std::vector<ZZ>& d)
{
    long dd = (long)d.size() - 1;
    const ZZ& lc = d.back();
    long steps = (long)a.size() - 1 - dd + 1;
    long even_steps = steps + (steps % 2);
    long used = 0;
    while (!a.empty() && (long)a.size() - 1 >= dd) {
        long k = (long)a.size() - 1 - dd;
        ZZ f = a.back();
        for (auto& c : a)
            c *= lc;
        for (long i = 0; i <= dd; ++i)
            a[(std::size_t)(k + i)] -= f * d[(std::size_t)i];
        ztrim(a);
        ++used;
    }
    while (used++ < even_steps)
        for (auto& c : a)
            c *= lc;
    return a;
}

} // namespace

SturmChain::SturmChain(const upoly& p)
{
    if (p.is_zero())
        throw std::invalid_argument("SturmChain: zero polynomial");
    auto [s0, z0] = p.primitive_zz();
    (void)s0;
    chain_.push_back(z0);
    auto [s1, z1] = p.derivative().primitive_zz();
    (void)s1;
    if (z1.empty())
        return;
    chain_.push_back(z1);
    while (true) {
        const auto& a = chain_[chain_.size() - 2];
        const auto& b = chain_.back();
        std::vector<ZZ> r = zpseudo_rem_even(a, b);
        if (r.empty())
            break;
        for (auto& c : r)
            c = -c;
        zprimitive(r);
        chain_.push_back(std::move(r));
    }
}

unsigned SturmChain::variations_at(const QQ& t) const
{
    unsigned v = 0;
    int last = 0;
    for (const auto& q : chain_) {
        int s = zeval_sign(q, t);
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++v;
        last = s;
    }
    return v;
}

unsigned SturmChain::count(const QQ& a, const QQ& b) const
{
    assert(a < b);
    return variations_at(a) - variations_at(b);
}

unsigned count_roots_in(const upoly& p, const QQ& a, const QQ& b)
{
    if (p.is_zero())
        throw std::invalid_argument("count_roots_in: zero polynomial");
    if (!(a < b))
        throw std::invalid_argument("count_roots_in: need a < b");
    if (sign_of(p.eval(a)) == 0 || sign_of(p.eval(b)) == 0)
        throw std::domain_error("count_roots_in: endpoint is a root");
    SturmChain chain(p);
    return chain.count(a, b);
}

RootBox refine(const upoly& p, RootBox box, const QQ& eps)
{
    if (p.is_zero())
        throw std::invalid_argument("refine: zero polynomial");
    if (box.exact)
        return box;
    upoly g = upoly_gcd(p, p.derivative());
    upoly s = g.degree() > 0 ? p.divrem(g).first : p;
    while (!box.exact && box.b - box.a >= eps)
        box = refine_step(s, box);
    return box;
}

} // namespace mtproot
