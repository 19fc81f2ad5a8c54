#include <mtproot/factor.hh>
#include <mtproot/polyops.hh>

#include <algorithm>
#include <cassert>
#include <map>
#include <random>
#include <stdexcept>
#include <tuple>

namespace mtproot {

namespace {

// ---------- arithmetic in (Z/m)[x], coefficients ascending ----------

using zvec = std::vector<ZZ>;

ZZ zmod(const ZZ& a, const ZZ& m)
{
    ZZ r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()); // in [0, m)
    return r;
}

ZZ zmod_sym(const ZZ& a, const ZZ& m)
{
    ZZ r = zmod(a, m);
    if (r * 2 > m)
        r -= m;
    return r;
}

void ptrim(zvec& p)
{
    while (!p.empty() && sgn(p.back()) == 0)
        p.pop_back();
}

zvec pmod(zvec p, const ZZ& m)
{
    for (auto& c : p)
        c = zmod(c, m);
    ptrim(p);
    return p;
}

zvec padd(const zvec& a, const zvec& b, const ZZ& m)
{
    zvec r(std::max(a.size(), b.size()), ZZ(0));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size())
            r[i] += a[i];
        if (i < b.size())
            r[i] += b[i];
        r[i] = zmod(r[i], m);
    }
    ptrim(r);
    return r;
}

zvec psub(const zvec& a, const zvec& b, const ZZ& m)
{
    zvec r(std::max(a.size(), b.size()), ZZ(0));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size())
            r[i] += a[i];
        if (i < b.size())
            r[i] -= b[i];
        r[i] = zmod(r[i], m);
    }
    ptrim(r);
    return r;
}

zvec pmul(const zvec& a, const zvec& b, const ZZ& m)
{
    if (a.empty() || b.empty())
        return {};
    zvec r(a.size() + b.size() - 1, ZZ(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    return pmod(std::move(r), m);
}

// division by a monic divisor
std::pair<zvec, zvec> pdivrem_monic(zvec a, const zvec& d, const ZZ& m)
{
    assert(!d.empty() && d.back() == 1);
    long dd = (long)d.size() - 1;
    zvec q;
    if ((long)a.size() - 1 >= dd)
        q.assign(a.size() - dd, ZZ(0));
    while (!a.empty() && (long)a.size() - 1 >= dd) {
        long k = (long)a.size() - 1 - dd;
        ZZ f = a.back();
        q[(std::size_t)k] = f;
        for (long i = 0; i <= dd; ++i)
            a[(std::size_t)(k + i)] = zmod(a[(std::size_t)(k + i)] - f * d[(std::size_t)i], m);
        ptrim(a);
    }
    ptrim(q);
    return {q, a};
}

ZZ zinvert(const ZZ& a, const ZZ& m)
{
    ZZ r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw std::runtime_error("zinvert: not invertible");
    return r;
}

zvec pmonic(const zvec& a, const ZZ& m)
{
    if (a.empty() || a.back() == 1)
        return a;
    ZZ inv = zinvert(a.back(), m);
    zvec r = a;
    for (auto& c : r)
        c = zmod(c * inv, m);
    return r;
}

zvec pgcd(zvec a, zvec b, const ZZ& p)
{
    a = pmod(std::move(a), p);
    b = pmod(std::move(b), p);
    while (!b.empty()) {
        zvec bm = pmonic(b, p);
        zvec r = pdivrem_monic(std::move(a), bm, p).second;
        a = std::move(bm);
        b = std::move(r);
    }
    return a.empty() ? a : pmonic(a, p);
}

// s*a + t*b = 1 mod p, for coprime a,b
void pbezout(const zvec& a, const zvec& b, const ZZ& p, zvec& s, zvec& t)
{
    zvec r0 = pmod(a, p), r1 = pmod(b, p);
    zvec s0{ZZ(1)}, s1, t0, t1{ZZ(1)};
    while (!r1.empty()) {
        ZZ lcinv = zinvert(r1.back(), p);
        zvec r1m = r1;
        for (auto& c : r1m)
            c = zmod(c * lcinv, p);
        auto [q, r] = pdivrem_monic(r0, r1m, p);
        zvec qq = q; // r0 = (q*lcinv)*r1 + r
        for (auto& c : qq)
            c = zmod(c * lcinv, p);
        zvec s2 = psub(s0, pmul(qq, s1, p), p);
        zvec t2 = psub(t0, pmul(qq, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1)
        throw std::runtime_error("pbezout: inputs not coprime");
    ZZ inv = zinvert(r0[0], p);
    s = std::move(s0);
    t = std::move(t0);
    for (auto& c : s)
        c = zmod(c * inv, p);
    for (auto& c : t)
        c = zmod(c * inv, p);
}

zvec ppowmod(zvec base, ZZ e, const zvec& mod_monic, const ZZ& m)
{
    zvec r{ZZ(1)};
    base = pdivrem_monic(std::move(base), mod_monic, m).second;
    while (sgn(e) > 0) {
        if (mpz_odd_p(e.get_mpz_t()))
            r = pdivrem_monic(pmul(r, base, m), mod_monic, m).second;
        base = pdivrem_monic(pmul(base, base, m), mod_monic, m).second;
        e >>= 1;
    }
    return r;
}

zvec pderivative(const zvec& a, const ZZ& m)
{
    if (a.size() <= 1)
        return {};
    zvec r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i)
        r[i - 1] = zmod(a[i] * ZZ((unsigned long)i), m);
    ptrim(r);
    return r;
}

// ---------- Cantor-Zassenhaus ----------

void equal_degree_split(const zvec& g, long d, const ZZ& p,
                        std::mt19937_64& rng, std::vector<zvec>& out)
{
    long n = (long)g.size() - 1;
    if (n == d) {
        out.push_back(g);
        return;
    }
    ZZ e = (pow_zz(p, (unsigned long)d) - 1) / 2;
    for (;;) {
        zvec a((std::size_t)n, ZZ(0));
        for (auto& c : a)
            c = zmod(ZZ((unsigned long)rng()), p);
        ptrim(a);
        if ((long)a.size() - 1 < 1)
            continue;
        zvec b = ppowmod(a, e, g, p);
        b = psub(b, zvec{ZZ(1)}, p);
        zvec h = pgcd(b, g, p);
        long dh = (long)h.size() - 1;
        if (dh > 0 && dh < n) {
            zvec rest = pmonic(pdivrem_monic(g, h, p).first, p);
            equal_degree_split(h, d, p, rng, out);
            equal_degree_split(rest, d, p, rng, out);
            return;
        }
    }
}

// monic square-free f mod p -> monic irreducible factors
std::vector<zvec> factor_mod_p(zvec f, const ZZ& p)
{
    std::vector<zvec> out;
    std::mt19937_64 rng(0x5eedc0de);
    zvec h{ZZ(0), ZZ(1)}; // x
    long d = 0;
    while ((long)f.size() - 1 > 0) {
        ++d;
        if (2 * d > (long)f.size() - 1) {
            out.push_back(f);
            break;
        }
        h = ppowmod(std::move(h), p, f, p);
        zvec g = pgcd(psub(h, zvec{ZZ(0), ZZ(1)}, p), f, p);
        if ((long)g.size() - 1 > 0) {
            equal_degree_split(g, d, p, rng, out);
            f = pmonic(pdivrem_monic(std::move(f), g, p).first, p);
            h = pdivrem_monic(std::move(h), f, p).second;
        }
    }
    return out;
}

// ---------- Hensel lifting (monic, quadratic, factor tree) ----------

struct HenselPair {
    zvec g, h, s, t;
};

// modulus m -> m^2: f monic, f = g h (mod m), s g + t h = 1 (mod m)
HenselPair hensel_step(const zvec& f, const HenselPair& in, const ZZ& m)
{
    ZZ m2 = m * m;
    zvec e = psub(f, pmul(in.g, in.h, m2), m2);
    auto [q, r] = pdivrem_monic(pmul(in.s, e, m2), in.h, m2);
    zvec gs = padd(padd(in.g, pmul(in.t, e, m2), m2), pmul(q, in.g, m2), m2);
    zvec hs = padd(in.h, r, m2);

    zvec b = psub(padd(pmul(in.s, gs, m2), pmul(in.t, hs, m2), m2), zvec{ZZ(1)}, m2);
    auto [c, d] = pdivrem_monic(pmul(in.s, b, m2), hs, m2);
    zvec ss = psub(in.s, d, m2);
    zvec ts = psub(psub(in.t, pmul(in.t, b, m2), m2), pmul(c, gs, m2), m2);
    return {std::move(gs), std::move(hs), std::move(ss), std::move(ts)};
}

ZZ lift_modulus(const ZZ& p, const ZZ& target)
{
    ZZ m = p;
    while (m < target)
        m *= m;
    return m;
}

// f = prod(fs) mod p (all monic) -> factors mod lift_modulus(p, target)
std::vector<zvec> hensel_tree(const zvec& f, const std::vector<zvec>& fs,
                              const ZZ& p, const ZZ& target)
{
    if (fs.size() == 1)
        return {f};
    std::size_t half = fs.size() / 2;
    zvec g{ZZ(1)}, h{ZZ(1)};
    for (std::size_t i = 0; i < half; ++i)
        g = pmul(g, fs[i], p);
    for (std::size_t i = half; i < fs.size(); ++i)
        h = pmul(h, fs[i], p);
    HenselPair hp{g, h, {}, {}};
    pbezout(g, h, p, hp.s, hp.t);

    ZZ m = p;
    while (m < target) {
        hp = hensel_step(pmod(f, m * m), hp, m);
        m *= m;
    }
    std::vector<zvec> left(fs.begin(), fs.begin() + half);
    std::vector<zvec> right(fs.begin() + half, fs.end());
    std::vector<zvec> out = hensel_tree(hp.g, left, p, target);
    for (auto& x : hensel_tree(hp.h, right, p, target))
        out.push_back(std::move(x));
    return out;
}

// ---------- Zassenhaus over Z ----------

const unsigned long kPrimes[] = {1000003, 1000033, 1000037, 1000039, 1000081,
                                 1000099, 1000117, 1000121, 1000133, 1000151,
                                 1000159, 1000171, 1000183, 1000187, 1000193,
                                 1000199, 1000211, 1000213, 1000231, 1000249};

// any monic factor of the monic F has |coefficients| <= 2^deg * ||F||_2
ZZ factor_coeff_bound(const zvec& f)
{
    ZZ s(0);
    for (const auto& c : f)
        s += c * c;
    ZZ r;
    mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
    r += 1;
    return r << (unsigned long)(f.size() - 1);
}

upoly zz_to_upoly(const zvec& z)
{
    std::vector<QQ> c;
    c.reserve(z.size());
    for (const auto& v : z)
        c.push_back(QQ(v));
    return upoly::from_coeffs(std::move(c));
}

// primitive integer coefficients, positive leading coefficient
zvec make_primitive(const upoly& p)
{
    auto [sc, z] = p.primitive_zz();
    (void)sc;
    if (!z.empty() && sgn(z.back()) < 0)
        for (auto& c : z)
            c = -c;
    return z;
}

// primitive square-free integer polynomial, positive lc, degree >= 1 ->
// primitive irreducible integer polynomials
std::vector<zvec> factor_squarefree_zz(zvec f)
{
    std::vector<zvec> out;
    if (f.size() == 2) {
        out.push_back(std::move(f));
        return out;
    }
    if (sgn(f[0]) == 0) { // x | f (square-free: exactly once)
        out.push_back(zvec{ZZ(0), ZZ(1)});
        f.erase(f.begin());
        ptrim(f);
        if ((long)f.size() - 1 >= 1)
            for (auto& g : factor_squarefree_zz(std::move(f)))
                out.push_back(std::move(g));
        else
            assert(f.size() == 1);
        return out;
    }

    // monicize: F(x) = b^(n-1) f(x/b)
    const ZZ b = f.back();
    const long n = (long)f.size() - 1;
    zvec F(f.size());
    F[(std::size_t)n] = 1;
    for (long k = 0; k < n; ++k)
        F[(std::size_t)k] = f[(std::size_t)k] * pow_zz(b, (unsigned long)(n - 1 - k));

    ZZ p;
    zvec f0;
    bool good = false;
    for (unsigned long pr : kPrimes) {
        p = ZZ(pr);
        f0 = pmod(F, p);
        if ((long)f0.size() - 1 != n)
            continue;
        zvec g = pgcd(f0, pderivative(f0, p), p);
        if ((long)g.size() - 1 == 0) {
            good = true;
            break;
        }
    }
    if (!good)
        throw std::runtime_error("factor: no square-free prime found");

    std::vector<zvec> modular = factor_mod_p(f0, p);
    if (modular.size() == 1) {
        out.push_back(std::move(f));
        return out;
    }
    std::sort(modular.begin(), modular.end(),
              [](const zvec& a, const zvec& b2) { return a.size() < b2.size(); });

    const ZZ target = factor_coeff_bound(F) * 2 + 1;
    const ZZ pk = lift_modulus(p, target);
    std::vector<zvec> lifted = hensel_tree(pmod(F, pk), modular, p, target);

    // Zassenhaus recombination on the monic F
    zvec remaining = F;
    std::vector<int> alive(lifted.size(), 1);
    std::size_t alive_count = lifted.size();
    std::vector<zvec> monic_factors;
    std::vector<std::size_t> idx;

    auto attempt = [&](auto&& self, std::size_t card, std::size_t start,
                       const zvec& prod) -> bool {
        if (idx.size() == card) {
            zvec cand = prod;
            for (auto& c : cand)
                c = zmod_sym(c, pk);
            auto [q, r] = zz_to_upoly(remaining).divrem(zz_to_upoly(cand));
            if (!r.is_zero())
                return false;
            monic_factors.push_back(cand);
            for (auto i : idx) {
                alive[i] = 0;
                --alive_count;
            }
            zvec nr;
            for (long i = 0; i <= q.degree(); ++i)
                nr.push_back(q[(std::size_t)i].get_num()); // monic divisor: integral
            remaining = std::move(nr);
            return true;
        }
        for (std::size_t i = start; i < lifted.size(); ++i) {
            if (!alive[i])
                continue;
            idx.push_back(i);
            if (self(self, card, i + 1, pmul(prod, lifted[i], pk)))
                return true;
            idx.pop_back();
        }
        return false;
    };

    for (std::size_t card = 1; alive_count > 0 && card <= alive_count / 2;) {
        idx.clear();
        if (attempt(attempt, card, 0, zvec{ZZ(1)}))
            continue; // retry the same cardinality on the reduced set
        ++card;
    }
    if (alive_count > 0)
        monic_factors.push_back(remaining);

    // undo the monicization: G(x) -> primitive part of G(b x)
    for (const auto& G : monic_factors) {
        std::vector<QQ> c;
        for (std::size_t k = 0; k < G.size(); ++k)
            c.push_back(QQ(G[k]) * pow_qq(QQ(b), (unsigned long)k));
        out.push_back(make_primitive(upoly::from_coeffs(std::move(c))));
    }
    return out;
}

} // namespace

UnivarFactorResult factor_univariate(const upoly& p)
{
    if (p.is_zero())
        throw std::invalid_argument("factor_univariate: zero polynomial");
    UnivarFactorResult res;
    res.constant = QQ(1);
    if (p.degree() == 0) {
        res.constant = p[0];
        return res;
    }
    for (const auto& part : squarefree_decomposition(p)) {
        zvec z = make_primitive(part.factor);
        for (auto& irr : factor_squarefree_zz(std::move(z)))
            res.factors.push_back({zz_to_upoly(irr), part.multiplicity});
    }
    std::sort(res.factors.begin(), res.factors.end(),
              [](const auto& a, const auto& b) {
                  if (a.first.degree() != b.first.degree())
                      return a.first.degree() < b.first.degree();
                  return a.first.coeffs() < b.first.coeffs();
              });
    upoly prod = upoly(QQ(1));
    for (auto& [f, e] : res.factors)
        for (unsigned k = 0; k < e; ++k)
            prod = prod * f;
    auto [q, r] = p.divrem(prod);
    assert(r.is_zero() && q.degree() == 0);
    res.constant = q[0];
    return res;
}

namespace {

// gcd of the coefficients of g w.r.t. v, primitive
mpoly coeff_content(const mpoly& g, int v)
{
    mpoly acc;
    for (auto& c : g.coeffs_wrt(v)) {
        if (c.is_zero())
            continue;
        acc = acc.is_zero() ? c : poly_gcd(acc, c);
        if (acc.is_constant())
            break;
    }
    return acc.is_zero() ? acc : acc.primitive().second;
}

// Yun square-free decomposition w.r.t. v for a polynomial primitive w.r.t. v
std::vector<std::pair<mpoly, unsigned>> yun_bivar(const mpoly& p, int v)
{
    std::vector<std::pair<mpoly, unsigned>> out;
    mpoly dp = p.derivative(v);
    mpoly u = poly_gcd(p, dp);
    mpoly vv = *p.divexact(u);
    mpoly w = *dp.divexact(u);
    unsigned i = 1;
    while (!vv.is_constant()) {
        mpoly s = w - vv.derivative(v);
        mpoly h = poly_gcd(vv, s); // gcd(vv, 0) = vv handles the last stage
        if (!h.is_constant())
            out.push_back({h, i});
        vv = *vv.divexact(h);
        if (s.is_zero())
            break;
        w = *s.divexact(h);
        ++i;
    }
    return out;
}

// irreducible factors of a primitive square-free bivariate polynomial with
// trivial content in both variables and degree >= 1 in both
std::vector<mpoly> kronecker_factor(const mpoly& F)
{
    long dx = F.degree(VX), dy = F.degree(VY);
    if (dx == 1 || dy == 1)
        return {F.primitive().second}; // any split would need a content

    bool collapse_y = dx + (dx + 1) * dy <= dy + (dy + 1) * dx;
    const long D = collapse_y ? dx + 1 : dy + 1;
    std::vector<QQ> img;
    for (const auto& [m, c] : F.terms()) {
        unsigned long e = collapse_y ? m[0] + (unsigned long)D * m[1]
                                     : m[1] + (unsigned long)D * m[0];
        if (e >= img.size())
            img.resize(e + 1, QQ(0));
        img[e] = c; // the map is injective on monomials, no collisions
    }
    upoly image = upoly::from_coeffs(std::move(img));

    auto uf = factor_univariate(image);
    std::vector<upoly> pieces; // flattened with multiplicity
    for (auto& [f, e] : uf.factors)
        for (unsigned k = 0; k < e; ++k)
            pieces.push_back(f);

    auto unkronecker = [&](const upoly& prod) {
        std::vector<mpoly::Term> ts;
        for (long e = 0; e <= prod.degree(); ++e) {
            const QQ& c = prod[(std::size_t)e];
            if (sgn(c) == 0)
                continue;
            unsigned lo = (unsigned)(e % D), hi = (unsigned)(e / D);
            Mono m{collapse_y ? lo : hi, collapse_y ? hi : lo, 0};
            ts.push_back({m, c});
        }
        return mpoly::from_terms(std::move(ts)).primitive().second;
    };

    std::vector<mpoly> out;
    mpoly rem = F;
    std::vector<int> alive(pieces.size(), 1);
    std::size_t alive_count = pieces.size();
    std::vector<std::size_t> idx;

    auto attempt = [&](auto&& self, std::size_t card, std::size_t start,
                       const upoly& prod) -> bool {
        if (idx.size() == card) {
            mpoly cand = unkronecker(prod);
            auto q = rem.divexact(cand);
            if (!q.has_value())
                return false;
            out.push_back(cand);
            rem = std::move(*q);
            for (auto i : idx) {
                alive[i] = 0;
                --alive_count;
            }
            return true;
        }
        for (std::size_t i = start; i < pieces.size(); ++i) {
            if (!alive[i])
                continue;
            idx.push_back(i);
            if (self(self, card, i + 1, prod * pieces[i]))
                return true;
            idx.pop_back();
        }
        return false;
    };

    for (std::size_t card = 1; alive_count > 0 && card < alive_count;) {
        idx.clear();
        if (attempt(attempt, card, 0, upoly(QQ(1))))
            continue;
        ++card;
    }
    if (!rem.is_constant())
        out.push_back(rem.primitive().second);
    return out;
}

void factor_into(const mpoly& g, unsigned mult,
                 std::vector<std::pair<mpoly, unsigned>>& out)
{
    if (g.is_constant())
        return;
    bool has_x = g.degree(VX) > 0, has_y = g.degree(VY) > 0;
    if (!has_x || !has_y) {
        int v = has_x ? VX : VY;
        auto uf = factor_univariate(upoly::from_mpoly(g, v));
        for (auto& [f, e] : uf.factors)
            out.push_back({f.to_mpoly(v).primitive().second, mult * e});
        return;
    }
    mpoly cx = coeff_content(g, VX);
    if (!cx.is_constant()) {
        factor_into(cx, mult, out);
        factor_into(*g.divexact(cx), mult, out);
        return;
    }
    mpoly cy = coeff_content(g, VY);
    if (!cy.is_constant()) {
        factor_into(cy, mult, out);
        factor_into(*g.divexact(cy), mult, out);
        return;
    }
    for (auto& irr : kronecker_factor(g.primitive().second))
        out.push_back({irr, mult});
}

} // namespace

mpoly FactorResult::product() const
{
    mpoly p(constant);
    for (const auto& [f, e] : factors)
        p = p * f.pow(e);
    return p;
}

FactorResult factor(const mpoly& g)
{
    if (g.is_zero())
        throw std::invalid_argument("factor: zero polynomial");
    if (g.degree(VZ) > 0)
        throw std::invalid_argument("factor: only polynomials in x,y supported");

    FactorResult res;
    auto [c0, p] = g.primitive();
    if (p.is_constant()) {
        res.constant = c0 * p.constant_value();
        return res;
    }

    std::vector<std::pair<mpoly, unsigned>> sqfree;
    bool has_x = p.degree(VX) > 0, has_y = p.degree(VY) > 0;
    if (!has_x || !has_y) {
        int v = has_x ? VX : VY;
        for (auto& part : squarefree_decomposition(upoly::from_mpoly(p, v)))
            sqfree.push_back({part.factor.to_mpoly(v), part.multiplicity});
    } else {
        mpoly cy = coeff_content(p, VY); // the Q[x] part
        mpoly pp = p;
        if (!cy.is_constant()) {
            for (auto& part : squarefree_decomposition(upoly::from_mpoly(cy, VX)))
                sqfree.push_back({part.factor.to_mpoly(VX), part.multiplicity});
            pp = *p.divexact(cy);
        }
        if (!pp.is_constant())
            for (auto& part : yun_bivar(pp, VY))
                sqfree.push_back(part);
    }

    std::vector<std::pair<mpoly, unsigned>> raw;
    for (auto& [f, e] : sqfree)
        factor_into(f, e, raw);

    std::map<std::string, std::size_t> seen;
    for (auto& [f, e] : raw) {
        std::string key = f.str();
        auto it = seen.find(key);
        if (it == seen.end()) {
            seen.emplace(std::move(key), res.factors.size());
            res.factors.push_back({f, e});
        } else {
            res.factors[it->second].second += e;
        }
    }

    std::sort(res.factors.begin(), res.factors.end(),
              [](const auto& a, const auto& b) {
                  long ta = a.first.total_degree(VX, VY);
                  long tb = b.first.total_degree(VX, VY);
                  if (ta != tb)
                      return ta < tb;
                  const auto& x = a.first.terms();
                  const auto& y = b.first.terms();
                  if (x.size() != y.size())
                      return x.size() < y.size();
                  for (std::size_t i = 0; i < x.size(); ++i) {
                      int c = mono_cmp(x[i].first, y[i].first);
                      if (c != 0)
                          return c < 0;
                      if (x[i].second != y[i].second)
                          return x[i].second < y[i].second;
                  }
                  return false;
              });

    mpoly prod(QQ(1));
    for (const auto& [f, e] : res.factors)
        prod = prod * f.pow(e);
    auto q = g.divexact(prod);
    if (!q.has_value() || !q->is_constant())
        throw std::runtime_error("factor: internal consistency check failed");
    res.constant = q->constant_value();
    return res;
}

} // namespace mtproot
