#include <mtproot/polyops.hh>
#include <mtproot/upoly.hh>

#include <cassert>
#include <stdexcept>
#include <vector>

namespace mtproot {

namespace {

// variable the polynomial depends on, when it is at most one; -1 for
// constants, -2 for genuinely multivariate
int single_variable(const mpoly& p)
{
    int var = -1;
    for (int v = 0; v < kMaxVars; ++v) {
        if (p.degree(v) > 0) {
            if (var >= 0)
                return -2;
            var = v;
        }
    }
    return var;
}

// gcd of a list by folding.
mpoly gcd_list(const std::vector<mpoly>& ps)
{
    mpoly g;
    for (const auto& p : ps) {
        if (p.is_zero())
            continue;
        g = g.is_zero() ? p : poly_gcd(g, p);
        if (g.is_constant())
            break;
    }
    if (g.is_zero())
        return g;
    return g.primitive().second;
}

int lowest_var(const mpoly& a, const mpoly& b)
{
    for (int v = 0; v < kMaxVars; ++v)
        if (a.degree(v) > 0 || b.degree(v) > 0)
            return v;
    return -1;
}

// content of p w.r.t. v: gcd of the coefficients (polynomials in the
// remaining variables), normalized primitive with positive lc.
mpoly content_wrt(const mpoly& p, int v)
{
    return gcd_list(p.coeffs_wrt(v));
}

} // namespace

mpoly poly_gcd(const mpoly& a, const mpoly& b, int /*v*/)
{
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("poly_gcd: gcd(0,0) is undefined");
    if (a.is_zero())
        return b.primitive().second;
    if (b.is_zero())
        return a.primitive().second;

    int v = lowest_var(a, b);
    if (v < 0)
        return mpoly(QQ(1)); // two nonzero constants

    // dense Euclid is much faster when both sides live in one variable
    int va = single_variable(a), vb = single_variable(b);
    if (va >= -1 && vb >= -1 && (va < 0 || vb < 0 || va == vb)) {
        int uv = va >= 0 ? va : vb;
        if (uv >= 0)
            return upoly_gcd(upoly::from_mpoly(a, uv), upoly::from_mpoly(b, uv))
                .to_mpoly(uv);
    }

    if (a.degree(v) == 0 || b.degree(v) == 0) {
        // One argument is free of v; gcd divides the content of the other.
        const mpoly& free_v = a.degree(v) == 0 ? a : b;
        const mpoly& other = a.degree(v) == 0 ? b : a;
        mpoly c = content_wrt(other, v);
        if (free_v.is_constant() || c.is_constant())
            return mpoly(QQ(1));
        return poly_gcd(free_v, c);
    }

    mpoly ca = content_wrt(a, v);
    mpoly cb = content_wrt(b, v);
    mpoly pa = *a.divexact(ca);
    mpoly pb = *b.divexact(cb);
    mpoly cg = ca.is_constant() || cb.is_constant() ? mpoly(QQ(1)) : poly_gcd(ca, cb);

    // primitive PRS
    if (pa.degree(v) < pb.degree(v))
        std::swap(pa, pb);
    while (true) {
        if (pb.is_zero())
            break;
        if (pb.degree(v) == 0) {
            pa = mpoly(QQ(1)); // coprime w.r.t. v (both primitive)
            break;
        }
        mpoly r = pa.prem(pb, v);
        pa = pb;
        if (r.is_zero())
            pb = mpoly{};
        else {
            mpoly cr = content_wrt(r, v);
            pb = (*r.divexact(cr)).primitive().second;
        }
    }
    return (cg * pa).primitive().second;
}

mpoly sylvester_resultant(const mpoly& a, const mpoly& b, int v)
{
    if (a.is_zero() || b.is_zero())
        return mpoly{};
    long m = a.degree(v), n = b.degree(v);
    if (m == 0 && n == 0)
        return mpoly(QQ(1));
    if (m == 0)
        return a.pow((unsigned)n);
    if (n == 0)
        return b.pow((unsigned)m);

    auto ac = a.coeffs_wrt(v); // ascending
    auto bc = b.coeffs_wrt(v);
    const long N = m + n;
    std::vector<std::vector<mpoly>> M(N, std::vector<mpoly>(N));
    for (long r = 0; r < n; ++r)
        for (long k = 0; k <= m; ++k)
            M[r][r + (m - k)] = ac[k];
    for (long r = 0; r < m; ++r)
        for (long k = 0; k <= n; ++k)
            M[n + r][r + (n - k)] = bc[k];

    // Bareiss fraction-free elimination.
    int sign = 1;
    mpoly prev(QQ(1));
    for (long k = 0; k + 1 < N; ++k) {
        if (M[k][k].is_zero()) {
            long piv = -1;
            for (long r = k + 1; r < N; ++r)
                if (!M[r][k].is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0)
                return mpoly{};
            std::swap(M[k], M[piv]);
            sign = -sign;
        }
        for (long i = k + 1; i < N; ++i) {
            for (long j = k + 1; j < N; ++j) {
                mpoly num = M[k][k] * M[i][j] - M[i][k] * M[k][j];
                auto q = num.divexact(prev);
                assert(q.has_value());
                M[i][j] = std::move(*q);
            }
            M[i][k] = mpoly{};
        }
        prev = M[k][k];
    }
    mpoly det = M[N - 1][N - 1];
    return sign < 0 ? -det : det;
}

namespace {

mpoly resultant_prs(const mpoly& a, const mpoly& b, int v)
{
    long da = a.degree(v), db = b.degree(v);
    if (da == 0 && db == 0)
        return mpoly(QQ(1));
    if (da < db) {
        mpoly r = resultant_prs(b, a, v);
        return ((da * db) % 2 != 0) ? -r : r;
    }
    if (db == 0)
        return b.pow((unsigned)da);

    mpoly r = a.prem(b, v);
    if (r.is_zero())
        return mpoly{};
    // split r = cont * rp with rp primitive; any exact split preserves the
    // identity below, the extraction only controls coefficient growth
    mpoly cont = content_wrt(r, v);
    auto [sc, rp] = (*r.divexact(cont)).primitive();
    cont = cont * sc;
    long dr = rp.degree(v);

    mpoly sub = resultant_prs(b, rp, v);
    mpoly lcb = b.lc_wrt(v);
    // res(a,b) = (-1)^(da db) lc(b)^(da-dr-(da-db+1)db) cont^db res(b,rp)
    mpoly num = sub * cont.pow((unsigned)db);
    long e = (da - dr) - (da - db + 1) * db;
    mpoly result;
    if (e >= 0)
        result = num * lcb.pow((unsigned)e);
    else {
        auto q = num.divexact(lcb.pow((unsigned)(-e)));
        assert(q.has_value());
        result = std::move(*q);
    }
    return ((da * db) % 2 != 0) ? -result : result;
}

} // namespace

mpoly resultant(const mpoly& a, const mpoly& b, int v)
{
    if (a.is_zero() || b.is_zero())
        return mpoly{};
    long d = std::max(a.degree(v), b.degree(v));
    if (d <= 4)
        return sylvester_resultant(a, b, v);
    return resultant_prs(a, b, v);
}

mpoly discriminant(const mpoly& g, int v)
{
    long n = g.degree(v);
    if (n <= 0)
        throw std::invalid_argument("discriminant: degree must be >= 1");
    mpoly res = resultant(g, g.derivative(v), v);
    auto q = res.divexact(g.lc_wrt(v));
    assert(q.has_value());
    mpoly d = std::move(*q);
    return ((n * (n - 1) / 2) % 2 != 0) ? -d : d;
}

mpoly reciprocal(const mpoly& g)
{
    if (g.is_zero())
        return g;
    long d = g.degree(VY);
    std::vector<mpoly::Term> out;
    for (const auto& [m, c] : g.terms()) {
        Mono m2 = m;
        m2[VY] = (unsigned)d - m[VY];
        out.push_back({m2, c});
    }
    return mpoly::from_terms(std::move(out));
}

mpoly phi(const mpoly& g)
{
    mpoly one_plus = mpoly(QQ(1)) + mpoly::var(VY);
    mpoly one_minus = mpoly(QQ(1)) - mpoly::var(VY);
    return g.subst_rational(VY, one_plus, one_minus);
}

namespace {

mpoly mtp_to_halfangle(const mpoly& f, bool cot)
{
    if (f.is_zero())
        return f;
    long m = f.total_degree(VY, VZ);
    if (m < 0)
        return f;
    mpoly t = mpoly::var(VY);
    mpoly t2 = t * t;
    mpoly sin_num = t * QQ(2);                                      // 2t
    mpoly cos_num = cot ? (t2 - mpoly(QQ(1))) : (mpoly(QQ(1)) - t2); // +-(1-t^2)
    mpoly den = mpoly(QQ(1)) + t2;                                  // 1+t^2

    mpoly out;
    for (const auto& [mono, c] : f.terms()) {
        unsigned a = mono[0], b = mono[1], cz = mono[2];
        mpoly term = mpoly::term(c * pow_qq(QQ(2), a), Mono{a, 0, 0});
        term = term * sin_num.pow(b) * cos_num.pow(cz) * den.pow((unsigned)m - b - cz);
        out = out + term;
    }
    return out;
}

} // namespace

mpoly mtp_to_tan(const mpoly& f) { return mtp_to_halfangle(f, false); }
mpoly mtp_to_cot(const mpoly& f) { return mtp_to_halfangle(f, true); }

mpoly mirror_xy(const mpoly& g)
{
    std::vector<mpoly::Term> out;
    for (const auto& [m, c] : g.terms()) {
        bool flip = ((m[0] + m[1]) % 2) != 0;
        out.push_back({m, flip ? QQ(-c) : c});
    }
    return mpoly::from_terms(std::move(out));
}

unsigned adicity(const mpoly& g, int v)
{
    if (g.is_zero())
        return 0;
    unsigned m = ~0u;
    for (const auto& [mono, c] : g.terms())
        m = std::min(m, mono[v]);
    return m;
}

mpoly shift_down(const mpoly& g, int v, unsigned m)
{
    if (m == 0 || g.is_zero())
        return g;
    std::vector<mpoly::Term> out;
    for (const auto& [mono, c] : g.terms()) {
        assert(mono[v] >= m);
        Mono m2 = mono;
        m2[v] -= m;
        out.push_back({m2, c});
    }
    return mpoly::from_terms(std::move(out));
}

} // namespace mtproot
