#include <mtproot/upoly.hh>

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace mtproot {

void upoly::trim()
{
    while (!c_.empty() && sgn(c_.back()) == 0)
        c_.pop_back();
}

upoly::upoly(const QQ& c)
{
    if (sgn(c) != 0)
        c_.push_back(c);
}

upoly::upoly(long c)
{
    if (c != 0)
        c_.push_back(QQ(c));
}

upoly upoly::from_coeffs(std::vector<QQ> ascending)
{
    upoly p;
    p.c_ = std::move(ascending);
    p.trim();
    return p;
}

upoly upoly::x(unsigned e)
{
    upoly p;
    p.c_.assign(e + 1, QQ(0));
    p.c_[e] = 1;
    return p;
}

upoly upoly::from_mpoly(const mpoly& p, int v)
{
    std::vector<QQ> c;
    for (const auto& [m, coef] : p.terms()) {
        for (int i = 0; i < kMaxVars; ++i)
            if (i != v && m[i] != 0)
                throw std::invalid_argument("upoly::from_mpoly: not univariate");
        if (m[v] >= c.size())
            c.resize(m[v] + 1, QQ(0));
        c[m[v]] = coef;
    }
    return from_coeffs(std::move(c));
}

mpoly upoly::to_mpoly(int v) const
{
    std::vector<mpoly::Term> terms;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (sgn(c_[k]) == 0)
            continue;
        Mono m{0, 0, 0};
        m[v] = (unsigned)k;
        terms.push_back({m, c_[k]});
    }
    return mpoly::from_terms(std::move(terms));
}

const QQ& upoly::lc() const
{
    static const QQ zero(0);
    return c_.empty() ? zero : c_.back();
}

const QQ& upoly::operator[](std::size_t k) const
{
    static const QQ zero(0);
    return k < c_.size() ? c_[k] : zero;
}

upoly upoly::operator-() const
{
    upoly r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

upoly upoly::operator+(const upoly& o) const
{
    upoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), QQ(0));
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = (*this)[i] + o[i];
    r.trim();
    return r;
}

upoly upoly::operator-(const upoly& o) const { return *this + (-o); }

upoly upoly::operator*(const upoly& o) const
{
    if (is_zero() || o.is_zero())
        return {};
    upoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, QQ(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0)
            continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

upoly upoly::operator*(const QQ& s) const
{
    if (sgn(s) == 0)
        return {};
    upoly r = *this;
    for (auto& c : r.c_)
        c *= s;
    return r;
}

QQ upoly::eval(const QQ& v) const
{
    QQ r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * v + *it;
    return r;
}

Enclosure upoly::eval(const Enclosure& v) const
{
    return eval_poly(c_, v);
}

upoly upoly::derivative() const
{
    if (c_.size() <= 1)
        return {};
    upoly r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r.c_[i - 1] = c_[i] * QQ((long)i);
    r.trim();
    return r;
}

std::pair<upoly, upoly> upoly::divrem(const upoly& d) const
{
    if (d.is_zero())
        throw std::invalid_argument("upoly::divrem: division by zero");
    upoly r = *this;
    upoly q;
    long dd = d.degree();
    if (r.degree() >= dd)
        q.c_.assign(r.degree() - dd + 1, QQ(0));
    while (!r.is_zero() && r.degree() >= dd) {
        long k = r.degree() - dd;
        QQ f = r.lc() / d.lc();
        q.c_[k] = f;
        for (long i = 0; i <= dd; ++i)
            r.c_[k + i] -= f * d.c_[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

std::pair<QQ, std::vector<ZZ>> upoly::primitive_zz() const
{
    if (is_zero())
        return {QQ(0), {}};
    ZZ num_gcd(0), den_lcm(1);
    for (const auto& c : c_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    QQ scale = rat(num_gcd, den_lcm);
    std::vector<ZZ> out;
    out.reserve(c_.size());
    for (const auto& c : c_) {
        QQ t = c / scale;
        assert(t.get_den() == 1);
        out.push_back(t.get_num());
    }
    return {scale, out};
}

std::string upoly::str(const std::string& name) const
{
    return to_mpoly(0).str({name, "?", "?"});
}

namespace {

void zz_trim(std::vector<ZZ>& p)
{
    while (!p.empty() && sgn(p.back()) == 0)
        p.pop_back();
}

void zz_primitive(std::vector<ZZ>& p)
{
    ZZ g(0);
    for (const auto& c : p)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
        for (auto& c : p)
            c /= g;
}

// pseudo remainder over Z (scale factors are irrelevant for gcd)
std::vector<ZZ> zz_prem(std::vector<ZZ> a, const std::vector<ZZ>& d)
{
    long dd = (long)d.size() - 1;
    const ZZ& lc = d.back();
    while (!a.empty() && (long)a.size() - 1 >= dd) {
        long k = (long)a.size() - 1 - dd;
        ZZ f = a.back();
        for (auto& c : a)
            c *= lc;
        for (long i = 0; i <= dd; ++i)
            a[(std::size_t)(k + i)] -= f * d[(std::size_t)i];
        zz_trim(a);
        zz_primitive(a); // keeps intermediate growth linear
    }
    return a;
}

} // namespace

upoly upoly_gcd(const upoly& a, const upoly& b)
{
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("upoly_gcd: gcd(0,0) is undefined");
    if (a.is_zero() || b.is_zero()) {
        const upoly& p = a.is_zero() ? b : a;
        auto [s, z] = p.primitive_zz();
        (void)s;
        if (sgn(z.back()) < 0)
            for (auto& c : z)
                c = -c;
        std::vector<QQ> cs(z.begin(), z.end());
        return upoly::from_coeffs(std::move(cs));
    }

    auto [sa, f] = a.primitive_zz();
    auto [sb, g] = b.primitive_zz();
    (void)sa;
    (void)sb;
    if (f.size() < g.size())
        std::swap(f, g);
    while (!g.empty()) {
        std::vector<ZZ> r = zz_prem(f, g);
        f = std::move(g);
        g = std::move(r);
        zz_primitive(g);
    }
    if (sgn(f.back()) < 0)
        for (auto& c : f)
            c = -c;
    std::vector<QQ> cs(f.begin(), f.end());
    return upoly::from_coeffs(std::move(cs));
}

std::vector<SquarefreePart> squarefree_decomposition(const upoly& p)
{
    if (p.is_zero())
        throw std::invalid_argument("squarefree_decomposition: zero polynomial");
    std::vector<SquarefreePart> out;
    if (p.degree() < 1)
        return out;

    // Yun's algorithm.
    upoly u = upoly_gcd(p, p.derivative());
    upoly v = p.divrem(u).first;
    upoly w = p.derivative().divrem(u).first;
    unsigned i = 1;
    while (v.degree() > 0) {
        upoly s = w - v.derivative();
        upoly h = upoly_gcd(v, s);
        if (h.degree() > 0)
            out.push_back({h, i});
        v = v.divrem(h).first;
        w = s.divrem(h).first;
        ++i;
    }
    return out;
}

} // namespace mtproot
