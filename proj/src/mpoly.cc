#include <mtproot/mpoly.hh>

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace mtproot {

int mono_cmp(const Mono& a, const Mono& b)
{
    // y-major lex (y > x > z): matches the normalization convention used for
    // gcd and irreducible-factor signs throughout.
    static constexpr int order[kMaxVars] = {1, 0, 2};
    for (int k = 0; k < kMaxVars; ++k) {
        int i = order[k];
        if (a[i] != b[i])
            return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

namespace {
bool term_desc(const mpoly::Term& a, const mpoly::Term& b)
{
    return mono_cmp(a.first, b.first) > 0;
}
} // namespace

void mpoly::normalize()
{
    std::sort(t_.begin(), t_.end(), term_desc);
    std::size_t out = 0;
    for (std::size_t i = 0; i < t_.size();) {
        Mono m = t_[i].first;
        QQ c = t_[i].second;
        std::size_t j = i + 1;
        while (j < t_.size() && mono_cmp(t_[j].first, m) == 0)
            c += t_[j++].second;
        if (sgn(c) != 0)
            t_[out++] = {m, std::move(c)};
        i = j;
    }
    t_.resize(out);
}

mpoly::mpoly(const QQ& c)
{
    if (sgn(c) != 0)
        t_.push_back({Mono{0, 0, 0}, c});
}

mpoly::mpoly(long c)
{
    if (c != 0)
        t_.push_back({Mono{0, 0, 0}, QQ(c)});
}

mpoly mpoly::var(int v, unsigned exp)
{
    assert(v >= 0 && v < kMaxVars);
    mpoly p;
    Mono m{0, 0, 0};
    m[v] = exp;
    p.t_.push_back({m, QQ(1)});
    return p;
}

mpoly mpoly::term(const QQ& c, const Mono& m)
{
    mpoly p;
    if (sgn(c) != 0)
        p.t_.push_back({m, c});
    return p;
}

mpoly mpoly::from_terms(std::vector<Term> terms)
{
    mpoly p;
    p.t_ = std::move(terms);
    p.normalize();
    return p;
}

bool mpoly::is_constant() const
{
    if (t_.empty())
        return true;
    return t_.size() == 1 && t_[0].first == Mono{0, 0, 0};
}

const QQ& mpoly::constant_value() const
{
    static const QQ zero(0);
    if (t_.empty())
        return zero;
    assert(is_constant());
    return t_[0].second;
}

long mpoly::degree(int v) const
{
    if (t_.empty())
        return -1;
    long d = 0;
    for (const auto& [m, c] : t_)
        d = std::max(d, (long)m[v]);
    return d;
}

long mpoly::total_degree(int v1, int v2) const
{
    if (t_.empty())
        return -1;
    long d = 0;
    for (const auto& [m, c] : t_)
        d = std::max(d, (long)m[v1] + (long)m[v2]);
    return d;
}

mpoly mpoly::operator-() const
{
    mpoly r = *this;
    for (auto& [m, c] : r.t_)
        c = -c;
    return r;
}

mpoly mpoly::operator+(const mpoly& o) const
{
    // merge two sorted term lists
    mpoly r;
    r.t_.reserve(t_.size() + o.t_.size());
    std::size_t i = 0, j = 0;
    while (i < t_.size() && j < o.t_.size()) {
        int c = mono_cmp(t_[i].first, o.t_[j].first);
        if (c > 0)
            r.t_.push_back(t_[i++]);
        else if (c < 0)
            r.t_.push_back(o.t_[j++]);
        else {
            QQ s = t_[i].second + o.t_[j].second;
            if (sgn(s) != 0)
                r.t_.push_back({t_[i].first, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < t_.size(); ++i)
        r.t_.push_back(t_[i]);
    for (; j < o.t_.size(); ++j)
        r.t_.push_back(o.t_[j]);
    return r;
}

mpoly mpoly::operator-(const mpoly& o) const { return *this + (-o); }

mpoly mpoly::operator*(const mpoly& o) const
{
    if (t_.empty() || o.t_.empty())
        return {};
    std::map<Mono, QQ, decltype([](const Mono& a, const Mono& b) {
                return mono_cmp(a, b) > 0;
            })>
        acc;
    for (const auto& [ma, ca] : t_) {
        for (const auto& [mb, cb] : o.t_) {
            Mono m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]};
            acc[m] += ca * cb;
        }
    }
    mpoly r;
    r.t_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (sgn(c) != 0)
            r.t_.push_back({m, std::move(c)});
    return r;
}

mpoly mpoly::operator*(const QQ& s) const
{
    if (sgn(s) == 0)
        return {};
    mpoly r = *this;
    for (auto& [m, c] : r.t_)
        c *= s;
    return r;
}

mpoly mpoly::operator/(const QQ& s) const
{
    assert(sgn(s) != 0);
    mpoly r = *this;
    for (auto& [m, c] : r.t_)
        c /= s;
    return r;
}

mpoly mpoly::pow(unsigned e) const
{
    mpoly r(QQ(1));
    mpoly base = *this;
    while (e) {
        if (e & 1)
            r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

mpoly mpoly::coeff_wrt(int v, unsigned k) const
{
    std::vector<Term> out;
    for (const auto& [m, c] : t_) {
        if (m[v] == k) {
            Mono m2 = m;
            m2[v] = 0;
            out.push_back({m2, c});
        }
    }
    return from_terms(std::move(out));
}

mpoly mpoly::lc_wrt(int v) const
{
    long d = degree(v);
    if (d < 0)
        return {};
    return coeff_wrt(v, (unsigned)d);
}

std::vector<mpoly> mpoly::coeffs_wrt(int v) const
{
    std::vector<mpoly> out;
    long d = degree(v);
    if (d < 0)
        return out;
    out.resize(d + 1);
    std::vector<std::vector<Term>> buckets(d + 1);
    for (const auto& [m, c] : t_) {
        Mono m2 = m;
        m2[v] = 0;
        buckets[m[v]].push_back({m2, c});
    }
    for (long k = 0; k <= d; ++k)
        out[k] = from_terms(std::move(buckets[k]));
    return out;
}

mpoly mpoly::derivative(int v) const
{
    std::vector<Term> out;
    for (const auto& [m, c] : t_) {
        if (m[v] == 0)
            continue;
        Mono m2 = m;
        m2[v] -= 1;
        out.push_back({m2, c * QQ((long)m[v])});
    }
    return from_terms(std::move(out));
}

mpoly mpoly::eval(int v, const QQ& value) const
{
    std::vector<Term> out;
    for (const auto& [m, c] : t_) {
        Mono m2 = m;
        m2[v] = 0;
        out.push_back({m2, c * pow_qq(value, m[v])});
    }
    return from_terms(std::move(out));
}

QQ mpoly::eval_all(const QQ& x, const QQ& y, const QQ& z) const
{
    QQ r(0);
    for (const auto& [m, c] : t_)
        r += c * pow_qq(x, m[0]) * pow_qq(y, m[1]) * pow_qq(z, m[2]);
    return r;
}

mpoly mpoly::subst_rational(int v, const mpoly& num, const mpoly& den) const
{
    long d = degree(v);
    if (d <= 0)
        return *this;
    auto cs = coeffs_wrt(v);
    // Horner in num with den-homogenisation: sum c_k num^k den^(d-k)
    mpoly r;
    for (long k = d; k >= 0; --k) {
        r = r * num;
        if (!cs[k].is_zero())
            r = r + cs[k] * den.pow((unsigned)(d - k));
    }
    return r;
}

std::optional<mpoly> mpoly::divexact(const mpoly& d) const
{
    if (d.is_zero())
        return std::nullopt;
    if (is_zero())
        return mpoly{};
    mpoly r = *this;
    std::vector<Term> q;
    const Mono& dm = d.t_[0].first;
    const QQ& dc = d.t_[0].second;
    while (!r.is_zero()) {
        const Mono& rm = r.t_[0].first;
        Mono qm;
        for (int i = 0; i < kMaxVars; ++i) {
            if (rm[i] < dm[i])
                return std::nullopt;
            qm[i] = rm[i] - dm[i];
        }
        QQ qc = r.t_[0].second / dc;
        q.push_back({qm, qc});
        r = r - d * term(qc, qm);
    }
    return from_terms(std::move(q));
}

mpoly mpoly::prem(const mpoly& d, int v) const
{
    long dd = d.degree(v);
    assert(dd >= 0);
    mpoly r = *this;
    long dr = r.degree(v);
    if (dr < dd)
        return r;
    mpoly lcd = d.lc_wrt(v);
    long steps = dr - dd + 1;
    while (!r.is_zero() && (dr = r.degree(v)) >= dd) {
        mpoly lcr = r.lc_wrt(v);
        r = r * lcd - d * (lcr * mpoly::var(v, (unsigned)(dr - dd)));
        --steps;
    }
    // compensate skipped multiplications so the result is lc^(delta+1)*A mod d
    while (steps-- > 0)
        r = r * lcd;
    return r;
}

QQ mpoly::rational_content() const
{
    if (t_.empty())
        return QQ(0);
    ZZ num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : t_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    return rat(num_gcd, den_lcm);
}

std::pair<QQ, mpoly> mpoly::primitive() const
{
    if (t_.empty())
        return {QQ(0), mpoly{}};
    QQ c = rational_content();
    if (sgn(t_[0].second) < 0)
        c = -c;
    return {c, *this / c};
}

std::string mpoly::str(const std::array<std::string, 3>& names) const
{
    if (t_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
        QQ a = c;
        if (first) {
            if (sgn(a) < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0)
                a = -a;
        }
        first = false;
        bool unit = (a == 1);
        bool any_var = m[0] || m[1] || m[2];
        if (!unit || !any_var)
            os << a.get_str();
        bool need_star = !unit || !any_var;
        for (int i = 0; i < kMaxVars; ++i) {
            if (!m[i])
                continue;
            if (need_star)
                os << "*";
            os << names[i];
            if (m[i] > 1)
                os << "^" << m[i];
            need_star = true;
        }
    }
    return os.str();
}

} // namespace mtproot
