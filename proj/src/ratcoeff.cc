#include <mtproot/ratcoeff.hh>
#include <mtproot/polyops.hh>

#include <cassert>
#include <stdexcept>

namespace mtproot {

namespace {

upoly one_plus_y2()
{
    return upoly::from_coeffs({QQ(1), QQ(0), QQ(1)});
}

} // namespace

void ratcoeff_poly::normalize()
{
    const upoly d = one_plus_y2();
    for (auto& c : c_) {
        if (c.num.is_zero()) {
            c.m = 0;
            continue;
        }
        while (c.m > 0) {
            auto [q, r] = c.num.divrem(d);
            if (!r.is_zero())
                break;
            c.num = q;
            --c.m;
        }
    }
    while (!c_.empty() && c_.back().num.is_zero())
        c_.pop_back();
}

ratcoeff_poly ratcoeff_poly::from_bivar(const mpoly& g)
{
    ratcoeff_poly p;
    long d = g.degree(VX);
    if (d < 0)
        return p;
    p.c_.resize(d + 1);
    auto cs = g.coeffs_wrt(VX);
    for (long j = 0; j <= d; ++j) {
        p.c_[(std::size_t)j].num = upoly::from_mpoly(cs[(std::size_t)j], VY);
        p.c_[(std::size_t)j].m = 0;
    }
    p.normalize();
    return p;
}

bool ratcoeff_poly::is_rational_constant() const
{
    if (c_.empty())
        return false; // zero is not a *nonzero* rational
    return c_.size() == 1 && c_[0].m == 0 && c_[0].num.degree() == 0;
}

QQ ratcoeff_poly::rational_value() const
{
    assert(is_rational_constant());
    return c_[0].num[0];
}

std::pair<ratcoeff_poly, unsigned> ratcoeff_poly::arctan_derivative() const
{
    if (is_zero() || is_rational_constant())
        throw std::invalid_argument("arctan_derivative: constant input");
    const upoly d = one_plus_y2();
    const upoly two_y = upoly::from_coeffs({QQ(0), QQ(2)});

    // G* coefficient at x^j: (j+1) a_{j+1} / d^(m_{j+1}+1)
    //                      + (a_j' d - 2y m_j a_j) / d^(m_j+1)
    ratcoeff_poly star;
    star.c_.resize(c_.size());
    for (std::size_t j = 0; j < c_.size(); ++j) {
        upoly num_a;
        unsigned ma = 0;
        if (j + 1 < c_.size() && !c_[j + 1].num.is_zero()) {
            num_a = c_[j + 1].num * QQ((long)(j + 1));
            ma = c_[j + 1].m + 1;
        }
        upoly num_b;
        unsigned mb = 0;
        if (!c_[j].num.is_zero()) {
            num_b = c_[j].num.derivative() * d - two_y * c_[j].num * QQ((long)c_[j].m);
            mb = c_[j].m + 1;
        }
        unsigned m = std::max(ma, mb);
        upoly num;
        if (!num_a.is_zero()) {
            upoly scaled = num_a;
            for (unsigned k = ma; k < m; ++k)
                scaled = scaled * d;
            num = num + scaled;
        }
        if (!num_b.is_zero()) {
            upoly scaled = num_b;
            for (unsigned k = mb; k < m; ++k)
                scaled = scaled * d;
            num = num + scaled;
        }
        star.c_[j].m = num.is_zero() ? 0 : m;
        star.c_[j].num = std::move(num);
    }
    star.normalize();
    assert(!star.is_zero()); // nonconstant G has nonzero arctan-derivative

    // clear the leading denominator (the common-term)
    unsigned mtop = star.c_.back().m;
    if (mtop > 0) {
        for (auto& c : star.c_) {
            if (c.num.is_zero())
                continue;
            if (c.m >= mtop)
                c.m -= mtop;
            else {
                for (unsigned k = c.m; k < mtop; ++k)
                    c.num = c.num * d;
                c.m = 0;
            }
        }
        star.normalize();
    }
    return {star, mtop};
}

unsigned ratcoeff_poly::max_m() const
{
    unsigned m = 0;
    for (const auto& c : c_)
        m = std::max(m, c.m);
    return m;
}

mpoly ratcoeff_poly::polynomialize() const
{
    const upoly d = one_plus_y2();
    unsigned mm = max_m();
    mpoly out;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j].num.is_zero())
            continue;
        upoly num = c_[j].num;
        for (unsigned k = c_[j].m; k < mm; ++k)
            num = num * d;
        out = out + num.to_mpoly(VY) * mpoly::var(VX, (unsigned)j);
    }
    return out;
}

} // namespace mtproot
