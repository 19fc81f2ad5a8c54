#include <mtproot/fourier.hh>
#include <mtproot/exact_sign.hh>

#include <cassert>
#include <stdexcept>

namespace mtproot {

WeakFourierSequence weak_fourier_seq(const mpoly& G, const QQ& r)
{
    if (G.is_zero())
        throw std::invalid_argument("weak_fourier_seq: zero polynomial");
    WeakFourierSequence seq;
    seq.r = r;
    seq.F.push_back(G);
    seq.m.push_back(0);

    ratcoeff_poly g = ratcoeff_poly::from_bivar(G);
    while (!g.is_rational_constant()) {
        g = g.arctan_derivative().first;
        seq.m.push_back(g.max_m());
        seq.F.push_back(g.polynomialize());
        if (seq.F.size() > 100000)
            throw std::runtime_error("weak_fourier_seq: descent failed");
    }
    seq.last_constant = g.rational_value();
    return seq;
}

Sign wfs_sign_at(const WeakFourierSequence& seq, std::size_t j, const QQ& y)
{
    assert(j >= 1 && j <= seq.length());
    return sign_at_shifted_arctan(seq.F[j - 1], seq.r, y);
}

std::vector<Sign> sgc_signs(const WeakFourierSequence& seq, std::size_t m,
                            const QQ& c, const QQ& d, Side side)
{
    assert(1 <= m && m <= seq.length());
    std::vector<Sign> s(m + 1, 0);

    if (m == seq.length())
        s[m] = sign_of(seq.last_constant);
    else
        s[m] = wfs_sign_at(seq, m, (c + d) / 2);
    if (s[m] == 0)
        throw std::logic_error("sgc: w_m vanishes on the working interval");

    const QQ& point = side == Side::plus ? c : d;
    for (std::size_t j = m; j-- > 1;) {
        Sign l = wfs_sign_at(seq, j, point);
        if (l != 0)
            s[j] = l;
        else
            // one-sided limit of w_j at a zero: the sign is carried by the
            // derivative's sign w_{j+1}; on the left side it is flipped
            s[j] = side == Side::plus ? s[j + 1] : -s[j + 1];
    }
    return s;
}

unsigned sgc(const WeakFourierSequence& seq, std::size_t i, std::size_t m,
             const QQ& c, const QQ& d, Side side)
{
    assert(1 <= i && i <= m && m <= seq.length());
    std::vector<Sign> s = sgc_signs(seq, m, c, d, side);
    unsigned changes = 0;
    for (std::size_t j = i; j < m; ++j)
        if (s[j] != s[j + 1])
            ++changes;
    return changes;
}

} // namespace mtproot
