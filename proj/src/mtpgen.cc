#include <mtproot/mtpgen.hh>
#include <mtproot/polyops.hh>

#include <stdexcept>

namespace mtproot {

// splitmix64: small, stable across platforms
std::uint64_t MtpGen::next()
{
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

bool MtpGen::bernoulli(const QQ& p)
{
    // success iff draw/2^53 < p, i.e. draw * den < num * 2^53
    std::uint64_t draw = next() >> 11;
    ZZ lhs = ZZ((unsigned long)draw) * p.get_den();
    ZZ rhs = p.get_num() << 53;
    return lhs < rhs;
}

long MtpGen::uniform_nonzero(long c)
{
    long v = (long)(next() % (unsigned long)(2 * c)) - c; // [-c, c-1]
    return v >= 0 ? v + 1 : v;                            // skip 0
}

mpoly MtpGen::rp(unsigned d, const QQ& p, long c)
{
    if (c < 1 || sgn(p) < 0 || p > 1)
        throw std::invalid_argument("rp: need c >= 1 and p in [0,1]");
    std::vector<mpoly::Term> terms;
    for (unsigned a1 = 0; a1 <= d; ++a1)
        for (unsigned a2 = 0; a1 + a2 <= d; ++a2)
            for (unsigned a3 = 0; a1 + a2 + a3 <= d; ++a3)
                if (bernoulli(p))
                    terms.push_back({Mono{a1, a2, a3}, QQ(uniform_nonzero(c))});
    return mpoly::from_terms(std::move(terms));
}

mpoly MtpGen::rp_nonzero(unsigned d, const QQ& p, long c)
{
    for (int tries = 0; tries < 10000; ++tries) {
        mpoly f = rp(d, p, c);
        if (!f.is_zero() && !mtp_to_tan(f).is_zero())
            return f;
    }
    throw std::runtime_error("rp_nonzero: p too small to draw anything");
}

} // namespace mtproot
