// mtpgen.hh -- random MTP generator used by the test corpus and the CLI's
// gen subcommand.

#ifndef MTPROOT_MTPGEN_HH
#define MTPROOT_MTPGEN_HH

#include <mtproot/mpoly.hh>

#include <cstdint>

namespace mtproot {

// Draw a trivariate polynomial: each monomial x^a1 y^a2 z^a3 with
// a1+a2+a3 <= d is kept with probability p and given a uniform nonzero
// coefficient in [-c, c].  Deterministic in the generator state.
class MtpGen {
public:
    explicit MtpGen(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    mpoly rp(unsigned d, const QQ& p, long c);
    // redraws until f(x, sin x, cos x) is not identically zero
    mpoly rp_nonzero(unsigned d, const QQ& p, long c);

private:
    std::uint64_t state_;
    std::uint64_t next();
    bool bernoulli(const QQ& p);
    long uniform_nonzero(long c);
};

} // namespace mtproot

#endif
