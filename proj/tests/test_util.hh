// Shared helpers for the test suites: MPFR reference values (independent of
// the exact kernel) and deterministic random generators.

#ifndef MTPROOT_TEST_UTIL_HH
#define MTPROOT_TEST_UTIL_HH

#include <mtproot/basic.hh>
#include <mtproot/mpoly.hh>
#include <mtproot/enclosure.hh>

#include <mpfr.h>
#include <random>
#include <vector>

namespace testutil {

using namespace mtproot;

// 256-bit reference value holder.
class Ref {
public:
    explicit Ref(unsigned prec = 256) { mpfr_init2(v_, prec); }
    ~Ref() { mpfr_clear(v_); }
    Ref(const Ref&) = delete;
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    bool inside(const Enclosure& e) const
    {
        return mpfr_cmp_q(v_, const_cast<mpq_ptr>(e.lo.get_mpq_t())) >= 0 &&
               mpfr_cmp_q(v_, const_cast<mpq_ptr>(e.hi.get_mpq_t())) <= 0;
    }

private:
    mpfr_t v_;
};

inline void ref_pi(Ref& r) { mpfr_const_pi(r.get(), MPFR_RNDN); }

inline void ref_arctan_q(Ref& r, const QQ& q)
{
    mpfr_t t;
    mpfr_init2(t, 256);
    mpfr_set_q(t, const_cast<mpq_ptr>(q.get_mpq_t()), MPFR_RNDN);
    mpfr_atan(r.get(), t, MPFR_RNDN);
    mpfr_clear(t);
}

// r*pi + arctan(q) at 256 bits.
inline void ref_shifted_arctan(Ref& out, const QQ& r, const QQ& q)
{
    mpfr_t pi, rq, at;
    mpfr_init2(pi, 256);
    mpfr_init2(rq, 256);
    mpfr_init2(at, 256);
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_set_q(rq, const_cast<mpq_ptr>(r.get_mpq_t()), MPFR_RNDN);
    mpfr_mul(pi, pi, rq, MPFR_RNDN);
    mpfr_set_q(at, const_cast<mpq_ptr>(q.get_mpq_t()), MPFR_RNDN);
    mpfr_atan(at, at, MPFR_RNDN);
    mpfr_add(out.get(), pi, at, MPFR_RNDN);
    mpfr_clear(pi);
    mpfr_clear(rq);
    mpfr_clear(at);
}

// Convenience builder: make_poly({{c, i, j}, ...}) = sum c x^i y^j.
inline mpoly make_poly(const std::vector<std::tuple<long, unsigned, unsigned>>& ts)
{
    std::vector<mpoly::Term> terms;
    for (auto& [c, i, j] : ts)
        terms.push_back({Mono{i, j, 0}, QQ(c)});
    return mpoly::from_terms(std::move(terms));
}

struct Rng {
    std::mt19937_64 g;
    explicit Rng(unsigned long seed) : g(seed) {}

    long integer(long lo, long hi) // inclusive
    {
        return lo + (long)(g() % (unsigned long)(hi - lo + 1));
    }
    QQ rational(long cmax)
    {
        long num = integer(-cmax, cmax);
        long den = integer(1, cmax);
        return rat(num, den);
    }
    mpoly poly(int nvars, long maxdeg, long cmax, int nterms)
    {
        std::vector<mpoly::Term> ts;
        for (int t = 0; t < nterms; ++t) {
            Mono m{0, 0, 0};
            for (int v = 0; v < nvars; ++v)
                m[v] = (unsigned)integer(0, maxdeg);
            long c = integer(-cmax, cmax);
            if (c != 0)
                ts.push_back({m, QQ(c)});
        }
        return mpoly::from_terms(std::move(ts));
    }
};

} // namespace testutil

#endif
