// fourier.hh -- weak Fourier sequences for G(r*pi + arctan y, y) and
// one-sided sign-change counts (sgc).

#ifndef MTPROOT_FOURIER_HH
#define MTPROOT_FOURIER_HH

#include <mtproot/mpoly.hh>
#include <mtproot/ratcoeff.hh>

#include <vector>

namespace mtproot {

// F_1,...,F_k in Q[x,y] with w_i(y) = F_i(r*pi + arctan y, y) a weak Fourier
// sequence on R: sign(w_{i+1}) = sign(w_i') everywhere and w_k a nonzero
// rational constant.  F_1 equals the input polynomial.
struct WeakFourierSequence {
    QQ r;
    std::vector<mpoly> F;
    std::vector<unsigned> m; // F_i = (1+y^2)^m_i * G_i of the derivative chain
    QQ last_constant;        // value of F_k

    std::size_t length() const { return F.size(); }
};

// Iterates the arctan-derivative until a nonzero rational appears.
WeakFourierSequence weak_fourier_seq(const mpoly& G, const QQ& r);

enum class Side { plus, minus };

// Number of sign changes of the one-sided limit signs of w_i,...,w_m at c^+
// (side = plus) or d^- (side = minus).  Precondition (the callers' stack
// discipline): w_m has a constant nonzero sign on (c,d); its sign is read at
// the midpoint.  Indices are 1-based as in the sequence w_1..w_k.
unsigned sgc(const WeakFourierSequence& seq, std::size_t i, std::size_t m,
             const QQ& c, const QQ& d, Side side);

// the full vector of one-sided limit signs s_1..s_m (index 0 unused), from
// which every sgc_{i,m} follows; shared by the quarter solver's scans
std::vector<Sign> sgc_signs(const WeakFourierSequence& seq, std::size_t m,
                            const QQ& c, const QQ& d, Side side);

// sign of w_j at a rational point (exact, zero iff truly zero)
Sign wfs_sign_at(const WeakFourierSequence& seq, std::size_t j, const QQ& y);

} // namespace mtproot

#endif
