#include <mtproot/enclosure.hh>

#include <mutex>

namespace mtproot {

Enclosure eval_poly(const std::vector<QQ>& c, const Enclosure& x)
{
    Enclosure acc;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

namespace {

// Alternating bracket for arctan(q) on 0 < q <= 1/2 (also valid up to 1, but
// only called with fast geometric decay).  Terms t_i = q^(2i+1)/(2i+1) are
// strictly decreasing, so consecutive partial sums bracket the limit.
Enclosure arctan_series(const QQ& q, unsigned bits)
{
    const QQ q2 = q * q;
    const QQ tol = pow2_inv(bits);
    QQ power = q; // q^(2i+1)
    QQ lo(0), hi(0);
    QQ sum(0);
    unsigned long i = 0;
    for (;;) {
        QQ term = power / QQ(2 * i + 1);
        if (i % 2 == 0) { // partial sum is an upper bound after adding
            sum += term;
            hi = sum;
        } else {
            sum -= term;
            lo = sum;
        }
        if (i >= 1 && term <= tol)
            break;
        power *= q2;
        ++i;
    }
    // Width is the last term, <= tol once i >= 1; both bounds were set.
    return {lo, hi};
}

// arctan(1/m) for integer m>=2, width <= 2^-bits, bracketed by alternating
// partial sums.  Used by the Machin formula.
Enclosure arctan_inv(unsigned long m, unsigned bits)
{
    return arctan_series(rat(1, (long)m), bits);
}

} // namespace

Enclosure pi_enclosure(unsigned bits)
{
    // pi = 16*arctan(1/5) - 4*arctan(1/239).  Each arctan bracket at
    // bits+6 keeps the combined width under 2^-bits.  Nested refinement
    // follows from nested partial-sum brackets and a monotone term count.
    static std::mutex mtx;
    static unsigned cached_bits = 0;
    static Enclosure cached;

    std::lock_guard<std::mutex> lock(mtx);
    if (cached_bits >= bits && cached_bits > 0) {
        // A cached tighter enclosure is contained in every coarser one, so
        // returning it preserves the refinement contract.
        return cached;
    }
    Enclosure a = arctan_inv(5, bits + 6);
    Enclosure b = arctan_inv(239, bits + 6);
    Enclosure pi{a.lo * 16 - b.hi * 4, a.hi * 16 - b.lo * 4};
    cached = pi;
    cached_bits = bits;
    return pi;
}

Enclosure arctan_enclosure(const QQ& q, unsigned bits)
{
    const int s = sgn(q);
    if (s == 0)
        return Enclosure(QQ(0));
    if (s < 0) {
        Enclosure e = arctan_enclosure(QQ(-q), bits);
        return -e;
    }
    if (q > 1) {
        // arctan q = pi/2 - arctan(1/q)
        Enclosure pi = pi_enclosure(bits + 2);
        Enclosure inner = arctan_enclosure(QQ(1 / q), bits + 2);
        return {pi.lo / 2 - inner.hi, pi.hi / 2 - inner.lo};
    }
    if (q == 1) {
        Enclosure pi = pi_enclosure(bits + 2);
        return {pi.lo / 4, pi.hi / 4};
    }
    if (q > rat(1, 2)) {
        // arctan q = pi/4 + arctan((q-1)/(q+1)), argument in (-1/3, 0].
        Enclosure pi = pi_enclosure(bits + 3);
        Enclosure inner = arctan_enclosure(QQ((q - 1) / (q + 1)), bits + 2);
        return {pi.lo / 4 + inner.lo, pi.hi / 4 + inner.hi};
    }
    return arctan_series(q, bits);
}

} // namespace mtproot
