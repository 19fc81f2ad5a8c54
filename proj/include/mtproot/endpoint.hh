// endpoint.hh -- the exact numbers appearing as interval endpoints:
// rationals and u*(pi/2) + 2*arctan(q), plus their half-angle counterparts
// u*(pi/4) + arctan(q) used while working period-by-period.

#ifndef MTPROOT_ENDPOINT_HH
#define MTPROOT_ENDPOINT_HH

#include <mtproot/basic.hh>
#include <mtproot/enclosure.hh>

#include <string>

namespace mtproot {

// Decides arctan(q1) - arctan(q2) == t*(pi/4) for integer |t| <= 3 exactly.
bool arctan_diff_is(const QQ& q1, const QQ& q2, long t);

struct Endpoint {
    enum class Kind { minus_inf, rational, symbolic, plus_inf };
    Kind kind = Kind::rational;
    ZZ u;    // symbolic: u*(pi/2) + 2*arctan(q)
    QQ q;

    static Endpoint rational(QQ v);
    static Endpoint symbolic(ZZ u, QQ q); // normalizes q = +-1 and zero
    static Endpoint minus_infinity();
    static Endpoint plus_infinity();

    bool is_rational() const { return kind == Kind::rational; }
    bool is_symbolic() const { return kind == Kind::symbolic; }
    bool finite() const { return kind == Kind::rational || kind == Kind::symbolic; }

    Enclosure enclose(unsigned bits) const; // finite endpoints only
    Endpoint operator-() const;
    std::string str() const; // exact rendering, e.g. "5/2*Pi+2*arctan(3/4)"
};

// total order consistent with the real values; exact
int compare_endpoints(const Endpoint& a, const Endpoint& b);

struct Interval {
    Endpoint lo, hi;
    bool is_point() const { return compare_endpoints(lo, hi) == 0; }
};

struct HalfEndpoint {
    bool rational = true;
    ZZ u;   // symbolic: u*(pi/4) + arctan(q)
    QQ q;   // rational: the value itself

    static HalfEndpoint from_rational(QQ v);
    static HalfEndpoint quarter(ZZ u, QQ q); // normalizes q = +-1 and zero

    Enclosure enclose(unsigned bits) const;
    Endpoint doubled() const; // 2*value in the report grammar
};

int compare_half(const HalfEndpoint& a, const HalfEndpoint& b);

} // namespace mtproot

#endif
