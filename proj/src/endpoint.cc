#include <mtproot/endpoint.hh>

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace mtproot {

bool arctan_diff_is(const QQ& q1, const QQ& q2, long t)
{
    // D = arctan q1 - arctan q2 lies in (-pi, pi); cos D has the sign of
    // 1 + q1 q2 and tan D = (q1-q2)/(1+q1q2) where defined.
    switch (t) {
    case 0:
        return q1 == q2;
    case 2:
        return q1 * q2 == -1 && sgn(q1) > 0;
    case -2:
        return q1 * q2 == -1 && sgn(q1) < 0;
    case 1:
        return q1 * q2 > -1 && q1 - q2 == 1 + q1 * q2;
    case -1:
        return q1 * q2 > -1 && q1 - q2 == -(1 + q1 * q2);
    case 3:
        return q1 * q2 < -1 && sgn(q1) > 0 && q1 - q2 == -(1 + q1 * q2);
    case -3:
        return q1 * q2 < -1 && sgn(q1) < 0 && q1 - q2 == 1 + q1 * q2;
    default:
        return false;
    }
}

Endpoint Endpoint::rational(QQ v)
{
    Endpoint e;
    e.kind = Kind::rational;
    e.q = std::move(v);
    return e;
}

Endpoint Endpoint::symbolic(ZZ u, QQ q)
{
    if (q == 1) { // 2 arctan 1 = pi/2
        u += 1;
        q = 0;
    } else if (q == -1) {
        u -= 1;
        q = 0;
    }
    if (u == 0 && sgn(q) == 0)
        return rational(QQ(0));
    Endpoint e;
    e.kind = Kind::symbolic;
    e.u = std::move(u);
    e.q = std::move(q);
    return e;
}

Endpoint Endpoint::minus_infinity()
{
    Endpoint e;
    e.kind = Kind::minus_inf;
    return e;
}

Endpoint Endpoint::plus_infinity()
{
    Endpoint e;
    e.kind = Kind::plus_inf;
    return e;
}

Enclosure Endpoint::enclose(unsigned bits) const
{
    switch (kind) {
    case Kind::rational:
        return Enclosure(q);
    case Kind::symbolic: {
        Enclosure at = arctan_enclosure(q, bits + 2) * QQ(2);
        if (u == 0)
            return at;
        return pi_enclosure(bits + 2) * rat(u, ZZ(2)) + at;
    }
    default:
        throw std::logic_error("Endpoint::enclose: infinite endpoint");
    }
}

Endpoint Endpoint::operator-() const
{
    switch (kind) {
    case Kind::rational:
        return rational(QQ(-q));
    case Kind::symbolic:
        return symbolic(ZZ(-u), QQ(-q));
    case Kind::minus_inf:
        return plus_infinity();
    default:
        return minus_infinity();
    }
}

std::string Endpoint::str() const
{
    switch (kind) {
    case Kind::minus_inf:
        return "-inf";
    case Kind::plus_inf:
        return "+inf";
    case Kind::rational:
        return q.get_str();
    default:
        break;
    }
    std::ostringstream os;
    bool have = false;
    if (u != 0) {
        // u*(pi/2) printed as r*Pi with r = u/2
        QQ r = rat(u, ZZ(2));
        if (r == 1)
            os << "Pi";
        else if (r == -1)
            os << "-Pi";
        else
            os << r.get_str() << "*Pi";
        have = true;
    }
    if (sgn(q) != 0) {
        if (have)
            os << (sgn(q) > 0 ? "+" : "-");
        else if (sgn(q) < 0)
            os << "-";
        os << "2*arctan(" << QQ(abs(q)).get_str() << ")";
        have = true;
    }
    if (!have)
        os << "0";
    return os.str();
}

namespace {

int compare_by_refinement(const Endpoint& a, const Endpoint& b)
{
    for (unsigned bits = 32;; bits *= 2) {
        Enclosure ea = a.enclose(bits);
        Enclosure eb = b.enclose(bits);
        if (ea.hi < eb.lo)
            return -1;
        if (eb.hi < ea.lo)
            return 1;
        if (bits > (1u << 24))
            throw std::runtime_error("compare_endpoints: refinement stalled");
    }
}

} // namespace

int compare_endpoints(const Endpoint& a, const Endpoint& b)
{
    using K = Endpoint::Kind;
    if (a.kind == K::minus_inf)
        return b.kind == K::minus_inf ? 0 : -1;
    if (b.kind == K::minus_inf)
        return 1;
    if (a.kind == K::plus_inf)
        return b.kind == K::plus_inf ? 0 : 1;
    if (b.kind == K::plus_inf)
        return -1;

    if (a.is_rational() && b.is_rational())
        return sgn(QQ(a.q - b.q));
    if (a.is_symbolic() && b.is_symbolic()) {
        // equality iff 2(arctan q_a - arctan q_b) = (u_b - u_a) pi/2
        ZZ du = b.u - a.u;
        if (abs(du) <= 3 && arctan_diff_is(a.q, b.q, du.get_si()))
            return 0;
        return compare_by_refinement(a, b);
    }
    // a symbolic value equals a rational only when it is 0, which the
    // constructor already normalized away
    return compare_by_refinement(a, b);
}

HalfEndpoint HalfEndpoint::from_rational(QQ v)
{
    HalfEndpoint h;
    h.rational = true;
    h.q = std::move(v);
    return h;
}

HalfEndpoint HalfEndpoint::quarter(ZZ u, QQ q)
{
    if (q == 1) {
        u += 1;
        q = 0;
    } else if (q == -1) {
        u -= 1;
        q = 0;
    }
    if (u == 0 && sgn(q) == 0)
        return from_rational(QQ(0));
    HalfEndpoint h;
    h.rational = false;
    h.u = std::move(u);
    h.q = std::move(q);
    return h;
}

Enclosure HalfEndpoint::enclose(unsigned bits) const
{
    if (rational)
        return Enclosure(q);
    Enclosure at = arctan_enclosure(q, bits + 2);
    if (u == 0)
        return at;
    return pi_enclosure(bits + 2) * rat(u, ZZ(4)) + at;
}

Endpoint HalfEndpoint::doubled() const
{
    if (rational)
        return Endpoint::rational(QQ(q * 2));
    return Endpoint::symbolic(u, q);
}

int compare_half(const HalfEndpoint& a, const HalfEndpoint& b)
{
    if (a.rational && b.rational)
        return sgn(QQ(a.q - b.q));
    if (!a.rational && !b.rational) {
        ZZ du = b.u - a.u;
        if (abs(du) <= 3 && arctan_diff_is(a.q, b.q, du.get_si()))
            return 0;
    }
    // symbolic vs rational can only tie at 0, normalized away
    for (unsigned bits = 32;; bits *= 2) {
        Enclosure ea = a.enclose(bits);
        Enclosure eb = b.enclose(bits);
        if (ea.hi < eb.lo)
            return -1;
        if (eb.hi < ea.lo)
            return 1;
        if (bits > (1u << 24))
            throw std::runtime_error("compare_half: refinement stalled");
    }
}

} // namespace mtproot
