#include <catch2/catch_amalgamated.hpp>

#include <mtproot/bounded.hh>
#include <mtproot/exact_sign.hh>
#include <mtproot/polyops.hh>

#include "test_util.hh"

#include <mpfr.h>

using namespace mtproot;

namespace {

// numeric reference roots of g(x, tan x) on (lo, hi), avoiding the poles;
// 256-bit scan oracle for tests
std::vector<double> scan_tan_roots(const mpoly& g, double lo, double hi)
{
    std::vector<double> roots;
    auto f = [&](double x) {
        mpfr_t mx, t, acc;
        mpfr_init2(mx, 256);
        mpfr_init2(t, 256);
        mpfr_init2(acc, 256);
        mpfr_set_d(mx, x, MPFR_RNDN);
        mpfr_tan(t, mx, MPFR_RNDN);
        mpfr_set_ui(acc, 0, MPFR_RNDN);
        // evaluate g(x, tan x) in doubles via mpfr for stability
        double y = mpfr_get_d(t, MPFR_RNDN);
        double r = 0;
        for (auto& [m, c] : g.terms())
            r += c.get_d() * std::pow(x, m[0]) * std::pow(y, m[1]);
        mpfr_clear(mx);
        mpfr_clear(t);
        mpfr_clear(acc);
        return r;
    };
    const int N = 20000;
    double prev = f(lo);
    double prevx = lo;
    for (int i = 1; i <= N; ++i) {
        double x = lo + (hi - lo) * i / N;
        // skip pole neighbourhoods
        double m = std::fmod(x + M_PI / 2, M_PI);
        if (std::fabs(m) < 1e-4 || std::fabs(m - M_PI) < 1e-4) {
            prev = NAN;
            continue;
        }
        double v = f(x);
        if (!std::isnan(prev) && prev * v < 0) {
            // bisect
            double a = prevx, b = x;
            for (int it = 0; it < 200; ++it) {
                double mid = (a + b) / 2;
                if (f(a) * f(mid) <= 0)
                    b = mid;
                else
                    a = mid;
            }
            roots.push_back((a + b) / 2);
        }
        prev = v;
        prevx = x;
    }
    return roots;
}

double half_value(const HalfEndpoint& e)
{
    Enclosure en = e.enclose(64);
    return en.lo.get_d();
}

} // namespace

TEST_CASE("endpoint comparisons")
{
    Endpoint zero = Endpoint::rational(QQ(0));
    REQUIRE(compare_endpoints(Endpoint::symbolic(ZZ(0), QQ(0)), zero) == 0);
    // 2 arctan 1 = pi/2 equals Symbolic(1, 0)
    REQUIRE(compare_endpoints(Endpoint::symbolic(ZZ(0), QQ(1)),
                              Endpoint::symbolic(ZZ(1), QQ(0))) == 0);
    // 2 arctan(1/2) < 1
    REQUIRE(compare_endpoints(Endpoint::symbolic(ZZ(0), rat(1, 2)),
                              Endpoint::rational(QQ(1))) < 0);
    // pi/2 + 2 arctan(1/3) = 2 arctan(2): arctan 2 - arctan(1/3) = pi/4
    REQUIRE(compare_endpoints(Endpoint::symbolic(ZZ(1), rat(1, 3)),
                              Endpoint::symbolic(ZZ(0), QQ(2))) == 0);
    REQUIRE(compare_endpoints(Endpoint::minus_infinity(), zero) < 0);
    REQUIRE(compare_endpoints(zero, Endpoint::plus_infinity()) < 0);
    REQUIRE(Endpoint::symbolic(ZZ(1), QQ(0)).str() == "1/2*Pi");
    REQUIRE(Endpoint::symbolic(ZZ(2), QQ(0)).str() == "Pi");
    REQUIRE(Endpoint::symbolic(ZZ(-5), rat(-3, 4)).str() ==
            "-5/2*Pi-2*arctan(3/4)");
}

TEST_CASE("poly multiple test")
{
    mpoly x = mpoly::var(VX), y = mpoly::var(VY);
    mpoly F1 = x * y + 1;
    auto q1 = poly_multiple_test((y * y + 1) * F1, F1);
    REQUIRE(q1.has_value());
    REQUIRE(*q1 == upoly::from_coeffs({QQ(1), QQ(0), QQ(1)}));
    REQUIRE(!poly_multiple_test(x * F1, F1).has_value());
    REQUIRE(!poly_multiple_test(x * y - 3, F1).has_value());
}

TEST_CASE("sub_ibr spec examples")
{
    mpoly x = mpoly::var(VX), y = mpoly::var(VY);

    // g = y + 1 -> empty for any r
    REQUIRE(sub_ibr(y + 1, QQ(0)).intervals.empty());
    REQUIRE(sub_ibr(y + 1, rat(5, 4)).intervals.empty());

    // g = 2y - 1, r = 0: single root arctan(1/2) in (0, pi/4)
    auto s = sub_ibr(y * 2 - 1, QQ(0));
    REQUIRE(s.intervals.size() == 1);
    auto [c, d] = s.intervals[0];
    // root of w1 = 2y-1 at y = 1/2
    REQUIRE(c < rat(1, 2));
    REQUIRE(rat(1, 2) < d);

    // g = y - x: tan x > x on (0, pi/4), no roots
    REQUIRE(sub_ibr(y - x, QQ(0)).intervals.empty());
}

TEST_CASE("isolating bounded roots: point cases")
{
    mpoly y = mpoly::var(VY);

    auto h1 = isolating_bounded_roots(y, 1); // tan x = 0 at pi
    REQUIRE(h1.size() == 1);
    REQUIRE(h1[0].is_point());
    REQUIRE(compare_half(h1[0].value, HalfEndpoint::quarter(ZZ(4), QQ(0))) == 0);

    auto h2 = isolating_bounded_roots(y - 1, 0); // tan x = 1 at pi/4
    REQUIRE(h2.size() == 1);
    REQUIRE(h2[0].is_point());
    REQUIRE(compare_half(h2[0].value, HalfEndpoint::quarter(ZZ(1), QQ(0))) == 0);

    auto h3 = isolating_bounded_roots(y * 2 - 1, 0);
    REQUIRE(h3.size() == 1);
    REQUIRE(!h3[0].is_point());
    // contains arctan(1/2) ~ 0.4636
    REQUIRE(half_value(h3[0].lo()) < 0.46365);
    REQUIRE(half_value(h3[0].hi()) > 0.46364);
}

TEST_CASE("bounded roots match a numeric scan")
{
    testutil::Rng rng(1215);
    int done = 0;
    while (done < 8) {
        mpoly g = rng.poly(2, 3, 4, 3);
        if (g.is_zero() || g.degree(VY) < 1 || g.degree(VX) < 1)
            continue;
        for (long k = -1; k <= 1; ++k) {
            auto hits = isolating_bounded_roots(g, k);
            double lo = k * M_PI - M_PI / 2 + 2e-4;
            double hi = k * M_PI + M_PI / 2 - 2e-4;
            auto ref = scan_tan_roots(g, lo, hi);
            // every scan root must land in exactly one hit; point hits match
            // scan roots within tolerance
            std::size_t matched = 0;
            for (double rt : ref) {
                int inside = 0;
                for (auto& h : hits) {
                    double a = half_value(h.lo()) - 1e-9;
                    double b = half_value(h.hi()) + 1e-9;
                    if (a <= rt && rt <= b)
                        ++inside;
                }
                if (inside >= 1)
                    ++matched;
                CAPTURE(g.str(), k, rt);
                REQUIRE(inside >= 1);
            }
            REQUIRE(matched == ref.size());
            REQUIRE(hits.size() >= ref.size());
            // pairwise disjoint
            for (std::size_t i = 0; i + 1 < hits.size(); ++i)
                REQUIRE(!hits_overlap(hits[i], hits[i + 1]));
        }
        ++done;
    }
}
