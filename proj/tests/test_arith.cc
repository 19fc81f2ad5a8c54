#include <catch2/catch_amalgamated.hpp>

#include <mtproot/enclosure.hh>
#include <mtproot/exact_sign.hh>
#include <mtproot/polyops.hh>

#include "test_util.hh"

using namespace mtproot;
using testutil::make_poly;
using testutil::Ref;

TEST_CASE("pi enclosure basics")
{
    Enclosure e2 = pi_enclosure(2);
    REQUIRE(e2.lo > 3);
    REQUIRE(e2.hi < rat(7, 2));
    REQUIRE(e2.width() <= pow2_inv(2));

    Enclosure e20 = pi_enclosure(20);
    REQUIRE(e20.width() <= pow2_inv(20));
    Ref pi;
    testutil::ref_pi(pi);
    REQUIRE(pi.inside(e20));
    // localizes pi inside the 3.141592 / 3.141593 decimal window
    REQUIRE(e20.lo >= rat(3141592, 1000000));
    REQUIRE(e20.hi <= rat(3141593, 1000000));
}

TEST_CASE("pi enclosure refines monotonically")
{
    Enclosure prev = pi_enclosure(1);
    for (unsigned b = 2; b <= 80; ++b) {
        Enclosure cur = pi_enclosure(b);
        REQUIRE(prev.contains(cur));
        REQUIRE(cur.width() <= pow2_inv(b));
        prev = cur;
    }
}

TEST_CASE("arctan enclosure examples")
{
    REQUIRE(arctan_enclosure(QQ(0), 50).lo == 0);
    REQUIRE(arctan_enclosure(QQ(0), 50).hi == 0);

    // arctan 1 = pi/4
    Enclosure a1 = arctan_enclosure(QQ(1), 8);
    Enclosure pi10 = pi_enclosure(10);
    REQUIRE(a1.lo <= pi10.hi / 4);
    REQUIRE(a1.hi >= pi10.lo / 4);
    REQUIRE(a1.width() <= pow2_inv(8));

    Enclosure ah = arctan_enclosure(rat(1, 2), 20);
    REQUIRE(ah.width() <= pow2_inv(20));
    REQUIRE(ah.contains(rat(4636476, 10000000)));
    Ref r;
    testutil::ref_arctan_q(r, rat(1, 2));
    REQUIRE(r.inside(ah));
}

TEST_CASE("random enclosures contain 256-bit references and meet widths")
{
    testutil::Rng rng(20240817);
    for (int i = 0; i < 1000; ++i) {
        QQ q = rng.rational(50);
        unsigned bits = (unsigned)rng.integer(1, 96);
        Enclosure e = arctan_enclosure(q, bits);
        CAPTURE(q.get_str(), bits);
        REQUIRE(e.width() <= pow2_inv(bits));
        Ref r;
        testutil::ref_arctan_q(r, q);
        REQUIRE(r.inside(e));
    }
}

TEST_CASE("sign at shifted arctan examples")
{
    mpoly x = mpoly::var(VX), y = mpoly::var(VY);

    REQUIRE(sign_at_shifted_arctan(x, QQ(1), QQ(0)) == 1);
    // arctan(1/2) < 2
    REQUIRE(sign_at_shifted_arctan(x - y * QQ(4), QQ(0), rat(1, 2)) == -1);
    // both coefficients vanish at y = 1/2
    mpoly h = (y * 2 - 1) * x + (y * 4 - 2);
    REQUIRE(sign_at_shifted_arctan(h, QQ(3), rat(1, 2)) == 0);
    // rational point x = 0
    REQUIRE(sign_at_shifted_arctan(x + 1, QQ(0), QQ(0)) == 1);
    REQUIRE(sign_at_shifted_arctan(x, QQ(0), QQ(0)) == 0);
}

TEST_CASE("sign at shifted arctan agrees with 300-bit numerics")
{
    testutil::Rng rng(77);
    int checked = 0;
    for (int i = 0; i < 400; ++i) {
        mpoly h = rng.poly(2, 3, 9, 4);
        if (h.is_zero())
            continue;
        QQ r = rat(rng.integer(-8, 8), 4);
        QQ q = rat(rng.integer(0, 16), 16);

        // reference value of h(r*pi + arctan q, q)
        mpfr_t xv, acc, t;
        mpfr_init2(xv, 300);
        mpfr_init2(acc, 300);
        mpfr_init2(t, 300);
        Ref pt;
        testutil::ref_shifted_arctan(pt, r, q);
        mpfr_set(xv, pt.get(), MPFR_RNDN);
        mpfr_set_ui(acc, 0, MPFR_RNDN);
        auto cs = h.coeffs_wrt(VX);
        for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
            QQ cv = upoly::from_mpoly(*it, VY).eval(q);
            mpfr_mul(acc, acc, xv, MPFR_RNDN);
            mpfr_set_q(t, cv.get_mpq_t(), MPFR_RNDN);
            mpfr_add(acc, acc, t, MPFR_RNDN);
        }
        // only trust the float sign away from zero
        mpfr_t eps;
        mpfr_init2(eps, 300);
        mpfr_set_ui_2exp(eps, 1, -200, MPFR_RNDN);
        bool big = mpfr_cmpabs(acc, eps) > 0;
        bool rational_point = (sgn(r) == 0 && sgn(q) == 0) ||
                              (r == rat(-1, 4) && q == 1) ||
                              (r == rat(1, 4) && q == -1);
        if (big) {
            ++checked;
            REQUIRE(sign_at_shifted_arctan(h, r, q) == mpfr_sgn(acc));
        } else if (!rational_point) {
            // near-zero at a transcendental point: a zero result must mean
            // true coefficient-wise vanishing
            if (sign_at_shifted_arctan(h, r, q) == 0) {
                for (const auto& c : cs)
                    REQUIRE(sgn(upoly::from_mpoly(c, VY).eval(q)) == 0);
            }
        }
        mpfr_clear(eps);
        mpfr_clear(xv);
        mpfr_clear(acc);
        mpfr_clear(t);
    }
    REQUIRE(checked > 300);
}

TEST_CASE("sign of univariate at pi multiple")
{
    upoly p = upoly::x() - upoly(3);
    REQUIRE(sign_of_univar_at_pi_multiple(p, QQ(1)) == 1);
    REQUIRE(sign_of_univar_at_pi_multiple(upoly(), QQ(5)) == 0);
    upoly q = upoly::x() * upoly::x() - upoly(10); // pi^2 < 10
    REQUIRE(sign_of_univar_at_pi_multiple(q, QQ(1)) == -1);
    REQUIRE(sign_of_univar_at_pi_multiple(q, QQ(0)) == -1);
}
