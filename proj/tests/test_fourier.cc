#include <catch2/catch_amalgamated.hpp>

#include <mtproot/fourier.hh>
#include <mtproot/exact_sign.hh>
#include <mtproot/polyops.hh>

#include "test_util.hh"

using namespace mtproot;

TEST_CASE("arctan derivative examples")
{
    mpoly x = mpoly::var(VX), y = mpoly::var(VY);

    auto gx = ratcoeff_poly::from_bivar(x);
    auto [dx, mx] = gx.arctan_derivative();
    REQUIRE(mx == 1);
    REQUIRE(dx.is_rational_constant());
    REQUIRE(dx.rational_value() == 1);

    auto gy = ratcoeff_poly::from_bivar(y);
    auto [dy, my] = gy.arctan_derivative();
    REQUIRE(my == 0);
    REQUIRE(dy.is_rational_constant());
    REQUIRE(dy.rational_value() == 1);

    // G = xy -> G* = x + y/(1+y^2) (m = 0); next step yields 2
    auto gxy = ratcoeff_poly::from_bivar(x * y);
    auto [d1, m1] = gxy.arctan_derivative();
    REQUIRE(m1 == 0);
    REQUIRE(d1.deg_x() == 1);
    REQUIRE(d1.coeffs()[1].num == upoly(1));
    REQUIRE(d1.coeffs()[1].m == 0);
    REQUIRE(d1.coeffs()[0].num == upoly::from_coeffs({QQ(0), QQ(1)}));
    REQUIRE(d1.coeffs()[0].m == 1);
    auto [d2, m2] = d1.arctan_derivative();
    REQUIRE(d2.is_rational_constant());
    REQUIRE(d2.rational_value() == 2);
    (void)m2;
}

TEST_CASE("weak Fourier sequence examples")
{
    mpoly x = mpoly::var(VX), y = mpoly::var(VY);

    auto sx = weak_fourier_seq(x, QQ(0));
    REQUIRE(sx.length() == 2);
    REQUIRE(sx.F[0] == x);
    REQUIRE(sx.last_constant == 1);

    auto sy = weak_fourier_seq(y, QQ(1));
    REQUIRE(sy.length() == 2);
    REQUIRE(sy.last_constant == 1);

    // G = xy -> [xy, (1+y^2)x + y, 2]
    auto sxy = weak_fourier_seq(x * y, QQ(0));
    REQUIRE(sxy.length() == 3);
    REQUIRE(sxy.F[1] == (mpoly(1) + y * y) * x + y);
    REQUIRE(sxy.last_constant == 2);

    REQUIRE_THROWS_AS(weak_fourier_seq(mpoly(), QQ(0)), std::invalid_argument);
}

TEST_CASE("sgc examples")
{
    mpoly x = mpoly::var(VX);
    auto seq = weak_fourier_seq(x, QQ(0)); // w_1 = arctan y, w_2 = 1

    REQUIRE(sgc(seq, 1, 2, QQ(0), QQ(1), Side::plus) == 0);  // (+,+)
    REQUIRE(sgc(seq, 1, 2, QQ(-1), QQ(0), Side::minus) == 1); // (-,+)
    REQUIRE(sgc(seq, 1, 2, QQ(0), QQ(1), Side::minus) == 0);  // w_1(1^-) > 0
}

TEST_CASE("Def 10 sign relation on random sequences")
{
    testutil::Rng rng(123456);
    int seq_done = 0;
    while (seq_done < 25) {
        mpoly G = rng.poly(2, 3, 5, 4);
        if (G.is_zero() || G.is_constant())
            continue;
        QQ r = rat(rng.integer(-4, 4), rng.integer(0, 1) ? 4 : 1);
        if (!is_integer(r * 4))
            continue;
        auto seq = weak_fourier_seq(G, r);
        // lexicographic-descent cap: at most deg_x(G)+1 x-levels, and each
        // level descends through leading-coefficient degrees bounded by the
        // largest y-degree occurring along the chain
        long dx = G.degree(VX) < 0 ? 0 : G.degree(VX);
        long dy_chain = 0;
        for (const auto& f : seq.F)
            dy_chain = std::max(dy_chain, f.degree(VY));
        REQUIRE((long)seq.length() <= (dx + 1) * (dy_chain + 1) + 1);

        // Def 10 for w_i = F_i / (1+y^2)^m_i: sign(w_{i+1}) = sign(w_i');
        // (1+y^2)^(m_i+1) w_i' = F_x + (1+y^2) F_y - 2 m_i y F
        mpoly one_y2 = mpoly(1) + mpoly::var(VY) * mpoly::var(VY);
        mpoly two_y = mpoly::var(VY) * 2;
        for (int t = 0; t < 40; ++t) {
            QQ yv = rat(rng.integer(1, 63), 64);
            for (std::size_t i = 1; i < seq.length(); ++i) {
                Sign wnext = wfs_sign_at(seq, i + 1, yv);
                const mpoly& Fi = seq.F[i - 1];
                mpoly H = Fi.derivative(VX) + one_y2 * Fi.derivative(VY) -
                          two_y * Fi * QQ((long)seq.m[i - 1]);
                Sign wd = sign_at_shifted_arctan(H, seq.r, yv);
                REQUIRE(wnext == wd);
            }
        }
        ++seq_done;
    }
}

TEST_CASE("sgc difference counts w1 sign changes on (0,1)")
{
    testutil::Rng rng(987);
    int done = 0;
    while (done < 25) {
        mpoly G = rng.poly(2, 3, 4, 3);
        if (G.is_zero() || G.is_constant())
            continue;
        QQ r = QQ(rng.integer(-2, 2));
        auto seq = weak_fourier_seq(G, r);
        std::size_t k = seq.length();
        unsigned a = sgc(seq, 1, k, QQ(0), QQ(1), Side::plus);
        unsigned b = sgc(seq, 1, k, QQ(0), QQ(1), Side::minus);
        REQUIRE(a >= b); // difference is a natural number

        unsigned diff = a - b;
        // dense exact-sign scan of w_1 on (0,1)
        int scan_changes = 0;
        Sign last = 0;
        for (int t = 1; t < 400; ++t) {
            Sign s = wfs_sign_at(seq, 1, rat(t, 400));
            if (s == 0)
                continue;
            if (last != 0 && s != last)
                ++scan_changes;
            last = s;
        }
        if (diff == 0)
            REQUIRE(scan_changes == 0);
        if (diff == 1)
            REQUIRE(scan_changes <= 1);
        REQUIRE((unsigned)scan_changes <= diff);
        ++done;
    }
}
