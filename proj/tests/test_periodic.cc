#include <catch2/catch_amalgamated.hpp>

#include <mtproot/periodic.hh>
#include <mtproot/polyops.hh>

#include "test_util.hh"

using namespace mtproot;
using testutil::make_poly;

namespace {

mpoly example_g()
{
    return make_poly({{10, 1, 8}, {20, 0, 7}, {-40, 1, 6}, {-28, 0, 5},
                      {60, 1, 4}, {92, 0, 3}, {-40, 1, 2}, {-20, 0, 1},
                      {10, 1, 0}});
}

PPIS paper_ppis()
{
    PPIS I;
    I.b0 = rat(-63, 16);
    I.interior = {{rat(-215, 128), rat(-19, 32)}, {rat(19, 32), rat(215, 128)}};
    I.a_last = rat(63, 16);
    return I;
}

} // namespace

TEST_CASE("build_ppis basics")
{
    mpoly x = mpoly::var(VX), y = mpoly::var(VY);

    // running example: lc(g,x) has the two real roots -1 and 1
    PPIS I = build_ppis(example_g(), QQ(4));
    REQUIRE(I.s() == 2);
    REQUIRE(I.interior[0].first < -1);
    REQUIRE(I.interior[0].second > -1);
    REQUIRE(I.interior[0].second < 0);
    REQUIRE(I.interior[1].first > 0);
    REQUIRE(I.interior[1].first < 1);
    REQUIRE(I.interior[1].second > 1);
    REQUIRE(I.b0 < I.interior[0].first);
    REQUIRE(I.a_last > I.interior[1].second);

    // lc = y^2+1: no real roots
    PPIS I2 = build_ppis(x * (y * y + 1), QQ(1));
    REQUIRE(I2.s() == 0);
    REQUIRE(I2.b0 < 0);
    REQUIRE(I2.a_last > 0);
    // outer arc-length condition: a_last >= 2/eps
    REQUIRE(I2.a_last >= 2);

    // lc = y: one interior interval around 0
    PPIS I3 = build_ppis(x * y - 1, QQ(1));
    REQUIRE(I3.s() == 1);
    REQUIRE(I3.interior[0].first < 0);
    REQUIRE(I3.interior[0].second > 0);
}

TEST_CASE("isolating_far_zero on the running example")
{
    auto far = isolating_far_zero(example_g(), paper_ppis());
    REQUIRE(far.k_prime == 3);
    REQUIRE(far.bunches.size() == 1);
    REQUIRE(far.bunches[0].count == 2);
    REQUIRE(far.bunches[0].j == 1); // the (-215/128, -19/32) slot
    REQUIRE(compare_half(far.bunches[0].lo,
                         HalfEndpoint::quarter(ZZ(0), rat(-215, 128))) == 0);
    REQUIRE(compare_half(far.bunches[0].hi,
                         HalfEndpoint::quarter(ZZ(0), rat(-19, 32))) == 0);
}

TEST_CASE("isolating_far_zero trivial cases")
{
    mpoly x = mpoly::var(VX), y = mpoly::var(VY);

    PPIS I2 = build_ppis(x * (y * y + 1), QQ(1));
    auto far2 = isolating_far_zero(x * (y * y + 1), I2);
    REQUIRE(far2.bunches.empty());

    PPIS I3 = build_ppis(x * y - 1, QQ(1));
    auto far3 = isolating_far_zero(x * y - 1, I3);
    REQUIRE(far3.bunches.size() == 1);
    REQUIRE(far3.bunches[0].count == 1);
    REQUIRE(far3.bunches[0].j == 1);
}

TEST_CASE("complete_isolating_far_zero on the running example")
{
    auto res = complete_isolating_far_zero(example_g(), paper_ppis());
    REQUIRE(res.delta1 == rat(999, 1000));
    REQUIRE(res.delta2 == rat(-999, 1000));
    REQUIRE(res.k_prime == 3);
    // k'' and k''' are delta-bound-points; any valid choice at most k' keeps
    // k* = 3 (the reference takes 3 and 0 there, both non-canonical)
    REQUIRE(res.k_dprime <= 3);
    REQUIRE(res.k_tprime <= 3);
    REQUIRE(res.k_star == 3);
    REQUIRE(res.bunches.size() == 1);
    REQUIRE(res.bunches[0].count == 2);
}

TEST_CASE("complete_isolating_far_zero contract checks")
{
    mpoly x = mpoly::var(VX), y = mpoly::var(VY);
    PPIS I = build_ppis(x * y - 1, QQ(1));
    REQUIRE_THROWS_AS(complete_isolating_far_zero(y * (x * y - 1), I),
                      std::invalid_argument);

    auto res = complete_isolating_far_zero(x * y - 1, I);
    REQUIRE(res.bunches.size() == 1);
    REQUIRE(res.bunches[0].count == 1);
}
