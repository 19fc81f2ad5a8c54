#include <catch2/catch_amalgamated.hpp>

#include <mtproot/uniroot.hh>
#include <mtproot/polyops.hh>

#include "test_util.hh"

using namespace mtproot;

namespace {

upoly up(std::vector<long> ascending)
{
    std::vector<QQ> c;
    for (long v : ascending)
        c.push_back(QQ(v));
    return upoly::from_coeffs(std::move(c));
}

} // namespace

TEST_CASE("isolate simple cases")
{
    auto boxes = isolate(up({-2, 0, 1})); // x^2 - 2
    REQUIRE(boxes.size() == 2);
    REQUIRE(!boxes[0].exact);
    REQUIRE(boxes[0].a >= -2);
    REQUIRE(boxes[0].b <= -1);
    REQUIRE(boxes[1].a >= 1);
    REQUIRE(boxes[1].b <= 2);
    REQUIRE(boxes[0].multiplicity == 1);
    // certify: endpoints straddle the root
    REQUIRE(boxes[1].a * boxes[1].a < 2);
    REQUIRE(boxes[1].b * boxes[1].b > 2);

    auto dbl = isolate(up({0, 0, 1})); // x^2
    REQUIRE(dbl.size() == 1);
    REQUIRE(dbl[0].exact);
    REQUIRE(dbl[0].a == 0);
    REQUIRE(dbl[0].multiplicity == 2);

    auto tri = isolate(up({0, -1, 0, 1})); // x^3 - x
    REQUIRE(tri.size() == 3);
    for (const auto& b : tri)
        REQUIRE(b.exact);
    REQUIRE(tri[0].a == -1);
    REQUIRE(tri[1].a == 0);
    REQUIRE(tri[2].a == 1);

    REQUIRE_THROWS_AS(isolate(upoly()), std::invalid_argument);
}

TEST_CASE("root upper bound")
{
    REQUIRE(root_upper_bound(up({-2, 0, 1})) == 3);
    REQUIRE(root_upper_bound(up({-10, 1})) == 11);
    REQUIRE(root_upper_bound(up({-4, 6, 0, 2})) == 4);
    REQUIRE_THROWS_AS(root_upper_bound(up({5})), std::invalid_argument);

    testutil::Rng rng(31337);
    for (int i = 0; i < 50; ++i) {
        std::vector<QQ> c;
        int deg = (int)rng.integer(1, 9);
        for (int k = 0; k <= deg; ++k)
            c.push_back(QQ(rng.integer(-20, 20)));
        if (sgn(c[deg]) == 0)
            c[deg] = 1;
        upoly p = upoly::from_coeffs(c);
        QQ bound = root_upper_bound(p);
        REQUIRE(sign_of(p.eval(bound)) == sign_of(p.lc()));
    }
}

TEST_CASE("count roots by Sturm")
{
    REQUIRE(count_roots_in(up({-2, 0, 1}), QQ(0), QQ(2)) == 1);
    REQUIRE(count_roots_in(up({1, 0, 1}), QQ(-10), QQ(10)) == 0);
    REQUIRE(count_roots_in(up({0, -1, 0, 1}), QQ(-2), QQ(2)) == 3);
    REQUIRE_THROWS_AS(count_roots_in(up({-1, 1}), QQ(1), QQ(2)), std::domain_error);
}

TEST_CASE("refine")
{
    upoly p = up({-2, 0, 1});
    RootBox box = RootBox::interval(QQ(1), QQ(2), 1);
    RootBox r = refine(p, box, rat(1, 100));
    REQUIRE((r.exact || r.b - r.a < rat(1, 100)));
    REQUIRE(r.a * r.a <= 2);
    REQUIRE(r.b * r.b >= 2);

    RootBox pt = RootBox::point(QQ(5), 1);
    REQUIRE(refine(p, pt, rat(1, 100)).exact);

    RootBox deep = refine(p, box, pow2_inv(40));
    REQUIRE(deep.b - deep.a < pow2_inv(40));
    // contains sqrt(2) = 1.41421356...
    REQUIRE(deep.a < rat(141421357, 100000000));
    REQUIRE(deep.b > rat(141421356, 100000000));
}

TEST_CASE("random polynomials: multiplicities, disjointness, certification")
{
    testutil::Rng rng(271828);
    for (int trial = 0; trial < 100; ++trial) {
        int deg = (int)rng.integer(1, 12);
        std::vector<QQ> c;
        for (int k = 0; k <= deg; ++k)
            c.push_back(QQ(rng.integer(-9, 9)));
        upoly p = upoly::from_coeffs(c);
        if (p.is_zero() || p.degree() < 1)
            continue;
        // occasionally plant a multiple root
        if (trial % 3 == 0) {
            upoly fac = up({(long)rng.integer(-3, 3), 1});
            p = p * fac * fac;
        }

        auto boxes = isolate(p);

        // independent count-with-multiplicity: sum over the gcd chain of
        // distinct-root counts (Sturm based)
        unsigned long with_mult = 0;
        upoly q = p;
        while (q.degree() > 0) {
            SturmChain chain(q);
            QQ bound = root_upper_bound(q) + 1;
            with_mult += chain.count(-bound, bound);
            upoly g = upoly_gcd(q, q.derivative());
            if (g.degree() < 1)
                break;
            q = g;
        }
        unsigned long total = 0;
        for (const auto& b : boxes)
            total += b.multiplicity;
        REQUIRE(total == with_mult);

        // disjoint and sorted
        for (std::size_t i = 0; i + 1 < boxes.size(); ++i)
            REQUIRE(boxes[i].b <= boxes[i + 1].a);

        // certification: exact points are roots; intervals bracket a sign
        // change of the square-free part
        upoly g = upoly_gcd(p, p.derivative());
        upoly sf = g.degree() > 0 ? p.divrem(g).first : p;
        auto edge = [&](const QQ& t, int dir) {
            Sign v = sign_of(sf.eval(t));
            if (v != 0)
                return v;
            return Sign(dir * sign_of(sf.derivative().eval(t)));
        };
        for (const auto& b : boxes) {
            if (b.exact)
                REQUIRE(sign_of(p.eval(b.a)) == 0);
            else
                // one-sided signs straddle the single interior root
                REQUIRE(edge(b.a, +1) * edge(b.b, -1) == -1);
        }
    }
}
