#include <catch2/catch_amalgamated.hpp>

#include "bisetkit/rational.hpp"

using bisetkit::BRational;
using bisetkit::Int;
using bisetkit::rat;

TEST_CASE("construction normalizes sign and gcd") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(-2, -4) == rat(1, 2));
    CHECK(rat(2, -4) == rat(-1, 2));
    CHECK(rat(0, -7) == BRational(0));
    CHECK(rat(0, 5).den() == 1);
    CHECK_THROWS(rat(1, 0));
}

TEST_CASE("field arithmetic") {
    BRational a = rat(1, 2), b = rat(1, 3);
    CHECK(a + b == rat(5, 6));
    CHECK(a - b == rat(1, 6));
    CHECK(a * b == rat(1, 6));
    CHECK(a / b == rat(3, 2));
    CHECK(-(a - b) == b - a);
    CHECK(a + BRational(0) == a);
    CHECK(a * BRational(1) == a);
    CHECK_THROWS(a / BRational(0));

    // 1 - 1/p, the only non-integer value the m-number pipeline produces
    for (long long p : {2, 3, 5, 7}) {
        BRational m = BRational(1) - rat(1, p);
        CHECK(m == rat(p - 1, p));
        CHECK_FALSE(m.is_integer());
        CHECK_FALSE(m.is_zero());
    }
}

TEST_CASE("ordering is the rational order") {
    CHECK(rat(1, 3) < rat(1, 2));
    CHECK(rat(-1, 2) < rat(-1, 3));
    CHECK(rat(7, 3) > BRational(2));
    CHECK(rat(4, 2) <= BRational(2));
    CHECK(rat(4, 2) >= BRational(2));
}

TEST_CASE("string form") {
    CHECK(rat(3, 1).str() == "3");
    CHECK(rat(-3, 6).str() == "-1/2");
    CHECK(BRational(Int("123456789123456789")).str() == "123456789123456789");
}

TEST_CASE("pivot magnitude") {
    CHECK(rat(-3, 2).pivot_magnitude() == 6);
    CHECK(rat(0, 9).pivot_magnitude() == 0);
    CHECK(BRational(5).pivot_magnitude() == 5);
}
