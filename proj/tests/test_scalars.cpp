#include <doctest.h>

#include "factorpoly/quadratic.hpp"
#include "factorpoly/rational.hpp"

using namespace fpoly;

TEST_CASE("rational parsing round trips") {
    CHECK(rat_to_string(rat_from_string("3/6")) == "1/2");
    CHECK(rat_to_string(rat_from_string("-4/2")) == "-2");
    CHECK(rat_to_string(rat_from_string("0.25")) == "1/4");
    CHECK(rat_to_string(rat_from_string("-1.5")) == "-3/2");
    CHECK(rat_to_string(rat_from_string("7")) == "7");
    CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);
}

TEST_CASE("binomials and factorials") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(factorial(5) == 120);
}

TEST_CASE("quadratic extension arithmetic stays exact") {
    Quadratic s3 = Quadratic::sqrt_of(Rat(3));
    CHECK(s3.radicand() == 3);
    CHECK((s3 * s3) == Quadratic(3));

    // sqrt(4/9) collapses to 2/3, sqrt(1) to 1
    CHECK(Quadratic::sqrt_of(rat_of(4, 9)) == Quadratic(rat_of(2, 3)));
    CHECK(Quadratic::sqrt_of(Rat(1)) == Quadratic(1));
    // sqrt(2 - 2/2) = sqrt(1) = 1, the delta=2 weight
    CHECK(Quadratic::sqrt_of(Rat(2) - rat_of(2, 2)) == Quadratic(1));

    Quadratic x(Rat(1), Rat(2), 3);  // 1 + 2 sqrt(3)
    Quadratic y(Rat(-2), Rat(1), 3);
    CHECK((x + y) == Quadratic(Rat(-1), Rat(3), 3));
    CHECK((x * y) == Quadratic(Rat(4), Rat(-3), 3));
    CHECK((x / x) == Quadratic(1));
    CHECK((x - x).is_zero());
}

TEST_CASE("quadratic sign is exact near ties") {
    // 7/4 vs sqrt(3): (7/4)^2 = 49/16 > 3 so 7/4 - sqrt(3) > 0
    Quadratic a(rat_of(7, 4), Rat(-1), 3);
    CHECK(a.sign() > 0);
    // 433/250 = 1.732 < sqrt(3) = 1.7320508...
    Quadratic b(rat_of(433, 250), Rat(-1), 3);
    CHECK(b.sign() < 0);
    CHECK(Quadratic(0).sign() == 0);
    // 2 - sqrt(4) would normalize: sqrt_of(4) = 2
    CHECK((Quadratic(2) - Quadratic::sqrt_of(Rat(4))).sign() == 0);
}

TEST_CASE("mixed radicands are rejected") {
    Quadratic s2 = Quadratic::sqrt_of(Rat(2));
    Quadratic s3 = Quadratic::sqrt_of(Rat(3));
    CHECK_THROWS_AS(s2 + s3, std::logic_error);
    CHECK_NOTHROW(s2 + Quadratic(5));  // rational mixes with anything
}

TEST_CASE("quadratic string forms") {
    CHECK(Quadratic(rat_of(3, 4)).to_string() == "3/4");
    CHECK(Quadratic(Rat(0), Rat(1), 2).to_string() == "1*sqrt(2)");
    CHECK(Quadratic(Rat(1), rat_of(-1, 2), 5).to_string() == "1-1/2*sqrt(5)");
}
