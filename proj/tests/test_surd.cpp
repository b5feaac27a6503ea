#include <doctest.h>

#include <cmath>

#include "cacforge/surd.hpp"

using namespace cacforge;

TEST_CASE("surd arithmetic stays exact") {
    Surd r5 = Surd::root(5);
    CHECK(r5 * r5 == Surd(5));
    Surd x = Surd(Rational(1, 2), Rational(1, 2), 5);  // golden ratio
    CHECK(x * x == x + Surd(1));
    CHECK((x - Surd(1)) * x == Surd(1));
    CHECK(x.inverse() == x - Surd(1));
    CHECK(Surd(3) / Surd(6) == Surd(Rational(1, 2), 0, 0));
}

TEST_CASE("surd value and ordering") {
    Surd a = Surd(1) + Surd::root(2);
    CHECK(a.value() == doctest::Approx(1 + std::sqrt(2.0)));
    CHECK(Surd::root(2) < Surd(Rational(3, 2), 0, 0));
    CHECK_FALSE(Surd(2) < Surd::root(2));
}

TEST_CASE("surd zero and radicand bookkeeping") {
    Surd z = Surd::root(5) - Surd::root(5);
    CHECK(z.is_zero());
    CHECK(z.radicand() == 0);
    CHECK(z == Surd(0));
    CHECK(Surd(4) + z == Surd(4));
}

TEST_CASE("mixed radicands are rejected") {
    CHECK_THROWS(Surd::root(2) + Surd::root(5));
    CHECK_THROWS(Surd(Rational(0), Rational(1), 1));
}

TEST_CASE("surd formatting") {
    CHECK(Surd(4).str() == "4");
    CHECK(Surd(Rational(2, 5), Rational(2, 5), 5).str() == "2/5+2/5*sqrt(5)");
    CHECK(Surd(Rational(2, 5), Rational(-2, 5), 5).str() == "2/5-2/5*sqrt(5)");
}
