#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jp/rational.hpp"

using jp::Rational;

TEST_CASE("construction is canonical") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(6, 3).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("from_string") {
    CHECK(Rational::from_string("3/4") == Rational(3, 4));
    CHECK(Rational::from_string("-3/4") == Rational(-3, 4));
    CHECK(Rational::from_string("5") == Rational(5));
    CHECK(Rational::from_string("10/4") == Rational(5, 2));
    CHECK_THROWS(Rational::from_string(""));
    CHECK_THROWS(Rational::from_string("1.5"));
    CHECK_THROWS(Rational::from_string("1/0"));
    CHECK_THROWS(Rational::from_string("a/b"));
    CHECK_THROWS(Rational::from_string("1/ 2"));
}

TEST_CASE("arithmetic") {
    const Rational a(1, 2), b(1, 3);
    CHECK(a + b == Rational(5, 6));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 6));
    CHECK(a / b == Rational(3, 2));
    CHECK(-a == Rational(-1, 2));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    CHECK(a.inverse() == Rational(2));
    CHECK(Rational(-3, 4).abs() == Rational(3, 4));
}

TEST_CASE("pow") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(5).pow(0) == Rational(1));
    CHECK(Rational(0).pow(4) == Rational(0));
    CHECK_THROWS(Rational(0).pow(-1));
}

TEST_CASE("ordering and predicates") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1) < Rational(0));
    CHECK(Rational(7).is_nonneg_integer());
    CHECK_FALSE(Rational(-7).is_nonneg_integer());
    CHECK_FALSE(Rational(1, 2).is_nonneg_integer());
    CHECK(Rational(4, 2).to_long() == 2);
    CHECK_THROWS(Rational(1, 2).to_long());
}

TEST_CASE("string form is p/q") {
    CHECK(Rational(3, 4).to_string() == "3/4");
    CHECK(Rational(-3, 4).to_string() == "-3/4");
    CHECK(Rational(8, 4).to_string() == "2");
    CHECK(Rational(0).to_string() == "0");
}
