#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "powersum/rational.hpp"

using namespace powersum;

TEST_CASE("canonical form") {
    Rational r(Integer(6), Integer(-8));
    CHECK(r.num() == -3);
    CHECK(r.den() == 4);
    CHECK(Rational(0).den() == 1);
    CHECK(Rational(Integer(0), Integer(7)).num() == 0);
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), MathError);
}

TEST_CASE("arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK_THROWS_AS(a / Rational(0), MathError);
    CHECK(-a == Rational(-1, 3));
}

TEST_CASE("pow") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(0) == Rational(1));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(-2).pow(9) == Rational(-512));
    CHECK_THROWS_AS(Rational(0).pow(-1), MathError);
}

TEST_CASE("sqrt") {
    CHECK(*Rational(9, 4).sqrt() == Rational(3, 2));
    CHECK(*Rational(0).sqrt() == Rational(0));
    CHECK(!Rational(2).sqrt());
    CHECK(!Rational(-4).sqrt());
    // 1215/15 = 81 from the degree-7 conditions
    CHECK(*Rational(1215, 15).sqrt() == Rational(9));
}

TEST_CASE("parse and str round-trip") {
    CHECK(Rational::parse("27/41") == Rational(27, 41));
    CHECK(Rational::parse("-31") == Rational(-31));
    CHECK(Rational::parse("-6/8").str() == "-3/4");
    CHECK(Rational(Integer("123456789012345678901234567890")).str() ==
          "123456789012345678901234567890");
    CHECK_THROWS_AS(Rational::parse("abc"), MathError);
}

TEST_CASE("integer helpers") {
    CHECK(gcd(Integer(12), Integer(-18)) == 6);
    CHECK(lcm(Integer(4), Integer(6)) == 12);
    CHECK(is_perfect_square(Integer(19881)));
    CHECK(isqrt_exact(Integer(19881)) == 141);
    CHECK(!is_perfect_square(Integer(19882)));
    CHECK(!is_perfect_square(Integer(-4)));
    CHECK(ipow(Integer(-2), 9) == -512);
}
