#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ekr/rational.hpp"

#include <random>
#include <stdexcept>

using ekr::Integer;
using ekr::Rational;

TEST_CASE("normalization to lowest terms with positive denominator") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(6, -4).numerator() == -3);
    CHECK(Rational(6, -4).denominator() == 2);
    CHECK(Rational(0, 7).numerator() == 0);
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK(Rational(10, 5) == Rational(2));
    CHECK(Rational(10, 5).str() == "2");
}

TEST_CASE("division by zero is an error, never a value") {
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(3, 4) / Rational(0), std::domain_error);
    Rational x(5, 7);
    CHECK_THROWS_AS(x /= Rational(0, 3), std::domain_error);
    CHECK(x == Rational(5, 7)); // unchanged after the failed division
}

TEST_CASE("string form and lossless parse") {
    CHECK(Rational(-3, 2).str() == "-3/2");
    CHECK(Rational(4).str() == "4");
    CHECK(Rational::parse("-3/2") == Rational(-3, 2));
    CHECK(Rational::parse("4") == Rational(4));
    CHECK(Rational::parse("6/-4") == Rational(-3, 2));
    CHECK_THROWS_AS(Rational::parse("x/y"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
}

TEST_CASE("exactness round-trips on random rationals") {
    std::mt19937 rng(20240911);
    std::uniform_int_distribution<long long> num(-1000, 1000);
    std::uniform_int_distribution<long long> den(1, 1000);
    for (int trial = 0; trial < 500; ++trial) {
        const Rational x(num(rng), den(rng));
        const Rational y(num(rng), den(rng));
        CHECK((x + y) - y == x);
        if (!y.is_zero()) CHECK((x * y) / y == x);
    }
}

TEST_CASE("ordering and sign") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(-7, 3).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(-7, 3).abs() == Rational(7, 3));
}

TEST_CASE("arbitrary precision survives large products") {
    Rational big(1);
    for (int i = 1; i <= 40; ++i) big *= Rational(Integer(1) << 20, i);
    Rational back = big;
    for (int i = 40; i >= 1; --i) back /= Rational(Integer(1) << 20, i);
    CHECK(back == Rational(1));
}
