#include <doctest.h>

#include <random>
#include <stdexcept>

#include "hartogs/rational.hpp"

using hartogs::Rational;

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-1, -2) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational());
    CHECK(Rational(6, 3).is_integer());
    CHECK_FALSE(Rational(1, 3).is_integer());
    CHECK(Rational(-7).sign() == -1);
    CHECK(Rational().sign() == 0);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational to_string") {
    CHECK(Rational(1, 2).to_string() == "1/2");
    CHECK(Rational(-3, 6).to_string() == "-1/2");
    CHECK(Rational(4, 2).to_string() == "2");
    CHECK(Rational().to_string() == "0");
}

TEST_CASE("rational parse accepts the num/den grammar") {
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational::parse("+3") == Rational(3));
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-6/8") == Rational(-3, 4));
}

TEST_CASE("rational parse rejects everything else") {
    for (const char* bad : {"", "1.5", "a", "1/ 2", " 1", "1/-2", "1/", "/2", "1/0", "2/+3", "0x1"})
        CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
}

TEST_CASE("rational arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(-Rational(1, 2) == Rational(-1, 2));
    CHECK(abs(Rational(-5, 3)) == Rational(5, 3));
    CHECK_THROWS_AS(Rational(1) / Rational(), std::domain_error);
}

TEST_CASE("rational ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(5, 3) > Rational(3, 2));
}

TEST_CASE("pow and factorial") {
    CHECK(hartogs::pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(hartogs::pow(Rational(-1, 2), 2) == Rational(1, 4));
    CHECK(hartogs::pow(Rational(7), 0) == Rational(1));
    CHECK(hartogs::factorial(0) == 1);
    CHECK(hartogs::factorial(5) == 120);
    CHECK(hartogs::factorial(12) == 479001600);
}

TEST_CASE("rational double conversion") {
    CHECK(Rational(1, 2).to_double() == doctest::Approx(0.5));
    CHECK(Rational(-1, 3).to_double() == doctest::Approx(-1.0 / 3.0));
}

TEST_CASE("rational properties on random values") {
    std::mt19937 rng(20240811u);
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 1000);
    for (int i = 0; i < 200; ++i) {
        const Rational a(num(rng), den(rng));
        const Rational b(num(rng), den(rng));
        CHECK((a + b) - b == a);
        if (!b.is_zero())
            CHECK((a * b) / b == a);
        CHECK(Rational::parse(a.to_string()) == a);
        // canonical: gcd(num, den) = 1 and den > 0
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.numerator().get_mpz_t(), a.denominator().get_mpz_t());
        CHECK(g == 1);
        CHECK(a.denominator() > 0);
    }
}
