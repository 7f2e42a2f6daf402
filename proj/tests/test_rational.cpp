#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dcov/rational.hpp"
#include "dcov/rng.hpp"

using dcov::Rational;

TEST_CASE("canonical form: lowest terms, positive denominator") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(6, 3).den() == 1);
    CHECK(Rational(1, -3).den() == 3);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("exact arithmetic") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational(3, 2).pow(3) == Rational(27, 8));
    CHECK(Rational(-2, 3).pow(2) == Rational(4, 9));
    CHECK(Rational(5, 7).pow(0) == Rational(1));
}

TEST_CASE("ordering and conversion") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(1, 2).to_double() == 0.5);
    CHECK(Rational::parse("-3/9") == Rational(-1, 3));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational(22, 7).str() == "22/7");
    CHECK(Rational(4).str() == "4");
}

TEST_CASE("field axioms on random fractions") {
    dcov::Rng rng(2024);
    for (int t = 0; t < 200; ++t) {
        auto draw = [&rng]() {
            long num = static_cast<long>(rng.below(2001)) - 1000;
            long den = static_cast<long>(rng.below(999)) + 1;
            return Rational(num, den);
        };
        const Rational x = draw(), y = draw(), z = draw();
        CHECK((x + y) - y == x);
        CHECK(x * (y + z) == x * y + x * z);
        if (y != Rational(0)) CHECK((x / y) * y == x);
        CHECK(x.pow(2) == x * x);
    }
}
