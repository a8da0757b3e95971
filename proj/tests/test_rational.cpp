#include <doctest.h>

#include <random>
#include <sstream>
#include <stdexcept>

#include "chv/rational.hpp"

using chv::Rational;

namespace {

std::mt19937_64 rng(20240817u);

// Random integer with up to 128 significant bits, either sign.
mpz_class random_big() {
    mpz_class hi(static_cast<unsigned long>(rng()));
    mpz_class lo(static_cast<unsigned long>(rng()));
    mpz_class v = (hi << 64) | lo;
    if (rng() & 1u) v = -v;
    return v;
}

Rational random_rational() {
    mpz_class den = random_big();
    if (sgn(den) == 0) den = 1;
    return Rational(random_big(), std::move(den));
}

}  // namespace

TEST_SUITE("rational") {

TEST_CASE("canonical form is enforced on construction") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(2, -4).den() == 2);
    CHECK(Rational(2, -4).num() == -1);
    CHECK(Rational(0, -7).str() == "0");
    CHECK(Rational(0, -7).den() == 1);
}

TEST_CASE("zero denominator is rejected") {
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("string round trip") {
    CHECK(Rational(19, 2).str() == "19/2");
    CHECK(Rational(-5, 3).str() == "-5/3");
    CHECK(Rational(7).str() == "7");
    CHECK(Rational::parse("19/2") == Rational(19, 2));
    CHECK(Rational::parse("-5/3") == Rational(-5, 3));
    CHECK(Rational::parse("0") == Rational(0));
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);

    std::ostringstream os;
    os << Rational(-22, 4);
    CHECK(os.str() == "-11/2");
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(5) > Rational(9, 2));
    CHECK(Rational(3, 7).sign() == 1);
    CHECK(Rational(-3, 7).sign() == -1);
    CHECK(Rational(0).sign() == 0);
}

TEST_CASE("arithmetic round trips over random 128-bit fractions") {
    for (int i = 0; i < 200; ++i) {
        const Rational a = random_rational();
        Rational b = random_rational();
        if (b.is_zero()) b = Rational(1);
        CHECK((a + b) - b == a);
        CHECK((a * b) / b == a);
        CHECK(a + (-a) == Rational(0));
        // results stay canonical
        const Rational s = a + b;
        CHECK(gcd(s.num(), s.den()) == 1);
        CHECK(sgn(s.den()) == 1);
    }
}

TEST_CASE("field axioms on a few sampled triples") {
    for (int i = 0; i < 50; ++i) {
        const Rational a = random_rational();
        const Rational b = random_rational();
        const Rational c = random_rational();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

}  // TEST_SUITE
