#include <doctest.h>

#include <stdexcept>
#include <thread>
#include <vector>

#include "chv/exact.hpp"

using chv::binomial;
using chv::factorial;
using chv::harmonic;
using chv::HarmonicTable;
using chv::Rational;

TEST_SUITE("exact") {

TEST_CASE("binomial basics") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(-3, 2) == 6);  // (-3)(-4)/2!
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(-1, 0) == 1);
    CHECK(binomial(7, -2) == 0);
    CHECK(binomial(-5, -1) == 0);
    CHECK(binomial(-4, 3) == -20);  // (-4)(-5)(-6)/3!
    CHECK(binomial(0, 0) == 1);
}

TEST_CASE("binomial symmetry and Pascal recurrence, exhaustive to s = 40") {
    for (long s = 0; s <= 40; ++s) {
        for (long t = 0; t <= s; ++t) {
            CHECK(binomial(s, t) == binomial(s, s - t));
            if (s >= 1) {
                CHECK(binomial(s, t) ==
                      binomial(s - 1, t - 1) + binomial(s - 1, t));
            }
            CHECK(binomial(s, t).is_integer());
        }
    }
}

TEST_CASE("binomial reflection for negative upper index") {
    for (long s = -20; s < 0; ++s) {
        for (long t = 0; t <= 20; ++t) {
            const Rational sign = (t & 1L) ? Rational(-1) : Rational(1);
            CHECK(binomial(s, t) == sign * binomial(t - s - 1, t));
            CHECK_FALSE(binomial(s, t).is_zero());
        }
    }
}

TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(10) == 3628800);
    CHECK_THROWS_AS(factorial(-1), std::domain_error);
    Rational by_hand(1);
    for (long i = 1; i <= 30; ++i) {
        by_hand *= Rational(i);
        CHECK(factorial(i) == by_hand);
    }
}

TEST_CASE("harmonic values") {
    CHECK(harmonic(0, 1) == 0);
    CHECK(harmonic(3, 1) == Rational(11, 6));
    CHECK(harmonic(3, 2) == Rational(49, 36));
    CHECK(harmonic(7, 1) == Rational(363, 140));
    CHECK(harmonic(7, 2) == Rational(266681, 176400));
    CHECK_THROWS_AS(harmonic(-1, 1), std::domain_error);
    CHECK_THROWS_AS(harmonic(3, 0), std::domain_error);
}

TEST_CASE("harmonic recurrence H_n - H_{n-1} = 1/n^l") {
    for (long l = 1; l <= 3; ++l) {
        for (long n = 1; n <= 60; ++n) {
            Rational step(1, n);
            for (long i = 1; i < l; ++i) step /= Rational(n);
            CHECK(harmonic(n, l) - harmonic(n - 1, l) == step);
        }
    }
}

TEST_CASE("HarmonicTable grows monotonically and is shareable") {
    HarmonicTable table(1);
    CHECK(table.order() == 1);
    CHECK(table.at(0) == 0);
    CHECK(table.at(4) == Rational(25, 12));
    CHECK(table.at(2) == Rational(3, 2));  // earlier entries unchanged
    CHECK_THROWS_AS(table.at(-2), std::domain_error);
    CHECK_THROWS_AS(HarmonicTable(0), std::domain_error);

    // concurrent readers extending the shared table agree with a fresh one
    std::vector<std::thread> workers;
    std::vector<Rational> results(4);
    for (int i = 0; i < 4; ++i) {
        workers.emplace_back(
            [&results, i] { results[static_cast<std::size_t>(i)] = harmonic(300 + i, 2); });
    }
    for (auto& w : workers) w.join();
    HarmonicTable fresh(2);
    for (int i = 0; i < 4; ++i) {
        CHECK(results[static_cast<std::size_t>(i)] == fresh.at(300 + i));
    }
}

}  // TEST_SUITE
