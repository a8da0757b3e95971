#include <doctest.h>

#include <random>
#include <stdexcept>

#include "chv/exact.hpp"
#include "chv/jet2.hpp"

using chv::binomial;
using chv::harmonic;
using chv::Jet2;
using chv::jet_binomial_affine;
using chv::JetOp;
using chv::Rational;

namespace {

Rational H(long n) { return harmonic(n, 1); }

std::mt19937_64 rng(7241u);

Jet2 random_jet() {
    auto r = [] {
        const long num = static_cast<long>(rng() % 41) - 20;
        const long den = static_cast<long>(rng() % 9) + 1;
        return Rational(num, den);
    };
    return Jet2{r(), r(), r(), r()};
}

}  // namespace

TEST_SUITE("jet2") {

TEST_CASE("defining relations of the truncated algebra") {
    const Jet2 x = Jet2::var_x();
    const Jet2 y = Jet2::var_y();
    CHECK(x * y == Jet2{0, 0, 0, 1});
    CHECK(x * x == Jet2{0, 0, 0, 0});
    CHECK(y * y == Jet2{0, 0, 0, 0});
    CHECK(Jet2{1, 2, 0, 0} + Jet2{3, 0, 4, 0} == Jet2{4, 2, 4, 0});
    CHECK(-Jet2{1, -2, 3, -4} == Jet2{-1, 2, -3, 4});
    CHECK(Rational(1, 2) * Jet2{2, 4, 6, 8} == Jet2{1, 2, 3, 4});
}

TEST_CASE("extract reads components") {
    const Jet2 j{4, 2, 4, 0};
    CHECK(chv::extract(JetOp::Value, j) == 4);
    CHECK(chv::extract(JetOp::Dx, j) == 2);
    CHECK(chv::extract(JetOp::Dy, j) == 4);
    CHECK(chv::extract(JetOp::Dxy, j) == 0);
    CHECK(chv::extract(JetOp::Value, Jet2::constant(7)) == 7);
}

TEST_CASE("jet binomials at pinned points") {
    // C(3+x, 2) = (3+x)(2+x)/2 = 3 + 5x/2 + ...
    CHECK(jet_binomial_affine(3, 1, 0, 2) == Jet2{3, Rational(5, 2), 0, 0});
    // no x, y dependence
    CHECK(jet_binomial_affine(4, 0, 0, 2) == Jet2{6, 0, 0, 0});
    // C(x-y, 1) = x - y
    CHECK(jet_binomial_affine(0, 1, -1, 1) == Jet2{0, 1, -1, 0});
    // negative upper index with both variables
    CHECK(jet_binomial_affine(-3, 1, -1, 2) ==
          Jet2{6, Rational(-7, 2), Rational(7, 2), -1});
    // shared x + y argument picks up a dxy part
    CHECK(jet_binomial_affine(5, 1, 1, 3) ==
          Jet2{10, Rational(47, 6), Rational(47, 6), 4});
    // negative length degenerates to zero
    CHECK(jet_binomial_affine(9, 1, 1, -1) == Jet2::constant(0));
    CHECK(jet_binomial_affine(-7, 1, 0, 0) == Jet2::constant(1));
    // only unit jet coefficients are admitted
    CHECK_THROWS_AS(jet_binomial_affine(3, 2, 0, 1), std::domain_error);
    CHECK_THROWS_AS(jet_binomial_affine(3, 0, -2, 1), std::domain_error);
}

TEST_CASE("dx equals C(s,t)(H_s - H_{s-t}) for all 0 <= t <= s <= 25") {
    for (long s = 0; s <= 25; ++s) {
        for (long t = 0; t <= s; ++t) {
            const Jet2 j = jet_binomial_affine(s, 1, 0, t);
            CHECK(j.dx == binomial(s, t) * (H(s) - H(s - t)));
            CHECK(j.dy == 0);
            CHECK(j.dxy == 0);
        }
    }
}

TEST_CASE("dxy of a product follows the two-factor derivative formula") {
    // spot value: C(3,2)(H_3-H_1) * C(2,1)(H_2-H_1) = (5/2)(1) = 5/2
    const Jet2 prod =
        jet_binomial_affine(3, 1, 0, 2) * jet_binomial_affine(2, 0, 1, 1);
    CHECK(chv::extract(JetOp::Dxy, prod) == Rational(5, 2));

    for (long s = 0; s <= 12; ++s) {
        for (long t = 0; t <= s; ++t) {
            for (long u = 0; u <= 12; ++u) {
                for (long v = 0; v <= u; ++v) {
                    const Jet2 j = jet_binomial_affine(s, 1, 0, t) *
                                   jet_binomial_affine(u, 0, 1, v);
                    CHECK(j.dxy == binomial(s, t) * binomial(u, v) *
                                       (H(s) - H(s - t)) * (H(u) - H(u - v)));
                }
            }
        }
    }
}

TEST_CASE("value component matches binomial for -20 <= s <= 20") {
    for (long s = -20; s <= 20; ++s) {
        for (long t = 0; t <= 20; ++t) {
            CHECK(jet_binomial_affine(s, 1, 0, t).val == binomial(s, t));
            CHECK(jet_binomial_affine(s, 1, -1, t).val == binomial(s, t));
            CHECK(jet_binomial_affine(s, 0, 1, t).val == binomial(s, t));
        }
    }
}

TEST_CASE("ring axioms on random jets") {
    for (int i = 0; i < 60; ++i) {
        const Jet2 a = random_jet();
        const Jet2 b = random_jet();
        const Jet2 c = random_jet();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK((a - b) + b == a);
    }
}

}  // TEST_SUITE
