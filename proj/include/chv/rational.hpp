#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace chv {

/// Exact arbitrary-precision rational scalar.
///
/// Always held in canonical form: numerator and denominator coprime,
/// denominator positive, zero represented as 0/1. Equality is therefore
/// structural. Values are immutable in spirit (all operators return new
/// values) and freely shareable across threads.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long value) : v_(value) {}  // NOLINT: integers embed implicitly
    Rational(int value) : v_(value) {}   // NOLINT
    explicit Rational(mpz_class value) : v_(std::move(value)) {}

    /// num/den, canonicalized. Throws std::domain_error when den == 0.
    Rational(long num, long den);
    Rational(mpz_class num, mpz_class den);

    /// Parses "a" or "a/b" (optionally signed). Throws std::invalid_argument
    /// on malformed input or zero denominator.
    static Rational parse(std::string_view text);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// "num/den" in lowest terms; the "/den" part is omitted for integers,
    /// so zero prints as "0". This is the wire format used in reports.
    std::string str() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return c <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

}  // namespace chv
