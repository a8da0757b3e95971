#include "chv/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace chv {

namespace {

[[noreturn]] void throw_zero_denominator() {
    throw std::domain_error("Rational: zero denominator");
}

}  // namespace

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw_zero_denominator();
    v_.canonicalize();
}

Rational::Rational(mpz_class num, mpz_class den)
    : v_(std::move(num), std::move(den)) {
    if (sgn(v_.get_den()) == 0) throw_zero_denominator();
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(mpz_class(std::string(text)));
        }
        mpz_class num(std::string(text.substr(0, slash)));
        mpz_class den(std::string(text.substr(slash + 1)));
        if (sgn(den) == 0) {
            throw std::invalid_argument("Rational::parse: zero denominator");
        }
        return Rational(std::move(num), std::move(den));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational::parse: malformed rational '" +
                                    std::string(text) + "'");
    }
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_;
}

}  // namespace chv
