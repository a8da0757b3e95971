#include "chv/exact.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace chv {

Rational binomial(long s, long t) {
    if (t < 0) return 0;
    if (t == 0) return 1;
    if (s >= 0 && s < t) return 0;
    mpz_class num(1);
    for (long i = 0; i < t; ++i) {
        num *= s - i;
    }
    mpz_class den;
    mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(t));
    return Rational(std::move(num), std::move(den));
}

Rational factorial(long m) {
    if (m < 0) {
        throw std::domain_error("factorial: negative argument " +
                                std::to_string(m));
    }
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
    return Rational(std::move(r));
}

HarmonicTable::HarmonicTable(long order) : order_(order) {
    if (order < 1) {
        throw std::domain_error("HarmonicTable: order must be >= 1, got " +
                                std::to_string(order));
    }
    values_.emplace_back(0);  // H_0 = 0
}

Rational HarmonicTable::at(long n) {
    if (n < 0) {
        throw std::domain_error("harmonic: negative index " +
                                std::to_string(n));
    }
    std::lock_guard lock(mu_);
    while (static_cast<long>(values_.size()) <= n) {
        const long m = static_cast<long>(values_.size());
        mpz_class den(m);
        for (long i = 1; i < order_; ++i) den *= m;
        values_.push_back(values_.back() + Rational(mpz_class(1), std::move(den)));
    }
    return values_[static_cast<std::size_t>(n)];
}

Rational harmonic(long n, long order) {
    static std::mutex registry_mu;
    static std::map<long, HarmonicTable> tables;
    if (order < 1) {
        throw std::domain_error("harmonic: order must be >= 1, got " +
                                std::to_string(order));
    }
    HarmonicTable* table = nullptr;
    {
        std::lock_guard lock(registry_mu);
        table = &tables.try_emplace(order, order).first->second;
    }
    return table->at(n);
}

}  // namespace chv
