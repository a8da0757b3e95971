#pragma once

#include <deque>
#include <mutex>

#include "chv/rational.hpp"

namespace chv {

/// Binomial coefficient C(s, t) extended to every pair of integers via the
/// falling factorial s(s-1)...(s-t+1)/t!. In particular:
///   t < 0        -> 0
///   t == 0       -> 1
///   0 <= s < t   -> 0
///   s < 0        -> (-1)^t C(t-s-1, t)  (never zero)
/// Total; always returns an integer-valued Rational.
Rational binomial(long s, long t);

/// m! exactly. Throws std::domain_error for m < 0.
Rational factorial(long m);

/// Generalized harmonic number H_n^(order) = sum_{k=1..n} 1/k^order, with
/// H_0 = 0. Memoized per order; safe for concurrent callers. Throws
/// std::domain_error for n < 0 or order < 1.
Rational harmonic(long n, long order = 1);

/// Memo table for one harmonic order. Entries are computed once via the
/// recurrence H_n = H_{n-1} + 1/n^order and never change afterwards; the
/// table only grows. harmonic() maintains a shared instance per order.
class HarmonicTable {
public:
    explicit HarmonicTable(long order);

    HarmonicTable(const HarmonicTable&) = delete;
    HarmonicTable& operator=(const HarmonicTable&) = delete;

    long order() const { return order_; }

    /// H_n^(order), growing the table as needed.
    Rational at(long n);

private:
    long order_;
    std::mutex mu_;
    std::deque<Rational> values_;  // values_[n] == H_n
};

}  // namespace chv
