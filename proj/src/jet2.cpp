#include "chv/jet2.hpp"

#include <ostream>
#include <stdexcept>

#include "chv/exact.hpp"

namespace chv {

const Rational& extract(JetOp op, const Jet2& j) {
    switch (op) {
        case JetOp::Value: return j.val;
        case JetOp::Dx: return j.dx;
        case JetOp::Dy: return j.dy;
        case JetOp::Dxy: return j.dxy;
    }
    return j.val;  // unreachable
}

Jet2 jet_binomial_affine(long s0, int cx, int cy, long t) {
    if (cx < -1 || cx > 1 || cy < -1 || cy > 1) {
        throw std::domain_error(
            "jet_binomial_affine: coefficients must be in {-1, 0, +1}");
    }
    if (t < 0) return Jet2::constant(0);
    Jet2 acc = Jet2::constant(1);
    const Rational cxr(cx);
    const Rational cyr(cy);
    for (long i = 0; i < t; ++i) {
        acc *= Jet2{Rational(s0 - i), cxr, cyr, 0};
    }
    const Rational inv_t_fact = Rational(1) / factorial(t);
    return inv_t_fact * acc;
}

std::ostream& operator<<(std::ostream& os, const Jet2& j) {
    return os << "(" << j.val << ", " << j.dx << ", " << j.dy << ", " << j.dxy
              << ")";
}

}  // namespace chv
