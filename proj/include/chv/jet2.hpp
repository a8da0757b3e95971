#pragma once

#include <iosfwd>

#include "chv/rational.hpp"

namespace chv {

/// First-order bivariate jet: val + dx*ex + dy*ey + dxy*ex*ey over Rational,
/// truncated by ex^2 = ey^2 = 0. Multiplication therefore carries the product
/// rule, so reading dx / dy / dxy off a jet evaluates the partial derivatives
/// d/dx, d/dy, d^2/dxdy of the underlying expression at x = y = 0.
struct Jet2 {
    Rational val;
    Rational dx;
    Rational dy;
    Rational dxy;

    static Jet2 constant(Rational c) { return {std::move(c), 0, 0, 0}; }
    static Jet2 var_x() { return {0, 1, 0, 0}; }
    static Jet2 var_y() { return {0, 0, 1, 0}; }

    Jet2& operator+=(const Jet2& o) {
        val += o.val;
        dx += o.dx;
        dy += o.dy;
        dxy += o.dxy;
        return *this;
    }
    Jet2& operator-=(const Jet2& o) {
        val -= o.val;
        dx -= o.dx;
        dy -= o.dy;
        dxy -= o.dxy;
        return *this;
    }
    // (a,b,c,d)(a',b',c',d') = (aa', ab'+ba', ac'+ca', ad'+bc'+cb'+da')
    Jet2& operator*=(const Jet2& o) {
        dxy = val * o.dxy + dx * o.dy + dy * o.dx + dxy * o.val;
        dx = val * o.dx + dx * o.val;
        dy = val * o.dy + dy * o.val;
        val *= o.val;
        return *this;
    }

    friend Jet2 operator+(Jet2 a, const Jet2& b) { a += b; return a; }
    friend Jet2 operator-(Jet2 a, const Jet2& b) { a -= b; return a; }
    friend Jet2 operator*(Jet2 a, const Jet2& b) { a *= b; return a; }
    friend Jet2 operator*(const Rational& c, Jet2 a) {
        a.val *= c;
        a.dx *= c;
        a.dy *= c;
        a.dxy *= c;
        return a;
    }

    Jet2 operator-() const { return {-val, -dx, -dy, -dxy}; }

    bool operator==(const Jet2&) const = default;

    friend std::ostream& operator<<(std::ostream& os, const Jet2& j);
};

/// Jet component selector; Dx and Dxy realize the derivative operators.
enum class JetOp { Value, Dx, Dy, Dxy };

const Rational& extract(JetOp op, const Jet2& j);

/// binom(s0 + cx*x + cy*y, t) expanded to first order at x = y = 0, through
/// the falling-factorial product prod_{i<t}(s0 + cx*x + cy*y - i) / t!.
/// Returns the zero jet for t < 0, the constant 1 for t == 0. The value
/// component always equals binomial(s0, t), including for negative s0.
/// cx and cy must lie in {-1, 0, +1} (every substitution used here has unit
/// jet coefficients); anything else throws std::domain_error.
Jet2 jet_binomial_affine(long s0, int cx, int cy, long t);

}  // namespace chv
