#include "chv/identities.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "chv/exact.hpp"

namespace chv {

namespace {

using P = IdentityParams;

Rational H(long n) { return harmonic(n, 1); }
Rational H2(long n) { return harmonic(n, 2); }
Rational B(long s, long t) { return binomial(s, t); }

Rational neg1pow(long e) { return (e & 1L) ? Rational(-1) : Rational(1); }

mpz_class Z(long v) { return mpz_class(v); }

void require(bool ok, const char* id, const char* constraint) {
    if (!ok) {
        throw std::domain_error(std::string("domain violation for ") + id +
                                ": requires " + constraint);
    }
}

void require_grid(const P& v, const char* id) {
    require(v.n >= 0 && v.p >= 0 && v.q >= 0, id, "n, p, q >= 0");
}

bool grid_ok(const P& v) { return v.n >= 0 && v.p >= 0 && v.q >= 0; }

// ---------------------------------------------------------------------------
// Case dispatch
// ---------------------------------------------------------------------------

CaseTag dispatch_abc(const P& v) {
    const long d = v.p - v.q;
    if (d >= v.n) return CaseTag::A;
    if (d >= 0) return CaseTag::B;
    return CaseTag::C;
}

CaseTag dispatch_def(const P& v) {
    switch (dispatch_abc(v)) {
        case CaseTag::A: return CaseTag::D;
        case CaseTag::B: return CaseTag::E;
        default: return CaseTag::F;
    }
}

CaseTag dispatch_uvw(const P& v) {
    const long d = v.p - v.q;
    if (d >= v.n) return CaseTag::U;
    if (d >= 0) return CaseTag::V;
    return CaseTag::W;
}

// The printed conditions p-q >= n-1 (U*) and p-q < 0 (W*) overlap at the
// single degenerate class n = 0, p = q - 1; testing the sign first keeps the
// dispatch a partition and matches the printed trichotomy for every n >= 1.
CaseTag dispatch_star(const P& v) {
    const long d = v.p - v.q;
    if (d < 0) return CaseTag::WStar;
    if (d >= v.n - 1) return CaseTag::UStar;
    return CaseTag::VStar;
}

// ---------------------------------------------------------------------------
// eq2 / eq5 / eq7: the convolutions at x = y = 0
// ---------------------------------------------------------------------------

Evaluation eq2_lhs(const P& v) {
    require_grid(v, "eq2");
    Rational acc;
    for (long k = 0; k <= v.n; ++k) {
        acc += B(v.p + k, k) * B(v.q + v.n - k, v.n - k);
    }
    return {acc};
}

Evaluation eq2_rhs(const P& v) {
    require_grid(v, "eq2");
    return {B(v.p + v.q + v.n + 1, v.n)};
}

Evaluation eq5_lhs(const P& v) {
    require_grid(v, "eq5");
    Rational acc;
    for (long k = 0; k <= v.n; ++k) {
        acc += B(v.p + v.n, k) * B(v.q + v.n, v.n - k);
    }
    return {acc};
}

Evaluation eq5_rhs(const P& v) {
    require_grid(v, "eq5");
    return {B(v.p + v.q + 2 * v.n, v.n)};
}

Evaluation eq7_lhs(const P& v) {
    require_grid(v, "eq7");
    Rational acc;
    for (long k = 0; k <= v.n; ++k) {
        acc += neg1pow(k) * B(v.p + k, k) * B(v.q + v.n, v.n - k);
    }
    return {acc};
}

Evaluation eq7_rhs(const P& v) {
    require_grid(v, "eq7");
    return {neg1pow(v.n) * B(v.p - v.q, v.n)};
}

// ---------------------------------------------------------------------------
// harmonic-a .. harmonic-e
// ---------------------------------------------------------------------------

Evaluation ha_lhs(const P& v) {
    require_grid(v, "harmonic-a");
    Rational acc;
    for (long k = 0; k <= v.n; ++k) {
        acc += B(v.p + k, v.p) * B(v.q + v.n - k, v.q) * H(v.p + k);
    }
    return {acc};
}

Evaluation ha_rhs(const P& v) {
    require_grid(v, "harmonic-a");
    const long m = v.p + v.q + v.n + 1;
    return {B(m, v.n) * (H(v.p) + H(m) - H(v.p + v.q + 1))};
}

Evaluation hb_lhs(const P& v) {
    require_grid(v, "harmonic-b");
    Rational acc;
    for (long k = 1; k <= v.n; ++k) {
        acc += B(v.p + k, k) * B(v.q + v.n - k, v.q) * Rational(k) * H(v.p + k);
    }
    return {acc};
}

Evaluation hb_rhs(const P& v) {
    require_grid(v, "harmonic-b");
    const long m = v.p + v.q + v.n + 1;
    return {Rational(v.p + 1) * B(m, v.n - 1) *
            (H(v.p + 1) + H(m) - H(v.p + v.q + 2))};
}

Evaluation hc_lhs(const P& v) {
    require_grid(v, "harmonic-c");
    Rational acc;
    for (long k = 0; k <= v.n; ++k) {
        acc += B(v.p + v.n, k) * B(v.q + v.n, v.n - k) * H(v.q + k);
    }
    return {acc};
}

Evaluation hc_rhs(const P& v) {
    require_grid(v, "harmonic-c");
    const long m = v.p + v.q + 2 * v.n;
    return {B(m, v.n) * (H(v.q + v.n) + H(v.p + v.q + v.n) - H(m))};
}

Evaluation hd_lhs(const P& v) {
    require_grid(v, "harmonic-d");
    Rational acc;
    for (long k = 0; k <= v.n; ++k) {
        acc += neg1pow(k) * B(v.p + k, k) * B(v.q + v.n, v.n - k) * H(v.p + k);
    }
    return {acc, dispatch_abc(v)};
}

Evaluation hd_rhs(const P& v) {
    require_grid(v, "harmonic-d");
    const long d = v.p - v.q;
    const CaseTag tag = dispatch_abc(v);
    switch (tag) {
        case CaseTag::A:
            return {neg1pow(v.n) * B(d, v.n) * (H(v.p) + H(d) - H(d - v.n)),
                    tag};
        case CaseTag::B:
            return {neg1pow(1 + d) * factorial(d) * factorial(-d + v.n - 1) /
                        factorial(v.n),
                    tag};
        default:
            return {neg1pow(v.n) * B(d, v.n) *
                        (H(v.p) + H(-d - 1) - H(-d + v.n - 1)),
                    tag};
    }
}

Evaluation he_lhs(const P& v) {
    require_grid(v, "harmonic-e");
    Rational acc;
    for (long k = 0; k <= v.n; ++k) {
        acc += neg1pow(k) * B(v.p + k, k) * B(v.q + v.n, v.n - k) * H(v.q + k);
    }
    return {acc, dispatch_def(v)};
}

Evaluation he_rhs(const P& v) {
    require_grid(v, "harmonic-e");
    const long d = v.p - v.q;
    const CaseTag tag = dispatch_def(v);
    switch (tag) {
        case CaseTag::D:
            return {neg1pow(v.n) * B(d, v.n) *
                        (H(v.q + v.n) + H(d) - H(d - v.n)),
                    tag};
        case CaseTag::E:
            return {neg1pow(1 + d) * factorial(d) * factorial(-d + v.n - 1) /
                        factorial(v.n),
                    tag};
        default:
            return {neg1pow(v.n) * B(d, v.n) *
                        (H(v.q + v.n) + H(-d - 1) - H(-d + v.n - 1)),
                    tag};
    }
}

// ---------------------------------------------------------------------------
// thm-a .. thm-f
// ---------------------------------------------------------------------------

Evaluation ta_lhs(const P& v) {
    require_grid(v, "thm-a");
    Rational acc;
    for (long k = 0; k <= v.n; ++k) {
        acc += B(v.p + k, v.p) * B(v.q + v.n - k, v.q) * H(v.p + k) *
               H(v.q + v.n - k);
    }
    return {acc};
}

Evaluation ta_rhs(const P& v) {
    require_grid(v, "thm-a");
    const long m = v.p + v.q + v.n + 1;
    const Rational a = H(v.p) - H(v.p + v.q + 1) + H(m);
    const Rational b = H(v.q) - H(v.p + v.q + 1) + H(m);
    return {B(m, v.n) * (H2(v.p + v.q + 1) - H2(m) + a * b)};
}

Evaluation tb_lhs(const P& v) {
    require_grid(v, "thm-b");
    Rational acc;
    for (long k = 1; k <= v.n; ++k) {
        acc += B(v.p + k, v.p) * B(v.q + v.n - k, v.q) * Rational(k) *
               H(v.p + k) * H(v.q + v.n - k);
    }
    return {acc};
}

Evaluation tb_rhs(const P& v) {
    require_grid(v, "thm-b");
    const long m = v.p + v.q + v.n + 1;
    const Rational a = H(v.p + 1) - H(v.p + v.q + 2) + H(m);
    const Rational b = H(v.q) - H(v.p + v.q + 2) + H(m);
    return {Rational(v.p + 1) * B(m, v.n - 1) *
            (H2(v.p + v.q + 2) - H2(m) + a * b)};
}

Evaluation tc_lhs(const P& v) {
    require_grid(v, "thm-c");
    Rational acc;
    for (long k = 0; k <= v.n; ++k) {
        acc += B(v.p + v.n, k) * B(v.q + v.n, v.n - k) * H(v.p + v.n - k) *
               H(v.q + k);
    }
    return {acc};
}

Evaluation tc_rhs(const P& v) {
    require_grid(v, "thm-c");
    const long m = v.p + v.q + 2 * v.n;
    const Rational a = H(v.p + v.n) + H(v.p + v.q + v.n) - H(m);
    const Rational b = H(v.q + v.n) + H(v.p + v.q + v.n) - H(m);
    return {B(m, v.n) * (H2(v.p + v.q + v.n) - H2(m) + a * b)};
}

Evaluation td_lhs(const P& v) {
    require_grid(v, "thm-d");
    Rational acc;
    for (long k = 1; k <= v.n; ++k) {
        acc += B(v.p + v.n, k) * B(v.q + v.n, v.n - k) * Rational(k) *
               H(v.p + v.n - k) * H(v.q + k);
    }
    return {acc};
}

Evaluation td_rhs(const P& v) {
    require_grid(v, "thm-d");
    // Zero prefactor (n = 0) short-circuits: the bracket would index H at
    // p+q-1, which is negative when p = q = 0.
    const Rational pref = B(v.p + v.q + 2 * v.n - 1, v.n - 1) * Rational(v.p + v.n);
    if (pref.is_zero()) return {Rational(0)};
    const long m = v.p + v.q + 2 * v.n - 1;
    const Rational a = H(v.p + v.n - 1) + H(v.p + v.q + v.n) - H(m);
    const Rational b = H(v.q + v.n) + H(v.p + v.q + v.n) - H(m);
    return {pref * (H2(v.p + v.q + v.n) - H2(m) + a * b)};
}

Evaluation te_lhs(const P& v) {
    require_grid(v, "thm-e");
    Rational acc;
    for (long k = 0; k <= v.n; ++k) {
        acc += neg1pow(k) * B(v.p + k, k) * B(v.q + v.n, v.n - k) *
               H(v.p + k) * H(v.q + k);
    }
    return {acc, dispatch_uvw(v)};
}

Evaluation te_rhs(const P& v) {
    require_grid(v, "thm-e");
    const long d = v.p - v.q;
    const CaseTag tag = dispatch_uvw(v);
    switch (tag) {
        case CaseTag::U: {
            const Rational a = H(v.p) + H(d) - H(d - v.n);
            const Rational b = H(v.q + v.n) + H(d) - H(d - v.n);
            return {neg1pow(v.n) * B(d, v.n) * (H2(d - v.n) - H2(d) + a * b),
                    tag};
        }
        case CaseTag::V: {
            const Rational pref = neg1pow(1 + d) * factorial(d) *
                                  factorial(-d + v.n - 1) / factorial(v.n);
            return {pref * (H(v.p) + H(v.q + v.n) + Rational(2) * H(d) -
                            Rational(2) * H(-d + v.n) + Rational(2, -d + v.n)),
                    tag};
        }
        default: {
            const Rational a = H(v.p) + H(-d - 1) - H(-d + v.n - 1);
            const Rational b = H(v.q + v.n) + H(-d - 1) - H(-d + v.n - 1);
            return {neg1pow(v.n) * B(d, v.n) *
                        (H2(-d - 1) - H2(-d + v.n - 1) + a * b),
                    tag};
        }
    }
}

Evaluation tf_lhs(const P& v) {
    require_grid(v, "thm-f");
    Rational acc;
    for (long k = 1; k <= v.n; ++k) {
        acc += neg1pow(k) * B(v.p + k, k) * B(v.q + v.n, v.n - k) *
               Rational(k) * H(v.p + k) * H(v.q + k);
    }
    return {acc, dispatch_star(v)};
}

Evaluation tf_rhs(const P& v) {
    require_grid(v, "thm-f");
    const long d = v.p - v.q;
    const CaseTag tag = dispatch_star(v);
    switch (tag) {
        case CaseTag::UStar: {
            const Rational pref = neg1pow(v.n) * Rational(v.p + 1) * B(d, v.n - 1);
            if (pref.is_zero()) return {Rational(0), tag};  // n = 0
            const Rational a = H(v.p + 1) + H(d) - H(d - v.n + 1);
            const Rational b = H(v.q + v.n) + H(d) - H(d - v.n + 1);
            return {pref * (H2(d - v.n + 1) - H2(d) + a * b), tag};
        }
        case CaseTag::VStar: {
            const Rational pref = neg1pow(d) * Rational(v.p + 1) * factorial(d) *
                                  factorial(-d + v.n - 2) / factorial(v.n - 1);
            return {pref * (H(v.p + 1) + H(v.q + v.n) + Rational(2) * H(d) -
                            Rational(2) * H(-d + v.n - 1) +
                            Rational(2, -d + v.n - 1)),
                    tag};
        }
        default: {
            const Rational pref = neg1pow(v.n) * Rational(v.p + 1) * B(d, v.n - 1);
            if (pref.is_zero()) return {Rational(0), tag};  // n = 0
            const Rational a = H(v.p + 1) + H(-d - 1) - H(-d + v.n - 2);
            const Rational b = H(v.q + v.n) + H(-d - 1) - H(-d + v.n - 2);
            return {pref * (H2(-d - 1) - H2(-d + v.n - 2) + a * b), tag};
        }
    }
}

// ---------------------------------------------------------------------------
// Power sums sum k^m H_k and the k^m H_k H_{n-k} family (p = q = 0)
// ---------------------------------------------------------------------------

Rational kpow(long k, int m) {
    Rational w(1);
    for (int i = 0; i < m; ++i) w *= Rational(k);
    return w;
}

template <int M>
Evaluation power_sum_lhs(const P& v) {
    require(v.n >= 0, "sum-k^mHk", "n >= 0");
    Rational acc;
    for (long k = 1; k <= v.n; ++k) {
        acc += kpow(k, M) * H(k);
    }
    return {acc};
}

Evaluation sum_hk_rhs(const P& v) {
    require(v.n >= 0, "sum-Hk", "n >= 0");
    return {Rational(v.n + 1) * (H(v.n + 1) - Rational(1))};
}

Evaluation sum_khk_rhs(const P& v) {
    require(v.n >= 0, "sum-kHk", "n >= 0");
    const long n = v.n;
    return {Rational(Z(n) * Z(n + 1), Z(2)) * H(n) -
            Rational(Z(n - 1) * Z(n), Z(4))};
}

Evaluation sum_k2hk_rhs(const P& v) {
    require(v.n >= 0, "sum-k2Hk", "n >= 0");
    const long n = v.n;
    return {Rational(Z(n) * Z(n + 1) * Z(2 * n + 1), Z(6)) * H(n) -
            Rational(Z(n - 1) * Z(n) * Z(4 * n + 1), Z(36))};
}

Evaluation sum_k3hk_rhs(const P& v) {
    require(v.n >= 0, "sum-k3Hk", "n >= 0");
    const long n = v.n;
    return {Rational(Z(n) * Z(n) * Z(n + 1) * Z(n + 1), Z(4)) * H(n) -
            Rational(Z(n - 1) * Z(n) * Z(n + 1) * Z(3 * n - 2), Z(48))};
}

template <int M>
Evaluation conv_sum_lhs(const P& v) {
    require(v.n >= 0, "sum-k^mHkHnk", "n >= 0");
    Rational acc;
    for (long k = 1; k <= v.n; ++k) {
        acc += kpow(k, M) * H(k) * H(v.n - k);
    }
    return {acc};
}

Evaluation sum_khkhnk_rhs(const P& v) {
    require(v.n >= 0, "sum-kHkHnk", "n >= 0");
    const long n = v.n;
    const Rational h = H(n + 1);
    return {Rational(Z(n) * Z(n + 1), Z(2)) *
            (h * h - H2(n + 1) - Rational(2) * h + Rational(2))};
}

Evaluation sum_k2hkhnk_rhs(const P& v) {
    require(v.n >= 0, "sum-k2HkHnk", "n >= 0");
    const long n = v.n;
    const Rational h = H(n + 1);
    return {Rational(Z(n) * Z(n + 1) * Z(2 * n + 1), Z(6)) *
            (h * h - H2(n + 1) - Rational(Z(13 * n + 5), Z(3) * Z(2 * n + 1)) * h +
             Rational(Z(71 * n + 37), Z(18) * Z(2 * n + 1)))};
}

Evaluation sum_k3hkhnk_rhs(const P& v) {
    require(v.n >= 0, "sum-k3HkHnk", "n >= 0");
    const long n = v.n;
    const Rational h = H(n + 1);
    return {Rational(Z(n) * Z(n) * Z(n + 1) * Z(n + 1), Z(4)) *
            (h * h - H2(n + 1) - Rational(Z(7 * n + 5), Z(3) * Z(n + 1)) * h +
             Rational(Z(35 * n + 37), Z(18) * Z(n + 1)))};
}

// ---------------------------------------------------------------------------
// C(n,k)^2-weighted family (p = q = 0)
// ---------------------------------------------------------------------------

template <int M>
Evaluation sq_sum_lhs(const P& v) {
    require(v.n >= (M == 0 ? 0 : 1), "sq family", M == 0 ? "n >= 0" : "n >= 1");
    Rational acc;
    for (long k = (M == 0 ? 0 : 1); k <= v.n; ++k) {
        const Rational c = B(v.n, k);
        acc += c * c * kpow(k, M) * H(k) * H(v.n - k);
    }
    return {acc};
}

Evaluation chen_chu_rhs(const P& v) {
    require(v.n >= 0, "chen-chu", "n >= 0");
    const long n = v.n;
    const Rational g = Rational(2) * H(n) - H(2 * n);
    return {B(2 * n, n) * (H2(n) - H2(2 * n) + g * g)};
}

Evaluation sq_khkhnk_rhs(const P& v) {
    require(v.n >= 1, "sq-kHkHnk", "n >= 1");
    const long n = v.n;
    const Rational g = Rational(2) * H(n) - H(2 * n - 1);
    return {Rational(n, 2) * B(2 * n, n) *
            (H2(n) - H2(2 * n - 1) + g * (g - Rational(1, n)))};
}

Evaluation sq_k2hkhnk_rhs(const P& v) {
    require(v.n >= 1, "sq-k2HkHnk", "n >= 1");
    const long n = v.n;
    const Rational g = Rational(2) * H(n) - H(2 * n - 1);
    const mpz_class nn = Z(n);
    return {Rational(nn * nn * nn, Z(4 * n - 2)) * B(2 * n, n) *
            (H2(n) - H2(2 * n - 1) +
             g * (g - Rational(2 * nn * nn - 1, 2 * nn * nn * nn - nn * nn)) -
             Rational((nn - 1) * (2 * nn * nn - 2 * nn + 1),
                      nn * nn * nn * (2 * nn - 1) * (2 * nn - 1)))};
}

Evaluation sq_k3hkhnk_rhs(const P& v) {
    require(v.n >= 1, "sq-k3HkHnk", "n >= 1");
    const long n = v.n;
    const Rational g = Rational(2) * H(n) - H(2 * n - 1);
    const mpz_class nn = Z(n);
    return {Rational(nn * nn * nn * (nn + 1), Z(8 * n - 4)) * B(2 * n, n) *
            (H2(n) - H2(2 * n - 1) +
             g * (g - Rational(2 * nn * nn + 4 * nn - 4,
                               2 * nn * nn * nn + nn * nn - nn)) -
             Rational(3 * (nn - 1) * (2 * nn * nn - 2 * nn + 1),
                      nn * nn * (nn + 1) * (2 * nn - 1) * (2 * nn - 1)))};
}

// ---------------------------------------------------------------------------
// Alternating (-1)^k C(n,k) k^m H_k^2 family (p = q = 0)
// ---------------------------------------------------------------------------

template <int M>
Evaluation alt_sum_lhs(const P& v) {
    require(v.n > M, "alt family", M == 1 ? "n > 1" : (M == 2 ? "n > 2" : "n > 3"));
    Rational acc;
    for (long k = 1; k <= v.n; ++k) {
        acc += neg1pow(k) * B(v.n, k) * kpow(k, M) * H(k) * H(k);
    }
    return {acc};
}

Evaluation alt_khk2_rhs(const P& v) {
    require(v.n > 1, "alt-kHk2", "n > 1");
    const long n = v.n;
    const mpz_class nn = Z(n);
    return {Rational(Z(1), Z(1 - n)) *
            (H(n) - Rational(nn * nn + 3 * nn - 2, nn * (nn - 1)))};
}

Evaluation alt_k2hk2_rhs(const P& v) {
    require(v.n > 2, "alt-k2Hk2", "n > 2");
    const long n = v.n;
    const mpz_class nn = Z(n);
    return {Rational(nn, (nn - 1) * (nn - 2)) *
            (H(n) - Rational(2 * nn * nn * nn + nn * nn - 11 * nn + 6,
                             nn * (nn - 1) * (nn - 2)))};
}

Evaluation alt_k3hk2_rhs(const P& v) {
    require(v.n > 3, "alt-k3Hk2", "n > 3");
    const long n = v.n;
    const mpz_class nn = Z(n);
    const mpz_class poly =
        (3 * nn * nn * nn * nn - 4 * nn * nn * nn - 32 * nn * nn + 62 * nn - 15) *
            nn -
        6;
    return {Rational((nn + 1) * nn, (nn - 1) * (nn - 2) * (nn - 3)) *
            (H(n) - Rational(poly, (nn + 1) * nn * (nn - 1) * (nn - 2) * (nn - 3)))};
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

bool always(const P& v) { return grid_ok(v); }
bool n_ge_1(const P& v) { return grid_ok(v) && v.n >= 1; }
bool n_gt_1(const P& v) { return grid_ok(v) && v.n > 1; }
bool n_gt_2(const P& v) { return grid_ok(v) && v.n > 2; }
bool n_gt_3(const P& v) { return grid_ok(v) && v.n > 3; }

std::vector<Identity> build_registry() {
    std::vector<Identity> r;
    const char* all = "n, p, q >= 0";
    const char* npq0 = "n >= 0; p = q = 0";

    r.push_back({"eq2",
                 "sum_k C(p+k,k) C(q+n-k,n-k) = C(p+q+n+1,n)",
                 all, true, always, eq2_lhs, eq2_rhs});
    r.push_back({"eq5",
                 "sum_k C(p+n,k) C(q+n,n-k) = C(p+q+2n,n)",
                 all, true, always, eq5_lhs, eq5_rhs});
    r.push_back({"eq7",
                 "sum_k (-1)^k C(p+k,k) C(q+n,n-k) = (-1)^n C(p-q,n)",
                 all, true, always, eq7_lhs, eq7_rhs});
    r.push_back({"harmonic-a",
                 "sum_k C(p+k,p) C(q+n-k,q) H[p+k]",
                 all, true, always, ha_lhs, ha_rhs});
    r.push_back({"harmonic-b",
                 "sum_k C(p+k,k) C(q+n-k,q) k H[p+k]",
                 all, true, always, hb_lhs, hb_rhs});
    r.push_back({"harmonic-c",
                 "sum_k C(p+n,k) C(q+n,n-k) H[q+k]",
                 all, true, always, hc_lhs, hc_rhs});
    r.push_back({"harmonic-d",
                 "sum_k (-1)^k C(p+k,k) C(q+n,n-k) H[p+k], cases A/B/C",
                 all, true, always, hd_lhs, hd_rhs});
    r.push_back({"harmonic-e",
                 "sum_k (-1)^k C(p+k,k) C(q+n,n-k) H[q+k], cases D/E/F",
                 all, true, always, he_lhs, he_rhs});
    r.push_back({"thm-a",
                 "sum_k C(p+k,p) C(q+n-k,q) H[p+k] H[q+n-k]",
                 all, true, always, ta_lhs, ta_rhs});
    r.push_back({"thm-b",
                 "sum_k C(p+k,p) C(q+n-k,q) k H[p+k] H[q+n-k]",
                 all, true, always, tb_lhs, tb_rhs});
    r.push_back({"thm-c",
                 "sum_k C(p+n,k) C(q+n,n-k) H[p+n-k] H[q+k]",
                 all, true, always, tc_lhs, tc_rhs});
    r.push_back({"thm-d",
                 "sum_k C(p+n,k) C(q+n,n-k) k H[p+n-k] H[q+k]",
                 all, true, always, td_lhs, td_rhs});
    r.push_back({"thm-e",
                 "sum_k (-1)^k C(p+k,k) C(q+n,n-k) H[p+k] H[q+k], cases U/V/W",
                 all, true, always, te_lhs, te_rhs});
    r.push_back({"thm-f",
                 "sum_k (-1)^k C(p+k,k) C(q+n,n-k) k H[p+k] H[q+k], "
                 "cases U*/V*/W*",
                 all, true, always, tf_lhs, tf_rhs});
    r.push_back({"sum-Hk", "sum_k H[k]", npq0, false, always,
                 power_sum_lhs<0>, sum_hk_rhs});
    r.push_back({"sum-kHk", "sum_k k H[k]", npq0, false, always,
                 power_sum_lhs<1>, sum_khk_rhs});
    r.push_back({"sum-k2Hk", "sum_k k^2 H[k]", npq0, false, always,
                 power_sum_lhs<2>, sum_k2hk_rhs});
    r.push_back({"sum-k3Hk", "sum_k k^3 H[k]", npq0, false, always,
                 power_sum_lhs<3>, sum_k3hk_rhs});
    r.push_back({"sum-kHkHnk", "sum_k k H[k] H[n-k]", npq0, false, always,
                 conv_sum_lhs<1>, sum_khkhnk_rhs});
    r.push_back({"sum-k2HkHnk", "sum_k k^2 H[k] H[n-k]", npq0, false, always,
                 conv_sum_lhs<2>, sum_k2hkhnk_rhs});
    r.push_back({"sum-k3HkHnk", "sum_k k^3 H[k] H[n-k]", npq0, false, always,
                 conv_sum_lhs<3>, sum_k3hkhnk_rhs});
    r.push_back({"chen-chu", "sum_k C(n,k)^2 H[k] H[n-k] (Chen-Chu)", npq0,
                 false, always, sq_sum_lhs<0>, chen_chu_rhs});
    r.push_back({"sq-kHkHnk", "sum_k C(n,k)^2 k H[k] H[n-k]",
                 "n >= 1; p = q = 0", false, n_ge_1, sq_sum_lhs<1>,
                 sq_khkhnk_rhs});
    r.push_back({"sq-k2HkHnk", "sum_k C(n,k)^2 k^2 H[k] H[n-k]",
                 "n >= 1; p = q = 0", false, n_ge_1, sq_sum_lhs<2>,
                 sq_k2hkhnk_rhs});
    r.push_back({"sq-k3HkHnk", "sum_k C(n,k)^2 k^3 H[k] H[n-k]",
                 "n >= 1; p = q = 0", false, n_ge_1, sq_sum_lhs<3>,
                 sq_k3hkhnk_rhs});
    r.push_back({"alt-kHk2", "sum_k (-1)^k C(n,k) k H[k]^2",
                 "n > 1; p = q = 0", false, n_gt_1, alt_sum_lhs<1>,
                 alt_khk2_rhs});
    r.push_back({"alt-k2Hk2", "sum_k (-1)^k C(n,k) k^2 H[k]^2",
                 "n > 2; p = q = 0", false, n_gt_2, alt_sum_lhs<2>,
                 alt_k2hk2_rhs});
    r.push_back({"alt-k3Hk2", "sum_k (-1)^k C(n,k) k^3 H[k]^2",
                 "n > 3; p = q = 0", false, n_gt_3, alt_sum_lhs<3>,
                 alt_k3hk2_rhs});
    return r;
}

}  // namespace

std::string_view to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::None: return "";
        case CaseTag::A: return "A";
        case CaseTag::B: return "B";
        case CaseTag::C: return "C";
        case CaseTag::D: return "D";
        case CaseTag::E: return "E";
        case CaseTag::F: return "F";
        case CaseTag::U: return "U";
        case CaseTag::V: return "V";
        case CaseTag::W: return "W";
        case CaseTag::UStar: return "U*";
        case CaseTag::VStar: return "V*";
        case CaseTag::WStar: return "W*";
    }
    return "";
}

CaseTag case_tag_from_string(std::string_view text) {
    static constexpr CaseTag tags[] = {
        CaseTag::A, CaseTag::B, CaseTag::C, CaseTag::D, CaseTag::E, CaseTag::F,
        CaseTag::U, CaseTag::V, CaseTag::W, CaseTag::UStar, CaseTag::VStar,
        CaseTag::WStar,
    };
    for (const CaseTag tag : tags) {
        if (to_string(tag) == text) return tag;
    }
    if (text.empty()) return CaseTag::None;
    throw std::invalid_argument("unknown case tag '" + std::string(text) + "'");
}

const std::vector<Identity>& registry() {
    static const std::vector<Identity> r = build_registry();
    return r;
}

const Identity* find_identity(std::string_view id) {
    for (const Identity& ident : registry()) {
        if (ident.id == id) return &ident;
    }
    return nullptr;
}

Rational vandermonde(long n, long x, long y) {
    if (n < 0) throw std::domain_error("vandermonde: requires n >= 0");
    Rational sum;
    for (long k = 0; k <= n; ++k) {
        sum += binomial(x, k) * binomial(y, n - k);
    }
    const Rational closed = binomial(x + y, n);
    if (sum != closed) {
        std::ostringstream msg;
        msg << "vandermonde: route disagreement at n=" << n << ", x=" << x
            << ", y=" << y << ": " << sum << " vs " << closed;
        throw std::logic_error(msg.str());
    }
    return sum;
}

std::string_view seed_name(Seed seed) {
    switch (seed) {
        case Seed::Eq2: return "eq2";
        case Seed::Eq5: return "eq5";
        case Seed::Eq7: return "eq7";
    }
    return "";
}

Seed seed_from_name(std::string_view name) {
    if (name == "eq2") return Seed::Eq2;
    if (name == "eq5") return Seed::Eq5;
    if (name == "eq7") return Seed::Eq7;
    throw std::invalid_argument("unknown seed '" + std::string(name) +
                                "' (expected eq2, eq5 or eq7)");
}

Jet2 seed_lhs_jet(Seed seed, const IdentityParams& v) {
    require_grid(v, "seed");
    Jet2 acc = Jet2::constant(0);
    switch (seed) {
        case Seed::Eq2:
            for (long k = 0; k <= v.n; ++k) {
                acc += jet_binomial_affine(v.p + k, 1, 0, k) *
                       jet_binomial_affine(v.q + v.n - k, 0, 1, v.n - k);
            }
            return acc;
        case Seed::Eq5:
            for (long k = 0; k <= v.n; ++k) {
                acc += jet_binomial_affine(v.p + v.n, 1, 0, k) *
                       jet_binomial_affine(v.q + v.n, 0, 1, v.n - k);
            }
            return acc;
        case Seed::Eq7:
            for (long k = 0; k <= v.n; ++k) {
                const Jet2 term = jet_binomial_affine(v.p + k, 1, 0, k) *
                                  jet_binomial_affine(v.q + v.n, 0, 1, v.n - k);
                acc += (k & 1L) ? -term : term;
            }
            return acc;
    }
    return acc;
}

Jet2 seed_rhs_jet(Seed seed, const IdentityParams& v) {
    require_grid(v, "seed");
    switch (seed) {
        case Seed::Eq2:
            return jet_binomial_affine(v.p + v.q + v.n + 1, 1, 1, v.n);
        case Seed::Eq5:
            return jet_binomial_affine(v.p + v.q + 2 * v.n, 1, 1, v.n);
        case Seed::Eq7: {
            const Jet2 j = jet_binomial_affine(v.p - v.q, 1, -1, v.n);
            return (v.n & 1L) ? -j : j;
        }
    }
    return Jet2::constant(0);
}

Jet2 seed_jet(Seed seed, const IdentityParams& v) {
    const Jet2 lhs = seed_lhs_jet(seed, v);
    const Jet2 rhs = seed_rhs_jet(seed, v);
    if (lhs != rhs) {
        std::ostringstream msg;
        msg << "seed " << seed_name(seed) << ": jet disagreement at n=" << v.n
            << ", p=" << v.p << ", q=" << v.q << ": " << lhs << " vs " << rhs;
        throw std::logic_error(msg.str());
    }
    return lhs;
}

std::pair<Rational, Rational> jet_derive(Seed seed, JetOp op,
                                         const IdentityParams& v) {
    return {extract(op, seed_lhs_jet(seed, v)),
            extract(op, seed_rhs_jet(seed, v))};
}

Seed closure_seed(ClosureTarget target) {
    switch (target) {
        case ClosureTarget::HarmonicA:
        case ClosureTarget::ThmA:
            return Seed::Eq2;
        case ClosureTarget::HarmonicC:
        case ClosureTarget::ThmC:
            return Seed::Eq5;
        default:
            return Seed::Eq7;
    }
}

const Identity& closure_identity(ClosureTarget target) {
    const char* id = "";
    switch (target) {
        case ClosureTarget::HarmonicA: id = "harmonic-a"; break;
        case ClosureTarget::ThmA: id = "thm-a"; break;
        case ClosureTarget::HarmonicC: id = "harmonic-c"; break;
        case ClosureTarget::ThmC: id = "thm-c"; break;
        case ClosureTarget::HarmonicD: id = "harmonic-d"; break;
        case ClosureTarget::HarmonicE: id = "harmonic-e"; break;
        case ClosureTarget::ThmE: id = "thm-e"; break;
    }
    return *find_identity(id);
}

Rational closure_combination(ClosureTarget target, const Jet2& side,
                             const IdentityParams& v) {
    // Each target's summand differs from the seed's derivative term only by
    // constant harmonic offsets (e.g. H_{p+k} = (H_{p+k} - H_p) + H_p), so a
    // fixed linear combination of the four components recovers it.
    switch (target) {
        case ClosureTarget::HarmonicA:
            return side.dx + H(v.p) * side.val;
        case ClosureTarget::ThmA:
            return side.dxy + H(v.q) * side.dx + H(v.p) * side.dy +
                   H(v.p) * H(v.q) * side.val;
        case ClosureTarget::HarmonicC:
            return H(v.q + v.n) * side.val - side.dy;
        case ClosureTarget::ThmC:
            return side.dxy - H(v.q + v.n) * side.dx - H(v.p + v.n) * side.dy +
                   H(v.p + v.n) * H(v.q + v.n) * side.val;
        case ClosureTarget::HarmonicD:
            return side.dx + H(v.p) * side.val;
        case ClosureTarget::HarmonicE:
            return H(v.q + v.n) * side.val - side.dy;
        case ClosureTarget::ThmE:
            return -side.dxy + H(v.q + v.n) * side.dx - H(v.p) * side.dy +
                   H(v.p) * H(v.q + v.n) * side.val;
    }
    return Rational(0);
}

const std::vector<ShiftRelation>& shift_relations() {
    static const std::vector<ShiftRelation> relations = {
        {"harmonic-b", "harmonic-a",
         [](const P& v) { return P{v.n - 1, v.p + 1, v.q}; },
         [](const P& v) { return Rational(v.p + 1); }},
        {"thm-b", "thm-a",
         [](const P& v) { return P{v.n - 1, v.p + 1, v.q}; },
         [](const P& v) { return Rational(v.p + 1); }},
        {"thm-d", "thm-c",
         [](const P& v) { return P{v.n - 1, v.p, v.q + 1}; },
         [](const P& v) { return Rational(v.p + v.n); }},
        {"thm-f", "thm-e",
         [](const P& v) { return P{v.n - 1, v.p + 1, v.q + 1}; },
         [](const P& v) { return Rational(-(v.p + 1)); }},
    };
    return relations;
}

}  // namespace chv
