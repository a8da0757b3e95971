#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chv/jet2.hpp"
#include "chv/rational.hpp"

namespace chv {

/// One grid point. All components are nonnegative; identities that do not
/// use p or q ignore those fields.
struct IdentityParams {
    long n = 0;
    long p = 0;
    long q = 0;
};

/// Closed-form regime selector for the alternating families. The trichotomy
/// is p-q >= n / 0 <= p-q < n / p-q < 0, shifted by one for the starred
/// family (p-q >= n-1 / 0 <= p-q < n-1 / p-q < 0, sign tested first).
enum class CaseTag {
    None,
    A, B, C,              // harmonic-d
    D, E, F,              // harmonic-e
    U, V, W,              // thm-e
    UStar, VStar, WStar,  // thm-f
};

std::string_view to_string(CaseTag tag);
CaseTag case_tag_from_string(std::string_view text);

struct Evaluation {
    Rational value;
    CaseTag tag = CaseTag::None;
};

/// One verifiable identity: a literal term-by-term summation (the ground
/// truth) paired with a closed form (the system under test). Both throw
/// std::domain_error naming the violated constraint when called outside
/// the domain.
struct Identity {
    std::string id;
    std::string description;
    std::string domain_text;
    bool uses_pq = false;
    bool (*in_domain)(const IdentityParams&) = nullptr;
    Evaluation (*lhs)(const IdentityParams&) = nullptr;
    Evaluation (*rhs)(const IdentityParams&) = nullptr;
};

/// The 28-entry identity catalog. Immutable after the first call.
const std::vector<Identity>& registry();

/// nullptr when the id is unknown.
const Identity* find_identity(std::string_view id);

/// Chu-Vandermonde convolution at integer specializations of x and y:
/// evaluates both sum_k C(x,k) C(y,n-k) and C(x+y,n) and returns their
/// common value. Throws std::logic_error should the two routes ever
/// disagree (they cannot; the check is an internal assertion).
Rational vandermonde(long n, long x, long y);

/// The three substituted convolutions that seed the derivations:
///   Eq2: sum_k C(p+k+x,k) C(q+n-k+y,n-k)        = C(p+q+n+1+x+y,n)
///   Eq5: sum_k C(p+n+x,k) C(q+n+y,n-k)          = C(p+q+2n+x+y,n)
///   Eq7: sum_k (-1)^k C(p+k+x,k) C(q+n+y,n-k)   = (-1)^n C(p-q+x-y,n)
enum class Seed { Eq2, Eq5, Eq7 };

std::string_view seed_name(Seed seed);
/// Throws std::invalid_argument for anything but "eq2", "eq5", "eq7".
Seed seed_from_name(std::string_view name);

/// Term-by-term jet summation of the seed's left side, with x = (0,1,0,0)
/// and y = (0,0,1,0).
Jet2 seed_lhs_jet(Seed seed, const IdentityParams& v);
/// The seed's closed-form right side as a jet.
Jet2 seed_rhs_jet(Seed seed, const IdentityParams& v);
/// Both sides evaluated and compared; returns the common jet. Throws
/// std::logic_error should any component disagree (it cannot; the seed is a
/// polynomial identity in x and y).
Jet2 seed_jet(Seed seed, const IdentityParams& v);

/// One derivative-operator application: the chosen component extracted from
/// both sides of the seed convolution. Componentwise equality for every
/// (n,p,q) is the derivation check — the convolution is a polynomial
/// identity in x and y, so every Taylor coefficient must agree.
std::pair<Rational, Rational> jet_derive(Seed seed, JetOp op,
                                         const IdentityParams& v);

/// Identities reachable from a seed by derivative extraction.
enum class ClosureTarget {
    HarmonicA,  // eq2, d/dx
    ThmA,       // eq2, d2/dxdy
    HarmonicC,  // eq5, d/dy
    ThmC,       // eq5, d2/dxdy
    HarmonicD,  // eq7, d/dx
    HarmonicE,  // eq7, d/dy
    ThmE,       // eq7, d2/dxdy
};

inline constexpr ClosureTarget kClosureTargets[] = {
    ClosureTarget::HarmonicA, ClosureTarget::ThmA,      ClosureTarget::HarmonicC,
    ClosureTarget::ThmC,      ClosureTarget::HarmonicD, ClosureTarget::HarmonicE,
    ClosureTarget::ThmE,
};

Seed closure_seed(ClosureTarget target);
const Identity& closure_identity(ClosureTarget target);

/// The linear combination of one seed side's jet components that isolates
/// the target's weighted harmonic sum (e.g. for HarmonicA it is
/// dx + H_p * value, which turns sum C C (H_{p+k} - H_p) back into
/// sum C C H_{p+k}). Applied to the seed's lhs jet it reproduces the
/// target's literal summation; applied to the rhs jet, the closed form.
Rational closure_combination(ClosureTarget target, const Jet2& side,
                             const IdentityParams& v);

/// Substitution relation target(n,p,q) = factor * source(shifted), n >= 1,
/// holding separately for the lhs summations and the rhs closed forms.
struct ShiftRelation {
    const char* target;
    const char* source;
    IdentityParams (*shifted)(const IdentityParams&);
    Rational (*factor)(const IdentityParams&);
};

/// harmonic-b from harmonic-a, thm-b from thm-a, thm-d from thm-c,
/// thm-f from thm-e.
const std::vector<ShiftRelation>& shift_relations();

}  // namespace chv
