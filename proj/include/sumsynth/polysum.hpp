#pragma once

#include <optional>
#include <variant>

#include "sumsynth/poly.hpp"

namespace sumsynth {

// g(n) = f(1) + ... + f(n) for all n >= 1; deg(g) = deg(f) + 1 for
// nonzero f, and g(0) = 0.
UniPoly synth_poly_sum(const UniPoly& f);

// g(x) - g(x - 1).
UniPoly delta(const UniPoly& g);

struct NonIntegralDelta {
    int exponent;  // smallest exponent whose delta coefficient is not integral
    Rational coeff;
};

struct BaseCaseMismatch {
    Rational g_at_1;
    Rational f_at_1;
};

// Decision for: does g represent the running sum of some f with integer
// coefficients? Accepts iff delta(g) has integer coefficients and
// g(1) = delta(g)(1).
struct MembershipVerdict {
    std::optional<UniPoly> witness_f;  // present iff accepted
    std::optional<std::variant<NonIntegralDelta, BaseCaseMismatch>> reject_reason;

    bool accepted() const { return witness_f.has_value(); }
};

MembershipVerdict membership_SZ(const UniPoly& g);

}  // namespace sumsynth
