#pragma once

#include <optional>
#include <vector>

#include "sumsynth/linear.hpp"
#include "sumsynth/poly.hpp"

namespace sumsynth {

// Ansatz monomials {x^a y^b : 0 <= a <= deg_x, 0 <= b <= deg_y}.
struct DegreeBounds {
    int deg_x = 0;
    int deg_y = 0;
};

// Heuristic defaults: deg_x(p) + 2 and deg_y(p) + 1.
DegreeBounds default_bounds(const BiPoly& p);

struct InconsistencyCertificate {
    // A fully reduced row of the ansatz system: zero coefficients with a
    // nonzero right side.
    std::vector<Rational> row;
    Rational rhs;
};

struct SynthesisResult {
    DegreeBounds bounds;
    std::optional<BiPoly> closed_form;  // present iff a solution exists
    unsigned long verified_upto = 0;    // oracle check range for a closed form
    std::optional<InconsistencyCertificate> certificate;  // present iff no solution

    bool solved() const { return closed_form.has_value(); }
};

// E(x, y) = x^B q(x, y) - fact_shift(q)(x, y) - x^B p(x, y) with
// B = deg_y(q); E(n, n!) = n^B (q(n, n!) - q(n-1, (n-1)!) - p(n, n!)) for
// n >= 2, so E = 0 makes q telescope against p.
BiPoly telescope_residual(const BiPoly& q, const BiPoly& p);

// Decides, exactly, whether some q within the bounds satisfies
// q(n, n!) = p(1, 1!) + ... + p(n, n!) for all n, via the formal linear
// system (residual coefficients all zero, q(1,1) = p(1,1)).
SynthesisResult synth_fact_sum(const BiPoly& p, const DegreeBounds& bounds);

}  // namespace sumsynth
