#pragma once

#include <variant>
#include <vector>

#include "sumsynth/poly.hpp"

namespace sumsynth {

// Integer weight families alpha_1, alpha_2, ... for weighted sums
// alpha_1 f(1) + ... + alpha_n f(n).
struct ConstantWeight {
    BigInt c;
};
struct PolynomialWeight {
    UniPoly w;  // integer coefficients; alpha_i = w(i)
};
struct PeriodicWeight {
    std::vector<BigInt> pattern;  // alpha_i = pattern[(i-1) mod p]
};

struct WeightSpec {
    std::variant<ConstantWeight, PolynomialWeight, PeriodicWeight> variant;
};

Rational weight_at(const WeightSpec& alpha, unsigned long i);

// Direct exact summation of alpha_i * p(i, i!) for i = 1..n.
Rational weighted_sum_oracle(const BiPoly& p, const WeightSpec& alpha, unsigned long n);

// Closed form for sum alpha_i f(i) with alpha_i = w(i): the running sum
// of w * f.
UniPoly synth_weighted_polynomial(const UniPoly& f, const UniPoly& w);

// One polynomial per congruence class of n mod p; residues are indexed
// r = 1..p, with r = p covering n = 0 mod p.
struct ResidueClosedForms {
    int period = 1;
    std::vector<UniPoly> forms;  // forms[r-1] covers n = r (mod p)

    const UniPoly& form_for(unsigned long n) const;
};

// Periodic-weight synthesis: full-period blocks are summed through the
// polynomial synthesizer, the partial block added per residue, and each
// result verified against the oracle before returning.
ResidueClosedForms synth_weighted_periodic(const UniPoly& f, const std::vector<BigInt>& pattern);

}  // namespace sumsynth
