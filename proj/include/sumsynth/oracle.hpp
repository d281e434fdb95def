#pragma once

#include "sumsynth/poly.hpp"

namespace sumsynth {

struct VerificationReport {
    unsigned long checked_upto = 0;
    bool all_match = true;
    // First (smallest) failing n, when all_match is false.
    unsigned long mismatch_n = 0;
    Rational expected;
    Rational got;
};

// f(1) + ... + f(n) for f(i) = p(i, i!), by direct summation with an
// incrementally maintained factorial. No closed forms involved.
Rational sum_oracle(const BiPoly& p, unsigned long n);

// Compares q(n, n!) against the running sum of p for n = 1..n_max in one
// incremental pass, short-circuiting at the first mismatch.
VerificationReport verify_closed_form(const BiPoly& p, const BiPoly& q, unsigned long n_max);

// 100 for purely polynomial inputs, 30 once factorials are involved.
unsigned long default_verify_bound(const BiPoly& p, const BiPoly& q);

}  // namespace sumsynth
