#pragma once

#include <vector>

#include "sumsynth/poly.hpp"

namespace sumsynth {

// Coefficients c_{k,0..k} with
//   1^k + 2^k + ... + n^k = c_{k,0} n + c_{k,1} n^2 + ... + c_{k,k} n^(k+1).
struct FaulhaberRow {
    int k = 0;
    std::vector<Rational> coeffs;  // coeffs[j] multiplies n^(j+1)

    UniPoly poly() const;

    friend bool operator==(const FaulhaberRow& a, const FaulhaberRow& b) = default;
};

// B_0..B_m with the convention B_1 = -1/2, generated by
// sum_{j=0..i} C(i+1, j) B_j = 0 for i >= 1, B_0 = 1.
struct BernoulliTable {
    std::vector<Rational> values;
};

BernoulliTable bernoulli(int m);

// 1^k + 2^k + ... + n^k by direct big-integer summation.
BigInt power_sum_brute(int k, unsigned long n);

// Row via the (k+1)x(k+1) truncation of the coefficient system at
// n = 1..k+1, solved exactly and over-verified at n = k+2..k+11.
FaulhaberRow faulhaber_row_system(int k);

// Row via the Bernoulli closed form (sign-adjusted for B_1 = -1/2 so the
// result matches the ascending sum).
FaulhaberRow faulhaber_row_bernoulli(int k);

// Both methods, cross-checked for exact equality; cached per k.
const FaulhaberRow& faulhaber_row(int k);

}  // namespace sumsynth
