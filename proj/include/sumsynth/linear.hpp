#pragma once

#include <vector>

#include "sumsynth/rational.hpp"

namespace sumsynth {

// Dense matrix of rationals, row-major.
class ExactMatrix {
public:
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

enum class SolveKind { Unique, Inconsistent, Underdetermined };

struct LinearSolution {
    SolveKind kind;
    // Unique: the solution. Underdetermined: a particular solution (free
    // variables set to 0).
    std::vector<Rational> solution;
    // Underdetermined only: basis of the homogeneous solution space.
    std::vector<std::vector<Rational>> kernel;
    // Inconsistent only: a fully reduced row with zero coefficients and a
    // nonzero right side.
    std::vector<Rational> certificate_row;
    Rational certificate_rhs;
};

// Exact Gaussian elimination over Q. Classification is exact; any returned
// solution satisfies A x = b exactly.
LinearSolution solve_exact_linear(const ExactMatrix& A, const std::vector<Rational>& b);

}  // namespace sumsynth
