#include <doctest.h>

#include <random>

#include "sumsynth/linear.hpp"

using namespace sumsynth;

namespace {

std::vector<Rational> mat_apply(const ExactMatrix& A, const std::vector<Rational>& x) {
    std::vector<Rational> out(A.rows(), Rational(0));
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) out[i] += A.at(i, j) * x[j];
    return out;
}

}  // namespace

TEST_CASE("identity system") {
    ExactMatrix A(2, 2);
    A.at(0, 0) = Rational(1);
    A.at(1, 1) = Rational(1);
    std::vector<Rational> b{Rational(3), Rational(BigInt(5), BigInt(2))};
    auto s = solve_exact_linear(A, b);
    REQUIRE(s.kind == SolveKind::Unique);
    CHECK(s.solution == b);
}

TEST_CASE("power-sum rows for k=1 give the triangular-number coefficients") {
    // c0 + c1 = 1; 2 c0 + 4 c1 = 3
    ExactMatrix A(2, 2);
    A.at(0, 0) = Rational(1);
    A.at(0, 1) = Rational(1);
    A.at(1, 0) = Rational(2);
    A.at(1, 1) = Rational(4);
    std::vector<Rational> b{Rational(1), Rational(3)};
    auto s = solve_exact_linear(A, b);
    REQUIRE(s.kind == SolveKind::Unique);
    CHECK(s.solution[0] == Rational(BigInt(1), BigInt(2)));
    CHECK(s.solution[1] == Rational(BigInt(1), BigInt(2)));
}

TEST_CASE("contradictory rows are classified inconsistent with a certificate") {
    ExactMatrix A(2, 2);
    A.at(0, 0) = Rational(1);
    A.at(1, 0) = Rational(1);
    std::vector<Rational> b{Rational(0), Rational(1)};
    auto s = solve_exact_linear(A, b);
    REQUIRE(s.kind == SolveKind::Inconsistent);
    for (const auto& c : s.certificate_row) CHECK(c.is_zero());
    CHECK_FALSE(s.certificate_rhs.is_zero());
}

TEST_CASE("underdetermined systems return particular solution plus kernel") {
    ExactMatrix A(1, 2);
    A.at(0, 0) = Rational(1);
    A.at(0, 1) = Rational(2);
    std::vector<Rational> b{Rational(5)};
    auto s = solve_exact_linear(A, b);
    REQUIRE(s.kind == SolveKind::Underdetermined);
    CHECK(mat_apply(A, s.solution) == b);
    REQUIRE(s.kernel.size() == 1);
    auto kz = mat_apply(A, s.kernel[0]);
    CHECK(kz[0].is_zero());
}

TEST_CASE("dimension mismatch") {
    ExactMatrix A(2, 2);
    std::vector<Rational> b{Rational(1)};
    CHECK_THROWS_AS(solve_exact_linear(A, b), std::invalid_argument);
}

TEST_CASE("random square systems: solutions satisfy A x = b exactly") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> entry(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
        ExactMatrix A(n, n);
        std::vector<Rational> b(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) A.at(i, j) = Rational(entry(rng));
            b[i] = Rational(entry(rng));
        }
        auto s = solve_exact_linear(A, b);
        if (s.kind == SolveKind::Unique || s.kind == SolveKind::Underdetermined)
            CHECK(mat_apply(A, s.solution) == b);
    }
}
