#include <doctest.h>

#include <random>

#include "sumsynth/poly.hpp"

using namespace sumsynth;

namespace {

BiPoly random_bipoly(std::mt19937& rng, int max_dx = 3, int max_dy = 2) {
    std::uniform_int_distribution<int> dx(0, max_dx), dy(0, max_dy), nterms(0, 5);
    std::uniform_int_distribution<long> num(-8, 8);
    std::uniform_int_distribution<long> den(1, 6);
    BiPoly p;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        int a = dx(rng), b = dy(rng);
        p.set_coeff(a, b, p.coeff(a, b) + Rational(BigInt(num(rng)), BigInt(den(rng))));
    }
    return p;
}

}  // namespace

TEST_CASE("poly_arith basics") {
    BiPoly x = BiPoly::monomial(1, 0, Rational(1));
    BiPoly y = BiPoly::monomial(0, 1, Rational(1));
    CHECK(x * x == BiPoly::monomial(2, 0, Rational(1)));

    BiPoly q = x * y + y - BiPoly::constant(Rational(1));  // n*n! + n! - 1
    CHECK(q.coeff(1, 1) == Rational(1));
    CHECK(q.coeff(0, 1) == Rational(1));
    CHECK(q.coeff(0, 0) == Rational(-1));

    std::mt19937 rng(7);
    BiPoly p = random_bipoly(rng);
    CHECK(p + BiPoly() == p);
}

TEST_CASE("eval_uni") {
    UniPoly x2 = UniPoly::monomial(2, Rational(1));
    CHECK(x2.eval(BigInt(3)) == Rational(9));

    UniPoly g = UniPoly::monomial(1, Rational(BigInt(1), BigInt(2))) +
                UniPoly::monomial(2, Rational(BigInt(1), BigInt(2)));
    CHECK(g.eval(BigInt(4)) == Rational(10));  // 1+2+3+4

    CHECK(UniPoly::constant(Rational(7)).eval(BigInt(1000)) == Rational(7));
}

TEST_CASE("eval_fact") {
    BiPoly xy = BiPoly::monomial(1, 1, Rational(1));
    CHECK(eval_fact(xy, 3) == Rational(18));

    BiPoly q = xy + BiPoly::monomial(0, 1, Rational(1)) - BiPoly::constant(Rational(1));
    CHECK(eval_fact(q, 3) == Rational(23));  // 4! - 1

    CHECK(eval_fact(BiPoly::monomial(0, 1, Rational(1)), 1) == Rational(1));
}

TEST_CASE("shift_x") {
    BiPoly x2 = BiPoly::monomial(2, 0, Rational(1));
    BiPoly expect = x2 - BiPoly::monomial(1, 0, Rational(2)) + BiPoly::constant(Rational(1));
    CHECK(shift_x(x2) == expect);

    BiPoly xy = BiPoly::monomial(1, 1, Rational(1));
    CHECK(shift_x(xy) == xy - BiPoly::monomial(0, 1, Rational(1)));

    BiPoly g = BiPoly::monomial(1, 0, Rational(BigInt(1), BigInt(2))) +
               BiPoly::monomial(2, 0, Rational(BigInt(1), BigInt(2)));
    BiPoly shifted = BiPoly::monomial(2, 0, Rational(BigInt(1), BigInt(2))) -
                     BiPoly::monomial(1, 0, Rational(BigInt(1), BigInt(2)));
    CHECK(shift_x(g) == shifted);
}

TEST_CASE("shift_x agrees with evaluation at n-1 for deg_y = 0") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        BiPoly p = random_bipoly(rng, 4, 0);
        BiPoly sp = shift_x(p);
        for (unsigned long n = 2; n <= 50; n += 7)
            CHECK(eval_fact(sp, n) == p.to_unipoly().eval(BigInt(n) - 1));
    }
}

TEST_CASE("fact_shift") {
    BiPoly y = BiPoly::monomial(0, 1, Rational(1));
    CHECK(fact_shift(y) == y);

    BiPoly xy = BiPoly::monomial(1, 1, Rational(1));
    CHECK(fact_shift(xy) == xy - y);

    BiPoly x2 = BiPoly::monomial(2, 0, Rational(1));
    CHECK(fact_shift(x2) == shift_x(x2));
}

TEST_CASE("fact_shift encodes (n-1)! = n!/n") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        BiPoly q = random_bipoly(rng);
        int B = q.degree_y().value_or(0);
        BiPoly t = fact_shift(q);
        for (unsigned long n = 2; n <= 15; ++n) {
            // T(q)(n, n!) = n^B * q(n-1, (n-1)!)
            Rational lhs = eval_fact(t, n);
            BigInt nf = int_factorial(n - 1);
            Rational qval(0);
            for (const auto& [k, c] : q.terms()) {
                BigInt term =
                    boost::multiprecision::pow(BigInt(n - 1), static_cast<unsigned>(k.first)) *
                    boost::multiprecision::pow(nf, static_cast<unsigned>(k.second));
                qval += c * Rational(term);
            }
            Rational rhs =
                Rational(boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(B))) * qval;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 15; ++trial) {
        BiPoly p = random_bipoly(rng), q = random_bipoly(rng);
        for (unsigned long n = 1; n <= 20; n += 6) {
            CHECK(eval_fact(p * q, n) == eval_fact(p, n) * eval_fact(q, n));
            CHECK(eval_fact(p + q, n) == eval_fact(p, n) + eval_fact(q, n));
        }
    }
}

TEST_CASE("format_canonical") {
    BiPoly q = BiPoly::monomial(1, 1, Rational(1)) + BiPoly::monomial(0, 1, Rational(1)) -
               BiPoly::constant(Rational(1));
    CHECK(format_canonical(q) == "n*n! + n! - 1");

    BiPoly g = BiPoly::monomial(2, 0, Rational(BigInt(1), BigInt(2))) +
               BiPoly::monomial(1, 0, Rational(BigInt(1), BigInt(2)));
    CHECK(format_canonical(g) == "1/2*n^2 + 1/2*n");

    CHECK(format_canonical(BiPoly()) == "0");
    CHECK(format_canonical(-g) == "-1/2*n^2 - 1/2*n");
    CHECK(format_canonical(BiPoly::monomial(0, 2, Rational(-1))) == "-n!^2");
}
