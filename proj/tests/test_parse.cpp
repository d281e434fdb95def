#include <doctest.h>

#include <random>

#include "sumsynth/parse.hpp"

using namespace sumsynth;

TEST_CASE("parse_poly basics") {
    CHECK(parse_poly("n^2") == BiPoly::monomial(2, 0, Rational(1)));
    CHECK(parse_poly("n * n!") == BiPoly::monomial(1, 1, Rational(1)));

    BiPoly sq = parse_poly("(n+1)^2");
    CHECK(sq == BiPoly::monomial(2, 0, Rational(1)) + BiPoly::monomial(1, 0, Rational(2)) +
                    BiPoly::constant(Rational(1)));
}

TEST_CASE("rational literals and unary minus") {
    CHECK(parse_poly("1/2") == BiPoly::constant(Rational(BigInt(1), BigInt(2))));
    CHECK(parse_poly("-1/2*n") == BiPoly::monomial(1, 0, Rational(BigInt(-1), BigInt(2))));
    CHECK(parse_poly("-n^2") == BiPoly::monomial(2, 0, Rational(-1)));
    CHECK(parse_poly("--3") == BiPoly::constant(Rational(3)));
    CHECK(parse_poly("n!^2") == BiPoly::monomial(0, 2, Rational(1)));
    CHECK(parse_poly("2 - 2") == BiPoly());
}

TEST_CASE("precedence: ^ over * over +/-") {
    CHECK(parse_poly("2*n^2") == BiPoly::monomial(2, 0, Rational(2)));
    CHECK(parse_poly("1 + 2*n") ==
          BiPoly::constant(Rational(1)) + BiPoly::monomial(1, 0, Rational(2)));
    CHECK(parse_poly("(1+n)*n!") ==
          BiPoly::monomial(0, 1, Rational(1)) + BiPoly::monomial(1, 1, Rational(1)));
}

TEST_CASE("syntax errors carry a position") {
    CHECK_THROWS_AS(parse_poly(""), ParseError);
    CHECK_THROWS_AS(parse_poly("n +"), ParseError);
    CHECK_THROWS_AS(parse_poly("(n"), ParseError);
    CHECK_THROWS_AS(parse_poly("n^n"), ParseError);
    CHECK_THROWS_AS(parse_poly("n^-1"), ParseError);
    CHECK_THROWS_AS(parse_poly("n/2"), ParseError);
    CHECK_THROWS_AS(parse_poly("1/0"), ParseError);
    CHECK_THROWS_AS(parse_poly("x"), ParseError);

    try {
        parse_poly("n + @");
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("parse(format(q)) is the identity on random polynomials") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> dx(0, 4), dy(0, 3), nterms(0, 6);
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 9);
    for (int trial = 0; trial < 500; ++trial) {
        BiPoly q;
        int k = nterms(rng);
        for (int i = 0; i < k; ++i) {
            int a = dx(rng), b = dy(rng);
            q.set_coeff(a, b, q.coeff(a, b) + Rational(BigInt(num(rng)), BigInt(den(rng))));
        }
        std::string text = format_canonical(q);
        CHECK(parse_poly(text) == q);
        // deterministic rendering
        CHECK(format_canonical(q) == text);
    }
}
