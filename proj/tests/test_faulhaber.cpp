#include <doctest.h>

#include "sumsynth/faulhaber.hpp"

using namespace sumsynth;

namespace {

Rational half() { return Rational(BigInt(1), BigInt(2)); }

}  // namespace

TEST_CASE("bernoulli numbers") {
    auto t = bernoulli(8);
    CHECK(t.values[0] == Rational(1));
    CHECK(t.values[1] == -half());
    CHECK(t.values[2] == Rational(BigInt(1), BigInt(6)));
    CHECK(t.values[3] == Rational(0));
    CHECK(t.values[4] == Rational(BigInt(-1), BigInt(30)));
    CHECK(t.values[6] == Rational(BigInt(1), BigInt(42)));
    // odd-index values vanish from B_3 on
    CHECK(t.values[5] == Rational(0));
    CHECK(t.values[7] == Rational(0));
    CHECK(bernoulli(0).values == std::vector<Rational>{Rational(1)});
}

TEST_CASE("faulhaber_row_system fixtures") {
    auto r1 = faulhaber_row_system(1);
    CHECK(r1.coeffs == std::vector<Rational>{half(), half()});

    auto r2 = faulhaber_row_system(2);
    CHECK(r2.coeffs == std::vector<Rational>{Rational(BigInt(1), BigInt(6)), half(),
                                             Rational(BigInt(1), BigInt(3))});

    auto r3 = faulhaber_row_system(3);
    CHECK(r3.coeffs == std::vector<Rational>{Rational(0), Rational(BigInt(1), BigInt(4)), half(),
                                             Rational(BigInt(1), BigInt(4))});
    for (unsigned long n = 1; n <= 10; ++n)
        CHECK(r3.poly().eval(BigInt(n)) == Rational(power_sum_brute(3, n)));
}

TEST_CASE("faulhaber_row_bernoulli fixtures") {
    CHECK(faulhaber_row_bernoulli(1).coeffs == faulhaber_row_system(1).coeffs);
    CHECK(faulhaber_row_bernoulli(2).coeffs == faulhaber_row_system(2).coeffs);
    CHECK(faulhaber_row_bernoulli(6).poly().eval(BigInt(2)) == Rational(65));  // 1 + 64
}

TEST_CASE("faulhaber_row cross-checked fixtures") {
    CHECK(faulhaber_row(1).coeffs == std::vector<Rational>{half(), half()});
    CHECK(faulhaber_row(4).poly().eval(BigInt(3)) == Rational(98));  // 1 + 16 + 81
}

TEST_CASE("method agreement and oracle match for k <= 20") {
    for (int k = 1; k <= 20; ++k) {
        auto sys = faulhaber_row_system(k);
        auto bern = faulhaber_row_bernoulli(k);
        CHECK(sys == bern);

        // coefficient sum is the n = 1 evaluation
        Rational sum(0);
        for (const auto& c : sys.coeffs) sum += c;
        CHECK(sum == Rational(1));
        // leading coefficient 1/(k+1)
        CHECK(sys.coeffs.back() == Rational(BigInt(1), BigInt(k + 1)));

        UniPoly p = sys.poly();
        BigInt brute = 0;
        for (unsigned long n = 1; n <= 200; ++n) {
            brute += boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(k));
            CHECK(p.eval(BigInt(n)) == Rational(brute));
        }
    }
}
