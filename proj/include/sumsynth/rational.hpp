#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <utility>

namespace sumsynth {

using BigInt = boost::multiprecision::cpp_int;

// n! computed by repeated multiplication; 0! = 1.
BigInt int_factorial(unsigned long n);

// C(n, k) as an exact integer; zero for k < 0 or k > n.
BigInt binomial(long n, long k);

// Reduced fraction. Invariants: denominator > 0, gcd(|num|, den) = 1,
// zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long v) : num_(v), den_(1) {}
    Rational(BigInt v) : num_(std::move(v)), den_(1) {}
    Rational(BigInt num, BigInt den);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    // |num * den|, the pivot-size measure used by the linear solver.
    BigInt cross_magnitude() const;

    std::string str() const;

private:
    BigInt num_;
    BigInt den_;
    void normalize();
};

Rational rat_pow(const Rational& base, unsigned exp);

inline Rational rat_normalize(BigInt num, BigInt den) {
    return Rational(std::move(num), std::move(den));
}

}  // namespace sumsynth
