#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sumsynth/rational.hpp"

namespace sumsynth {

class BiPoly;

// Univariate polynomial over Q in the symbol n (internally x). Sparse;
// stored coefficients are nonzero.
class UniPoly {
public:
    UniPoly() = default;

    static UniPoly constant(Rational c);
    static UniPoly monomial(int exp, Rational c);
    static UniPoly variable() { return monomial(1, Rational(1)); }

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is "none".
    std::optional<int> degree() const;
    Rational coeff(int exp) const;
    void set_coeff(int exp, const Rational& c);

    const std::map<int, Rational>& terms() const { return coeffs_; }

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& c, const UniPoly& p);
    friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

    // Exact Horner evaluation.
    Rational eval(const BigInt& n) const;
    Rational eval(const Rational& n) const;

    // Substitution x -> arg(x).
    UniPoly compose(const UniPoly& arg) const;

    bool has_integer_coeffs() const;

    BiPoly to_bipoly() const;

private:
    std::map<int, Rational> coeffs_;
};

// Sparse bivariate polynomial over Q in x (= n) and y (= n! under
// evaluation). Keys are (deg_x, deg_y); stored coefficients are nonzero.
class BiPoly {
public:
    using Key = std::pair<int, int>;

    BiPoly() = default;

    static BiPoly constant(Rational c);
    static BiPoly monomial(int deg_x, int deg_y, Rational c);

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<int> degree_x() const;
    std::optional<int> degree_y() const;
    Rational coeff(int deg_x, int deg_y) const;
    void set_coeff(int deg_x, int deg_y, const Rational& c);

    const std::map<Key, Rational>& terms() const { return coeffs_; }

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const Rational& c, const BiPoly& p);
    friend bool operator==(const BiPoly& a, const BiPoly& b) = default;

    bool has_integer_coeffs() const;

    // The deg_y = 0 slice as a UniPoly; requires degree_y() <= 0.
    UniPoly to_unipoly() const;

private:
    std::map<Key, Rational> coeffs_;
};

// q(n, n!) computed exactly; n! is computed once and powers reused.
Rational eval_fact(const BiPoly& q, unsigned long n);

// q(x - 1, y); (x - 1)^a expanded by binomial coefficients.
BiPoly shift_x(const BiPoly& q);
UniPoly shift_x(const UniPoly& p);

// T(q)(x, y) = x^B q(x - 1, y / x) with B = deg_y(q): every monomial
// x^a y^b maps to (x - 1)^a x^(B - b) y^b. Encodes (n-1)! = n!/n with the
// denominator cleared, so T(q)(n, n!) = n^B q(n-1, (n-1)!).
BiPoly fact_shift(const BiPoly& q);
// Same with an explicit clearing exponent B >= deg_y(q).
BiPoly fact_shift(const BiPoly& q, int y_bound);

// Deterministic canonical rendering: terms by (deg_y desc, deg_x desc),
// integer coefficients without denominator, unit coefficients elided
// except on the constant term, monomials n^a * n!^b.
std::string format_canonical(const BiPoly& q);
std::string format_canonical(const UniPoly& p);

}  // namespace sumsynth
