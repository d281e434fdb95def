#include "sumsynth/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace sumsynth {

// ---------------------------------------------------------------- UniPoly

UniPoly UniPoly::constant(Rational c) { return monomial(0, std::move(c)); }

UniPoly UniPoly::monomial(int exp, Rational c) {
    UniPoly p;
    if (!c.is_zero()) p.coeffs_.emplace(exp, std::move(c));
    return p;
}

std::optional<int> UniPoly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.rbegin()->first;
}

Rational UniPoly::coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void UniPoly::set_coeff(int exp, const Rational& c) {
    if (c.is_zero())
        coeffs_.erase(exp);
    else
        coeffs_[exp] = c;
}

UniPoly UniPoly::operator-() const {
    UniPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    for (const auto& [e, c] : o.coeffs_) set_coeff(e, coeff(e) + c);
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    for (const auto& [e, c] : o.coeffs_) set_coeff(e, coeff(e) - c);
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_)
            r.set_coeff(ea + eb, r.coeff(ea + eb) + ca * cb);
    return r;
}

UniPoly operator*(const Rational& c, const UniPoly& p) {
    UniPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, pc] : p.coeffs_) r.coeffs_.emplace(e, c * pc);
    return r;
}

Rational UniPoly::eval(const BigInt& n) const { return eval(Rational(n)); }

Rational UniPoly::eval(const Rational& n) const {
    if (coeffs_.empty()) return Rational(0);
    // Horner over the sparse exponent gaps.
    Rational acc(0);
    int prev_exp = coeffs_.rbegin()->first;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= rat_pow(n, static_cast<unsigned>(prev_exp - it->first));
        acc += it->second;
        prev_exp = it->first;
    }
    return acc * rat_pow(n, static_cast<unsigned>(prev_exp));
}

UniPoly UniPoly::compose(const UniPoly& arg) const {
    UniPoly result;
    UniPoly power = UniPoly::constant(Rational(1));
    int prev_exp = 0;
    for (const auto& [e, c] : coeffs_) {
        for (int i = prev_exp; i < e; ++i) power = power * arg;
        prev_exp = e;
        result += c * power;
    }
    return result;
}

bool UniPoly::has_integer_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const auto& t) { return t.second.is_integer(); });
}

BiPoly UniPoly::to_bipoly() const {
    BiPoly r;
    for (const auto& [e, c] : coeffs_) r.set_coeff(e, 0, c);
    return r;
}

// ----------------------------------------------------------------- BiPoly

BiPoly BiPoly::constant(Rational c) { return monomial(0, 0, std::move(c)); }

BiPoly BiPoly::monomial(int deg_x, int deg_y, Rational c) {
    BiPoly p;
    if (!c.is_zero()) p.coeffs_.emplace(Key{deg_x, deg_y}, std::move(c));
    return p;
}

std::optional<int> BiPoly::degree_x() const {
    if (coeffs_.empty()) return std::nullopt;
    int d = 0;
    for (const auto& [k, c] : coeffs_) d = std::max(d, k.first);
    return d;
}

std::optional<int> BiPoly::degree_y() const {
    if (coeffs_.empty()) return std::nullopt;
    int d = 0;
    for (const auto& [k, c] : coeffs_) d = std::max(d, k.second);
    return d;
}

Rational BiPoly::coeff(int deg_x, int deg_y) const {
    auto it = coeffs_.find(Key{deg_x, deg_y});
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void BiPoly::set_coeff(int deg_x, int deg_y, const Rational& c) {
    if (c.is_zero())
        coeffs_.erase(Key{deg_x, deg_y});
    else
        coeffs_[Key{deg_x, deg_y}] = c;
}

BiPoly BiPoly::operator-() const {
    BiPoly r;
    for (const auto& [k, c] : coeffs_) r.coeffs_.emplace(k, -c);
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [k, c] : o.coeffs_) set_coeff(k.first, k.second, coeff(k.first, k.second) + c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [k, c] : o.coeffs_) set_coeff(k.first, k.second, coeff(k.first, k.second) - c);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ka, ca] : a.coeffs_)
        for (const auto& [kb, cb] : b.coeffs_) {
            int x = ka.first + kb.first;
            int y = ka.second + kb.second;
            r.set_coeff(x, y, r.coeff(x, y) + ca * cb);
        }
    return r;
}

BiPoly operator*(const Rational& c, const BiPoly& p) {
    BiPoly r;
    if (c.is_zero()) return r;
    for (const auto& [k, pc] : p.coeffs_) r.coeffs_.emplace(k, c * pc);
    return r;
}

bool BiPoly::has_integer_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const auto& t) { return t.second.is_integer(); });
}

UniPoly BiPoly::to_unipoly() const {
    UniPoly r;
    for (const auto& [k, c] : coeffs_) {
        if (k.second != 0) throw std::invalid_argument("to_unipoly: polynomial involves n!");
        r.set_coeff(k.first, c);
    }
    return r;
}

Rational eval_fact(const BiPoly& q, unsigned long n) {
    if (n < 1) throw std::invalid_argument("eval_fact: n must be >= 1");
    BigInt fact = int_factorial(n);
    Rational acc(0);
    for (const auto& [k, c] : q.terms()) {
        BigInt term = boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(k.first)) *
                      boost::multiprecision::pow(fact, static_cast<unsigned>(k.second));
        acc += c * Rational(term);
    }
    return acc;
}

// (x - 1)^a as coefficients of x^0..x^a.
static std::vector<Rational> expand_x_minus_one(int a) {
    std::vector<Rational> out(static_cast<std::size_t>(a) + 1);
    for (int j = 0; j <= a; ++j) {
        BigInt c = binomial(a, j);
        if ((a - j) % 2 != 0) c = -c;
        out[static_cast<std::size_t>(j)] = Rational(c);
    }
    return out;
}

BiPoly shift_x(const BiPoly& q) {
    BiPoly r;
    for (const auto& [k, c] : q.terms()) {
        auto exp = expand_x_minus_one(k.first);
        for (int j = 0; j < static_cast<int>(exp.size()); ++j) {
            if (exp[static_cast<std::size_t>(j)].is_zero()) continue;
            r.set_coeff(j, k.second, r.coeff(j, k.second) + c * exp[static_cast<std::size_t>(j)]);
        }
    }
    return r;
}

UniPoly shift_x(const UniPoly& p) { return shift_x(p.to_bipoly()).to_unipoly(); }

BiPoly fact_shift(const BiPoly& q) {
    return fact_shift(q, q.degree_y().value_or(0));
}

BiPoly fact_shift(const BiPoly& q, int y_bound) {
    if (y_bound < q.degree_y().value_or(0))
        throw std::invalid_argument("fact_shift: clearing exponent below deg_y");
    BiPoly r;
    for (const auto& [k, c] : q.terms()) {
        auto exp = expand_x_minus_one(k.first);
        int x_extra = y_bound - k.second;  // >= 0
        for (int j = 0; j < static_cast<int>(exp.size()); ++j) {
            const Rational& e = exp[static_cast<std::size_t>(j)];
            if (e.is_zero()) continue;
            int x = j + x_extra;
            r.set_coeff(x, k.second, r.coeff(x, k.second) + c * e);
        }
    }
    return r;
}

// ----------------------------------------------------------------- format

std::string format_canonical(const BiPoly& q) {
    if (q.is_zero()) return "0";

    // (deg_y desc, deg_x desc)
    std::vector<std::pair<BiPoly::Key, Rational>> terms(q.terms().begin(), q.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.first.second != b.first.second) return a.first.second > b.first.second;
        return a.first.first > b.first.first;
    });

    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms) {
        Rational mag = c.abs();
        if (first) {
            if (c.is_negative()) out += "-";
            first = false;
        } else {
            out += c.is_negative() ? " - " : " + ";
        }
        std::string mono;
        if (k.first > 0) {
            mono += "n";
            if (k.first > 1) mono += "^" + std::to_string(k.first);
        }
        if (k.second > 0) {
            if (!mono.empty()) mono += "*";
            mono += "n!";
            if (k.second > 1) mono += "^" + std::to_string(k.second);
        }
        if (mono.empty()) {
            out += mag.str();
        } else if (mag == Rational(1)) {
            out += mono;
        } else {
            out += mag.str() + "*" + mono;
        }
    }
    return out;
}

std::string format_canonical(const UniPoly& p) { return format_canonical(p.to_bipoly()); }

}  // namespace sumsynth
