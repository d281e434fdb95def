#include "sumsynth/weighted.hpp"

#include <stdexcept>

#include "sumsynth/polysum.hpp"

namespace sumsynth {

Rational weight_at(const WeightSpec& alpha, unsigned long i) {
    if (i < 1) throw std::invalid_argument("weight_at: i must be >= 1");
    return std::visit(
        [i](const auto& w) -> Rational {
            using T = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<T, ConstantWeight>) {
                return Rational(w.c);
            } else if constexpr (std::is_same_v<T, PolynomialWeight>) {
                return w.w.eval(BigInt(i));
            } else {
                return Rational(w.pattern[(i - 1) % w.pattern.size()]);
            }
        },
        alpha.variant);
}

Rational weighted_sum_oracle(const BiPoly& p, const WeightSpec& alpha, unsigned long n) {
    if (n < 1) throw std::invalid_argument("weighted_sum_oracle: n must be >= 1");
    Rational acc(0);
    BigInt fact = 1;
    for (unsigned long i = 1; i <= n; ++i) {
        fact *= i;
        Rational fi(0);
        for (const auto& [k, c] : p.terms()) {
            BigInt term = boost::multiprecision::pow(BigInt(i), static_cast<unsigned>(k.first)) *
                          boost::multiprecision::pow(fact, static_cast<unsigned>(k.second));
            fi += c * Rational(term);
        }
        acc += weight_at(alpha, i) * fi;
    }
    return acc;
}

UniPoly synth_weighted_polynomial(const UniPoly& f, const UniPoly& w) {
    if (!w.has_integer_coeffs())
        throw std::invalid_argument("synth_weighted_polynomial: weight must have integer coefficients");
    return synth_poly_sum(w * f);
}

const UniPoly& ResidueClosedForms::form_for(unsigned long n) const {
    return forms[(n - 1) % static_cast<unsigned long>(period)];
}

ResidueClosedForms synth_weighted_periodic(const UniPoly& f, const std::vector<BigInt>& pattern) {
    if (pattern.empty()) throw std::invalid_argument("synth_weighted_periodic: empty pattern");
    const int p = static_cast<int>(pattern.size());
    const UniPoly x = UniPoly::variable();

    // f(p*j + t) as a polynomial in j, for t = 1..p.
    auto f_at = [&](int t) {
        return f.compose(Rational(p) * x + UniPoly::constant(Rational(t)));
    };

    // Full-period block sum as a polynomial in j.
    UniPoly block;
    for (int t = 1; t <= p; ++t) block += Rational(pattern[static_cast<std::size_t>(t - 1)]) * f_at(t);

    // prefix(m) = sum_{j=0..m-1} block(j) = block(0) + S(m-1), with S the
    // running sum of block; the identity holds for all m >= 0 since
    // S(-1) = -block(0) formally.
    UniPoly S = synth_poly_sum(block);
    UniPoly prefix = UniPoly::constant(block.eval(BigInt(0))) +
                     S.compose(x - UniPoly::constant(Rational(1)));

    ResidueClosedForms result;
    result.period = p;
    WeightSpec alpha{PeriodicWeight{pattern}};
    for (int r = 1; r <= p; ++r) {
        // Partial block for the last (incomplete) period, in m.
        UniPoly partial;
        for (int t = 1; t <= r; ++t)
            partial += Rational(pattern[static_cast<std::size_t>(t - 1)]) * f_at(t);
        UniPoly in_m = prefix + partial;
        // Substitute m = (n - r) / p.
        UniPoly m_of_n = Rational(BigInt(1), BigInt(p)) * x +
                         UniPoly::constant(Rational(BigInt(-r), BigInt(p)));
        UniPoly g_r = in_m.compose(m_of_n);

        for (unsigned long n = static_cast<unsigned long>(r);
             n <= static_cast<unsigned long>(5 * p + r); n += static_cast<unsigned long>(p)) {
            if (g_r.eval(BigInt(n)) != weighted_sum_oracle(f.to_bipoly(), alpha, n))
                throw std::logic_error("synth_weighted_periodic: verification failed");
        }
        result.forms.push_back(std::move(g_r));
    }
    return result;
}

}  // namespace sumsynth
