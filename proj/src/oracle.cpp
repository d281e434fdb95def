#include "sumsynth/oracle.hpp"

#include <stdexcept>

namespace sumsynth {

namespace {

// p(i, fact) with fact = i! already computed.
Rational eval_at(const BiPoly& p, unsigned long i, const BigInt& fact) {
    Rational acc(0);
    for (const auto& [k, c] : p.terms()) {
        BigInt term = boost::multiprecision::pow(BigInt(i), static_cast<unsigned>(k.first)) *
                      boost::multiprecision::pow(fact, static_cast<unsigned>(k.second));
        acc += c * Rational(term);
    }
    return acc;
}

}  // namespace

Rational sum_oracle(const BiPoly& p, unsigned long n) {
    if (n < 1) throw std::invalid_argument("sum_oracle: n must be >= 1");
    Rational acc(0);
    BigInt fact = 1;
    for (unsigned long i = 1; i <= n; ++i) {
        fact *= i;
        acc += eval_at(p, i, fact);
    }
    return acc;
}

VerificationReport verify_closed_form(const BiPoly& p, const BiPoly& q, unsigned long n_max) {
    if (n_max < 1) throw std::invalid_argument("verify_closed_form: n_max must be >= 1");
    VerificationReport report;
    report.checked_upto = n_max;
    Rational running(0);
    BigInt fact = 1;
    for (unsigned long n = 1; n <= n_max; ++n) {
        fact *= n;
        running += eval_at(p, n, fact);
        Rational closed = eval_at(q, n, fact);
        if (closed != running) {
            report.all_match = false;
            report.mismatch_n = n;
            report.expected = running;
            report.got = closed;
            return report;
        }
    }
    return report;
}

unsigned long default_verify_bound(const BiPoly& p, const BiPoly& q) {
    bool has_fact = p.degree_y().value_or(0) > 0 || q.degree_y().value_or(0) > 0;
    return has_fact ? 30 : 100;
}

}  // namespace sumsynth
