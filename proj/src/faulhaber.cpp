#include "sumsynth/faulhaber.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "sumsynth/linear.hpp"

namespace sumsynth {

UniPoly FaulhaberRow::poly() const {
    UniPoly p;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        p.set_coeff(static_cast<int>(j) + 1, coeffs[j]);
    return p;
}

BernoulliTable bernoulli(int m) {
    if (m < 0) throw std::invalid_argument("bernoulli: m must be >= 0");
    BernoulliTable t;
    t.values.reserve(static_cast<std::size_t>(m) + 1);
    t.values.push_back(Rational(1));  // B_0
    for (int i = 1; i <= m; ++i) {
        // sum_{j=0..i} C(i+1, j) B_j = 0, solved for B_i.
        Rational acc(0);
        for (int j = 0; j < i; ++j)
            acc += Rational(binomial(i + 1, j)) * t.values[static_cast<std::size_t>(j)];
        t.values.push_back(-acc / Rational(i + 1));
    }
    return t;
}

BigInt power_sum_brute(int k, unsigned long n) {
    BigInt acc = 0;
    for (unsigned long i = 1; i <= n; ++i)
        acc += boost::multiprecision::pow(BigInt(i), static_cast<unsigned>(k));
    return acc;
}

static void verify_row(const FaulhaberRow& row, unsigned long n_from, unsigned long n_to) {
    UniPoly p = row.poly();
    for (unsigned long n = n_from; n <= n_to; ++n) {
        if (p.eval(BigInt(n)) != Rational(power_sum_brute(row.k, n)))
            throw std::logic_error("faulhaber row failed post-verification");
    }
}

FaulhaberRow faulhaber_row_system(int k) {
    if (k < 1) throw std::invalid_argument("faulhaber_row_system: k must be >= 1");
    const std::size_t sz = static_cast<std::size_t>(k) + 1;
    ExactMatrix A(sz, sz);
    std::vector<Rational> b(sz);
    for (std::size_t row = 0; row < sz; ++row) {
        BigInt n = static_cast<long>(row) + 1;
        BigInt power = n;
        for (std::size_t col = 0; col < sz; ++col) {
            A.at(row, col) = Rational(power);  // n^(col+1)
            power *= n;
        }
        b[row] = Rational(power_sum_brute(k, row + 1));
    }
    LinearSolution sol = solve_exact_linear(A, b);
    if (sol.kind != SolveKind::Unique)
        throw std::logic_error("faulhaber_row_system: truncated system not uniquely solvable");
    FaulhaberRow result{k, std::move(sol.solution)};
    verify_row(result, static_cast<unsigned long>(k) + 2, static_cast<unsigned long>(k) + 11);
    return result;
}

FaulhaberRow faulhaber_row_bernoulli(int k) {
    if (k < 1) throw std::invalid_argument("faulhaber_row_bernoulli: k must be >= 1");
    BernoulliTable B = bernoulli(k);
    FaulhaberRow row;
    row.k = k;
    row.coeffs.assign(static_cast<std::size_t>(k) + 1, Rational(0));
    // sum_{i=1..n} i^k = (1/(k+1)) sum_{j=0..k} (-1)^j C(k+1, j) B_j n^(k+1-j);
    // the (-1)^j converts the B_1 = -1/2 convention to the ascending sum.
    Rational inv(BigInt(1), BigInt(k + 1));
    for (int j = 0; j <= k; ++j) {
        Rational c = Rational(binomial(k + 1, j)) * B.values[static_cast<std::size_t>(j)] * inv;
        if (j % 2 != 0) c = -c;
        row.coeffs[static_cast<std::size_t>(k - j)] = c;  // coefficient of n^(k+1-j)
    }
    return row;
}

const FaulhaberRow& faulhaber_row(int k) {
    static std::mutex mu;
    static std::map<int, FaulhaberRow> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    FaulhaberRow sys = faulhaber_row_system(k);
    FaulhaberRow bern = faulhaber_row_bernoulli(k);
    if (!(sys == bern))
        throw std::logic_error("faulhaber_row: system and Bernoulli methods disagree");
    return cache.emplace(k, std::move(sys)).first->second;
}

}  // namespace sumsynth
