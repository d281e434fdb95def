#include "sumsynth/factsum.hpp"

#include <map>
#include <stdexcept>

#include "sumsynth/oracle.hpp"

namespace sumsynth {

DegreeBounds default_bounds(const BiPoly& p) {
    return DegreeBounds{p.degree_x().value_or(0) + 2, p.degree_y().value_or(0) + 1};
}

BiPoly telescope_residual(const BiPoly& q, const BiPoly& p) {
    int B = q.degree_y().value_or(0);
    BiPoly xB = BiPoly::monomial(B, 0, Rational(1));
    return xB * q - fact_shift(q, B) - xB * p;
}

SynthesisResult synth_fact_sum(const BiPoly& p, const DegreeBounds& bounds) {
    if (bounds.deg_x < 0 || bounds.deg_y < 0)
        throw std::invalid_argument("synth_fact_sum: negative degree bound");
    const int A = bounds.deg_x;
    const int B = bounds.deg_y;
    const std::size_t unknowns = static_cast<std::size_t>(A + 1) * static_cast<std::size_t>(B + 1);
    auto index = [B](int a, int b) {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(B + 1) +
               static_cast<std::size_t>(b);
    };

    // Residual contribution of each ansatz monomial. The clearing exponent
    // is the fixed bound B, valid for any q within the bounds.
    BiPoly xB = BiPoly::monomial(B, 0, Rational(1));
    std::vector<BiPoly> contrib(unknowns);
    for (int a = 0; a <= A; ++a) {
        for (int b = 0; b <= B; ++b) {
            BiPoly mono = BiPoly::monomial(a, b, Rational(1));
            contrib[index(a, b)] = xB * mono - fact_shift(mono, B);
        }
    }
    BiPoly rhs = xB * p;

    // One equation per monomial appearing anywhere, plus the base case.
    std::map<BiPoly::Key, std::size_t> row_of;
    auto intern = [&row_of](const BiPoly& poly) {
        for (const auto& [k, c] : poly.terms()) row_of.emplace(k, row_of.size());
    };
    for (const auto& c : contrib) intern(c);
    intern(rhs);

    const std::size_t rows = row_of.size() + 1;
    ExactMatrix M(rows, unknowns);
    std::vector<Rational> b(rows, Rational(0));
    for (std::size_t u = 0; u < unknowns; ++u) {
        for (const auto& [k, c] : contrib[u].terms()) M.at(row_of.at(k), u) = c;
        M.at(rows - 1, u) = Rational(1);  // q(1,1): every monomial is 1
    }
    for (const auto& [k, c] : rhs.terms()) b[row_of.at(k)] = c;
    b[rows - 1] = eval_fact(p, 1);  // p(1, 1!)

    LinearSolution sol = solve_exact_linear(M, b);

    SynthesisResult result;
    result.bounds = bounds;
    switch (sol.kind) {
        case SolveKind::Inconsistent:
            result.certificate =
                InconsistencyCertificate{std::move(sol.certificate_row), sol.certificate_rhs};
            return result;
        case SolveKind::Underdetermined:
            // The monomial sequences n^a (n!)^b are linearly independent,
            // so the homogeneous system has only the zero solution.
            throw std::logic_error("synth_fact_sum: nontrivial kernel (must never occur)");
        case SolveKind::Unique:
            break;
    }

    BiPoly q;
    for (int a = 0; a <= A; ++a)
        for (int bb = 0; bb <= B; ++bb) q.set_coeff(a, bb, sol.solution[index(a, bb)]);

    const unsigned long verify_upto = 30;
    VerificationReport report = verify_closed_form(p, q, verify_upto);
    if (!report.all_match)
        throw std::logic_error("synth_fact_sum: formal solution failed oracle verification");
    result.closed_form = std::move(q);
    result.verified_upto = verify_upto;
    return result;
}

}  // namespace sumsynth
