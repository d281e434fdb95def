#include "sumsynth/polysum.hpp"

#include "sumsynth/faulhaber.hpp"

namespace sumsynth {

UniPoly synth_poly_sum(const UniPoly& f) {
    UniPoly g;
    for (const auto& [k, a] : f.terms()) {
        if (k == 0) {
            g += a * UniPoly::variable();  // n constants sum to a*n
        } else {
            g += a * faulhaber_row(k).poly();
        }
    }
    return g;
}

UniPoly delta(const UniPoly& g) { return g - shift_x(g); }

MembershipVerdict membership_SZ(const UniPoly& g) {
    MembershipVerdict verdict;
    UniPoly f = delta(g);
    for (const auto& [e, c] : f.terms()) {
        if (!c.is_integer()) {
            verdict.reject_reason = NonIntegralDelta{e, c};
            return verdict;
        }
    }
    Rational g1 = g.eval(BigInt(1));
    Rational f1 = f.eval(BigInt(1));
    if (g1 != f1) {
        verdict.reject_reason = BaseCaseMismatch{g1, f1};
        return verdict;
    }
    verdict.witness_f = std::move(f);
    return verdict;
}

}  // namespace sumsynth
