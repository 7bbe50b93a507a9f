#include "wildstack/partial_fractions.hpp"

#include <algorithm>

namespace wildstack {

PartialFractions partial_fractions(const FpRat& f) {
    const std::int64_t p = f.modulus();
    auto [quot, rem] = divmod(f.num(), f.den());
    PartialFractions out{quot, {}};
    if (rem.is_zero()) return out;

    // Split the denominator into linear factors by scanning F_p for roots.
    struct Root {
        FpElem alpha;
        int mult;
    };
    std::vector<Root> roots;
    FpPoly cofactor = f.den();
    for (std::int64_t a = 0; a < p && cofactor.degree() > 0; ++a) {
        FpElem alpha{a, p};
        int m = root_multiplicity(cofactor, alpha);
        if (m == 0) continue;
        roots.push_back({alpha, m});
        for (int i = 0; i < m; ++i) cofactor = divmod(cofactor, FpPoly::linear_root(alpha)).quotient;
    }
    if (cofactor.degree() > 0) throw NonSplitDenominator(inv(cofactor.leading()) * cofactor);

    for (const auto& [alpha, mult] : roots) {
        // f - poly_part = rem/den = (rem/g) / (x-alpha)^mult with g coprime to
        // (x-alpha); the principal part at alpha is the truncated series of
        // rem/g expanded around alpha.
        FpPoly g = divmod(f.den(), pow(FpPoly::linear_root(alpha), mult)).quotient;
        FpPoly series = divmod(taylor_shift(rem, alpha) * series_inverse(taylor_shift(g, alpha), mult),
                               FpPoly::monomial(p, mult))
                            .remainder;
        for (int i = 0; i < mult; ++i) {
            FpElem c = series.coeff(i);
            if (!c.is_zero()) out.terms.push_back({alpha, mult - i, c});
        }
    }
    std::sort(out.terms.begin(), out.terms.end(), [](const PrincipalTerm& a, const PrincipalTerm& b) {
        if (a.root.value != b.root.value) return a.root.value < b.root.value;
        return a.order < b.order;
    });
    return out;
}

FpRat assemble(const PartialFractions& pf) {
    FpRat acc = FpRat::from_poly(pf.poly_part);
    for (const auto& t : pf.terms)
        acc = acc + FpRat(FpPoly::constant(t.coeff), pow(FpPoly::linear_root(t.root), t.order));
    return acc;
}

}  // namespace wildstack
