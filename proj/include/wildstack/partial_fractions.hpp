#pragma once

#include <stdexcept>
#include <vector>

#include "wildstack/rational_fn.hpp"

namespace wildstack {

// Raised when the denominator has an irreducible factor of degree > 1 over
// F_p. Carries the monic cofactor left after stripping all rational roots.
struct NonSplitDenominator : std::runtime_error {
    FpPoly factor;
    explicit NonSplitDenominator(FpPoly f)
        : std::runtime_error("denominator does not split over F_" + std::to_string(f.modulus()) +
                             ": irreducible factor in " + wildstack::to_string(f)),
          factor(std::move(f)) {}
};

// coeff/(x - root)^order with coeff != 0.
struct PrincipalTerm {
    FpElem root;
    int order = 1;
    FpElem coeff;
};

struct PartialFractions {
    FpPoly poly_part;
    std::vector<PrincipalTerm> terms;  // sorted by (root value, order)
};

// Exact decomposition f = poly_part + sum coeff/(x - root)^order.
// Requires den(f) to split into linear factors over F_p.
PartialFractions partial_fractions(const FpRat& f);

// Re-summation; exact inverse of partial_fractions.
FpRat assemble(const PartialFractions& pf);

}  // namespace wildstack
