#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wildstack/rational_fn.hpp"
#include "wildstack/stacky.hpp"

namespace wildstack {

// Numerical datum of one global Artin-Schreier root stack on P^1: the stacky
// place as a degree-1 divisor, the jump, and a rational function with a pole
// of exact order m there and nowhere else.
struct ASRootStackDatum {
    QDivisor divisor;
    std::int64_t jump;
    FpRat f;
};

// Tame points are handled by classical Kummer root stacks; they ride along in
// the report as (place, order) pairs.
struct KummerDatum {
    Place place;
    std::int64_t order;
};

enum class Verdict { Presentable, Obstructed, Indeterminate };

struct PresentationReport {
    Verdict verdict;
    std::vector<ASRootStackDatum> wild;
    std::vector<KummerDatum> tame;
    std::string reason;  // Obstructed / Indeterminate only
};

// Constructive form of the global structure theorem on P^1: emits
// F = (x - a)^{-m} for finite stacky places and F = x^m at infinity, each
// verified by branch_data to have exactly the prescribed single branch point.
// Requires coarse genus 0 and coordinates (finite/infinity places) on all
// stacky points; tame points are emitted as Kummer data.
PresentationReport global_presentation_p1(const StackyCurveSpec& spec);

// The genus >= 1 obstruction for a single wild point P with jump m: a global
// datum needs f in H^0(O(mP)) not vanishing at P, which exists iff
// h^0(mP) > h^0((m-1)P). Decided through the exact h0 regimes; Indeterminate
// when coarse Riemann-Roch does not pin either dimension.
PresentationReport obstruction_single_wild_point(std::int64_t coarse_genus, std::int64_t m,
                                                 std::int64_t p);

}  // namespace wildstack
