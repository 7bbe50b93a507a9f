#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wildstack/partial_fractions.hpp"
#include "wildstack/place.hpp"
#include "wildstack/rational_fn.hpp"

namespace wildstack {

// Result of normalizing the right-hand side of y^p - y = f.
//
// The exact identity  f = reduced + absorbed_constant + (shift^p - shift)
// holds on every run. Every pole of `reduced` (infinity included, i.e. the
// degree of a polynomial part) has order coprime to p. When the reduction
// leaves a pure constant, `reduced` is 0 and the constant is recorded in
// absorbed_constant: over the algebraic closure every constant is of the form
// h^p - h, so such covers are geometrically split.
struct ASReduction {
    FpRat reduced;
    FpRat shift;
    FpElem absorbed_constant;

    bool geometrically_trivial() const { return reduced.is_constant(); }
};

ASReduction as_reduce(const FpRat& f);

// Branch point of the cover y^p - y = f: a place of the coarse line together
// with its ramification jump m = -ord(f_reduced), always coprime to p.
struct BranchPoint {
    Place place;
    std::int64_t jump;

    friend bool operator==(const BranchPoint& a, const BranchPoint& b) {
        return a.place == b.place && a.jump == b.jump;
    }
};

struct BranchData {
    std::int64_t p;
    std::vector<BranchPoint> points;  // canonical place order
    bool geometrically_trivial;
};

// Jump at one place after reduction; nullopt when unramified there.
std::optional<std::int64_t> jump_at(const FpRat& f, const Place& place);

// All branch places (finite and infinity) of y^p - y = f with their jumps.
BranchData branch_data(const FpRat& f);

// Higher ramification filtration in the lower numbering, as the sequence of
// subgroup orders |G_0|, |G_1|, ... with trailing trivial groups dropped.
struct RamFiltration {
    std::vector<std::int64_t> orders;
};

// Z/p with jump m: G_0 = ... = G_m = Z/p, G_{m+1} = 1. Requires gcd(m,p)=1.
RamFiltration wild_filtration(std::int64_t m, std::int64_t p);
// Tame cyclic of order r: G_0 = Z/r, G_i = 1 for i > 0.
RamFiltration tame_filtration(std::int64_t r);

// sum_i (|G_i| - 1): (m+1)(p-1) for a wild jump m, r-1 for tame order r.
std::int64_t different_exponent(const RamFiltration& filt);

// Genus of the covering curve from Riemann-Hurwitz:
// 2g_Y - 2 = p(2g-2) + sum_j (m_j + 1)(p - 1).
// A trivial cover splits; the genus of each component is the coarse genus.
std::int64_t cover_genus(const BranchData& bd, std::int64_t coarse_genus);

}  // namespace wildstack
