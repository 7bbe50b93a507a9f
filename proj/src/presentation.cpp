#include "wildstack/presentation.hpp"

#include "wildstack/artin_schreier.hpp"
#include "wildstack/riemann_roch.hpp"

namespace wildstack {

PresentationReport global_presentation_p1(const StackyCurveSpec& spec) {
    spec.validate();
    if (spec.coarse_genus != 0)
        throw std::invalid_argument(
            "global_presentation_p1: coarse genus must be 0; use the obstruction predicate");
    PresentationReport report{Verdict::Presentable, {}, {}, {}};
    for (const auto& pt : spec.points) {
        if (pt.place.is_generic())
            throw std::invalid_argument("global_presentation_p1: stacky place needs coordinates");
        if (!pt.is_wild()) {
            report.tame.push_back({pt.place, pt.tame_order()});
            continue;
        }
        const std::int64_t m = pt.jump();
        // A single pole of exact order m at the prescribed place: no other
        // branch points can appear, so the datum round-trips cleanly.
        FpRat f = pt.place.is_infinity()
                      ? FpRat::from_poly(FpPoly::monomial(spec.p, static_cast<int>(m)))
                      : FpRat(FpPoly::constant(spec.p, 1),
                              pow(FpPoly::linear_root(pt.place.alpha), static_cast<int>(m)));
        BranchData bd = branch_data(f);
        if (bd.points.size() != 1 || !(bd.points[0].place == pt.place) || bd.points[0].jump != m)
            throw std::logic_error("global_presentation_p1: emitted datum fails branch verification");
        report.wild.push_back({QDivisor::point(pt.place, 1), m, std::move(f)});
    }
    return report;
}

PresentationReport obstruction_single_wild_point(std::int64_t coarse_genus, std::int64_t m,
                                                 std::int64_t p) {
    require_prime(p);
    if (coarse_genus < 1)
        throw std::invalid_argument(
            "obstruction predicate: coarse genus must be >= 1 (P^1 is always presentable)");
    if (m < 1 || m % p == 0) throw std::invalid_argument("obstruction predicate: invalid jump");

    StackyCurveSpec coarse{p, coarse_genus, {}};
    Place pt = Place::generic("P");
    H0Result top = h0(coarse, QDivisor::point(pt, Rational(m)));
    H0Result below = h0(coarse, QDivisor::point(pt, Rational(m - 1)));
    if (!top.is_exact() || !below.is_exact())
        return {Verdict::Indeterminate, {}, {},
                "h^0 outside the exact coarse Riemann-Roch regime"};
    std::int64_t diff = *top.exact - *below.exact;
    if (diff == 0)
        return {Verdict::Obstructed, {}, {},
                "every global section of O(" + (m == 1 ? "" : std::to_string(m)) +
                    "P) vanishes at P"};
    if (diff == 1) return {Verdict::Presentable, {}, {}, {}};
    throw std::logic_error("obstruction predicate: h^0 jumped by more than one");
}

}  // namespace wildstack
