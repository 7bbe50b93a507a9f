#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <variant>
#include <vector>

#include "wildstack/qdivisor.hpp"

namespace wildstack {

// Local structure at a stacky point: tame cyclic of order r, or wild Z/p with
// ramification jump m (p is the ambient characteristic).
struct TameLocal {
    std::int64_t r;
};
struct WildLocal {
    std::int64_t m;
};

struct StackyPoint {
    Place place;
    std::variant<TameLocal, WildLocal> local;

    bool is_wild() const { return std::holds_alternative<WildLocal>(local); }
    std::int64_t tame_order() const { return std::get<TameLocal>(local).r; }
    std::int64_t jump() const { return std::get<WildLocal>(local).m; }
};

// A stacky curve given by its coarse genus and marked stacky points.
struct StackyCurveSpec {
    std::int64_t p = 2;
    std::int64_t coarse_genus = 0;
    std::vector<StackyPoint> points;

    // Invariants: p prime (within cap), genus >= 0, places pairwise distinct,
    // tame orders >= 2 and coprime to p, wild jumps >= 1 and coprime to p.
    void validate() const;

    // |G_x| at a marked point: r for tame, p for wild.
    std::int64_t stabilizer_order(const StackyPoint& pt) const {
        return pt.is_wild() ? p : pt.tame_order();
    }

    const StackyPoint* find_point(const Place& pl) const;
};

struct IntegralityViolation : std::runtime_error {
    Place place;
    IntegralityViolation(const Place& pl, const std::string& what)
        : std::runtime_error(what), place(pl) {}
};

// Integer coefficients as seen on the stack itself: n_P = |G_P| * r_P at
// stacky places and n_P = r_P elsewhere. Throws IntegralityViolation when
// some |G_P| * r_P fails to be an integer.
std::map<Place, Integer> stack_coefficient_view(const QDivisor& d, const StackyCurveSpec& spec);

}  // namespace wildstack
