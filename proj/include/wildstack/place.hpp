#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "wildstack/fp.hpp"

namespace wildstack {

// A point of the coarse curve: an F_p-rational point of P^1 (finite or at
// infinity) or a coordinate-free marker on a positive-genus coarse curve.
struct Place {
    enum class Kind { Finite, Infinity, Generic };

    Kind kind = Kind::Infinity;
    FpElem alpha;       // Finite only
    std::string label;  // Generic only

    static Place finite(const FpElem& a) {
        Place pl;
        pl.kind = Kind::Finite;
        pl.alpha = a;
        return pl;
    }
    static Place finite(std::int64_t value, std::int64_t p) { return finite(FpElem{value, p}); }
    static Place infinity() { return Place{}; }
    static Place generic(std::string lbl) {
        Place pl;
        pl.kind = Kind::Generic;
        pl.label = std::move(lbl);
        return pl;
    }

    bool is_finite() const { return kind == Kind::Finite; }
    bool is_infinity() const { return kind == Kind::Infinity; }
    bool is_generic() const { return kind == Kind::Generic; }

    friend bool operator==(const Place& a, const Place& b) {
        if (a.kind != b.kind) return false;
        switch (a.kind) {
            case Kind::Finite: return a.alpha == b.alpha;
            case Kind::Infinity: return true;
            case Kind::Generic: return a.label == b.label;
        }
        return false;
    }
    friend bool operator!=(const Place& a, const Place& b) { return !(a == b); }

    // Canonical order: finite points by residue, then infinity, then generic
    // labels. Gives divisors and reports a deterministic support order.
    friend bool operator<(const Place& a, const Place& b) {
        auto rank = [](Kind k) { return k == Kind::Finite ? 0 : (k == Kind::Infinity ? 1 : 2); };
        if (rank(a.kind) != rank(b.kind)) return rank(a.kind) < rank(b.kind);
        if (a.kind == Kind::Finite) return a.alpha.value < b.alpha.value;
        if (a.kind == Kind::Generic) return a.label < b.label;
        return false;
    }
};

// "0", "infinity", or the generic label.
std::string to_string(const Place& pl);

}  // namespace wildstack
