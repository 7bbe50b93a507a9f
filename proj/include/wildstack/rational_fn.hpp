#pragma once

#include <cstdint>
#include <string>

#include "wildstack/place.hpp"
#include "wildstack/poly.hpp"

namespace wildstack {

// Rational function over F_p in canonical form: gcd(num, den) = 1, den monic
// and nonzero; the zero function is 0/1. Equality is structural.
class FpRat {
public:
    explicit FpRat(std::int64_t p) : num_(FpPoly::zero(p)), den_(FpPoly::constant(p, 1)) {}
    FpRat(FpPoly num, FpPoly den);  // normalizes; throws on zero denominator

    static FpRat zero(std::int64_t p) { return FpRat(p); }
    static FpRat constant(const FpElem& c) { return FpRat(FpPoly::constant(c), FpPoly::constant(c.p, 1)); }
    static FpRat from_poly(FpPoly f) {
        auto p = f.modulus();
        return FpRat(std::move(f), FpPoly::constant(p, 1));
    }
    // x
    static FpRat variable(std::int64_t p) { return from_poly(FpPoly::monomial(p, 1)); }

    std::int64_t modulus() const { return num_.modulus(); }
    const FpPoly& num() const { return num_; }
    const FpPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    bool is_poly() const { return den_.is_one(); }

    friend bool operator==(const FpRat& a, const FpRat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const FpRat& a, const FpRat& b) { return !(a == b); }

    friend FpRat operator+(const FpRat& a, const FpRat& b);
    friend FpRat operator-(const FpRat& a, const FpRat& b);
    friend FpRat operator-(const FpRat& a);
    friend FpRat operator*(const FpRat& a, const FpRat& b);
    friend FpRat operator/(const FpRat& a, const FpRat& b);  // throws on zero divisor

private:
    FpPoly num_;
    FpPoly den_;
};

FpRat pow(const FpRat& base, std::int64_t e);  // negative e inverts; 0^negative throws

// Order of vanishing of f at a finite place or at infinity.
// Throws std::domain_error for f = 0 (the valuation is +infinite) and
// std::invalid_argument for generic places (no coordinates to valuate in).
std::int64_t ord_at(const FpRat& f, const Place& place);

// f^p - f, the additive isogeny whose kernel is F_p.
FpRat artin_schreier_image(const FpRat& f);

// Canonical expression rendering, parseable by parse_rational_expr.
std::string to_expression(const FpRat& f);

}  // namespace wildstack
