#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wildstack/place.hpp"
#include "wildstack/rational_fn.hpp"

namespace wildstack {

class ASCoverAlgebra;

// Element sum c_i y^i with y-degree < p, coefficients in F_p(x).
class AlgebraElem {
public:
    AlgebraElem(const ASCoverAlgebra& algebra, std::vector<FpRat> coeffs);

    const std::vector<FpRat>& coeffs() const { return coeffs_; }
    const ASCoverAlgebra& algebra() const { return *algebra_; }
    bool is_zero() const;

    friend bool operator==(const AlgebraElem& a, const AlgebraElem& b) {
        return a.algebra_ == b.algebra_ && a.coeffs_ == b.coeffs_;
    }

private:
    const ASCoverAlgebra* algebra_;
    std::vector<FpRat> coeffs_;
};

// The quotient algebra F_p(x)[y]/(y^p - y - f) with a distinguished totally
// ramified place. f must have a pole of order m coprime to p there; then
// v_L(x - alpha) = p (resp. v_L(1/x) = p at infinity) and v_L(y) = -m, and the
// valuation of a nonzero element is computed exactly by the minimum formula
// below, since the candidate values are pairwise incongruent mod p.
class ASCoverAlgebra {
public:
    ASCoverAlgebra(FpRat f, Place distinguished);

    std::int64_t p() const { return f_.modulus(); }
    const FpRat& f() const { return f_; }
    const Place& place() const { return place_; }
    std::int64_t jump() const { return jump_; }

    AlgebraElem zero() const;
    AlgebraElem one() const;
    AlgebraElem y() const;
    AlgebraElem from_rat(const FpRat& c) const;
    // c * y^k, k < p
    AlgebraElem monomial(const FpRat& c, int k) const;

    AlgebraElem add(const AlgebraElem& a, const AlgebraElem& b) const;
    AlgebraElem sub(const AlgebraElem& a, const AlgebraElem& b) const;
    AlgebraElem mul(const AlgebraElem& a, const AlgebraElem& b) const;
    AlgebraElem pow(const AlgebraElem& a, std::int64_t e) const;

    // The generator of the Galois action: y -> y + 1, extended multiplicatively.
    AlgebraElem galois_shift(const AlgebraElem& a) const;

    // v_L(sum c_i y^i) = min_i { p * ord(c_i) - m * i }; exact because the
    // candidates are pairwise distinct mod p. Throws on the zero element.
    std::int64_t valuation(const AlgebraElem& a) const;

private:
    FpRat f_;
    Place place_;
    std::int64_t jump_;

    void check_mine(const AlgebraElem& a) const;
};

// The unique pair 0 < c < p, c*r - d*p = 1, for 1 < r < p.
struct EuclidPair {
    std::int64_t c;
    std::int64_t d;
};
EuclidPair euclid_pair(std::int64_t r, std::int64_t p);

struct LocalCheck {
    bool verified;
    std::string detail;  // residual or valuation mismatch when not verified
};

// For m = pn - 1 and f = g(x)/x^m with g a unit at 0, checks that z = x^n y
// satisfies z^p - z x^{n(p-1)} = x g(x) exactly in the algebra, and that
// v_L(z) = 1 (so z is a local uniformizer and A[z] is integrally closed).
LocalCheck check_integral_identity(std::int64_t p, std::int64_t m, const FpPoly& g);

// For any m coprime to p, write m = pn - r (0 < r < p) and pick cr - dp = 1;
// then u = x^{nc-d} y^c has v_L(u) = 1. Verifies the valuation exactly.
LocalCheck uniformizer_check(std::int64_t p, std::int64_t m, const FpPoly& g);

}  // namespace wildstack
