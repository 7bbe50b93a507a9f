#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "wildstack/fp.hpp"

namespace wildstack {

// Univariate polynomial over F_p in canonical form: coefficients low-to-high
// with no trailing zeros. The zero polynomial has an empty coefficient vector
// and degree kDegNegInf.
class FpPoly {
public:
    static constexpr int kDegNegInf = std::numeric_limits<int>::min();

    explicit FpPoly(std::int64_t p) : p_(p) {}
    FpPoly(std::int64_t p, std::vector<std::int64_t> coeffs);

    static FpPoly zero(std::int64_t p) { return FpPoly(p); }
    static FpPoly constant(const FpElem& c);
    static FpPoly constant(std::int64_t p, std::int64_t c);
    static FpPoly monomial(std::int64_t p, int degree, std::int64_t c = 1);
    // x - alpha
    static FpPoly linear_root(const FpElem& alpha);

    std::int64_t modulus() const { return p_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? kDegNegInf : static_cast<int>(coeffs_.size()) - 1; }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    // Coefficient of x^i (zero beyond the degree).
    FpElem coeff(int i) const;
    std::int64_t coeff_value(int i) const {
        return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : 0;
    }
    FpElem leading() const;
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    FpElem eval(const FpElem& x) const;

    friend bool operator==(const FpPoly& a, const FpPoly& b) {
        return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const FpPoly& a, const FpPoly& b) { return !(a == b); }

    friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator-(const FpPoly& a);
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator*(const FpElem& c, const FpPoly& a);

private:
    std::int64_t p_;
    std::vector<std::int64_t> coeffs_;

    void trim();
};

struct DivModResult {
    FpPoly quotient;
    FpPoly remainder;
};

// f = q*g + r with deg r < deg g. Throws std::domain_error when g = 0.
DivModResult divmod(const FpPoly& f, const FpPoly& g);

// Monic gcd; gcd(0, 0) = 0.
FpPoly gcd(const FpPoly& a, const FpPoly& b);

struct ExtendedGcd {
    FpPoly g;  // monic gcd
    FpPoly u;
    FpPoly v;  // u*a + v*b = g
};
ExtendedGcd extended_gcd(const FpPoly& a, const FpPoly& b);

FpPoly derivative(const FpPoly& f);
FpPoly pow(const FpPoly& base, std::int64_t e);

// Multiplicity of the root alpha in f (0 when f(alpha) != 0). f must be nonzero.
int root_multiplicity(const FpPoly& f, const FpElem& alpha);

// Coefficients of f(x + alpha).
FpPoly taylor_shift(const FpPoly& f, const FpElem& alpha);

// Inverse of g as a power series mod x^k; requires g(0) != 0.
FpPoly series_inverse(const FpPoly& g, int k);

// Canonical rendering, e.g. "x^4+2*x+1"; conforms to the expression grammar.
std::string to_string(const FpPoly& f);

}  // namespace wildstack
