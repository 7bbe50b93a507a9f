#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

#include "wildstack/place.hpp"

namespace wildstack {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer floor_of(const Rational& q);
std::string to_string(const Rational& q);  // "4/3", "-2", "0"

// Divisor with rational coefficients in coarse coordinates: finite support
// map Place -> Q with zero coefficients pruned. Exact arithmetic throughout.
class QDivisor {
public:
    QDivisor() = default;

    static QDivisor point(const Place& pl, const Rational& coeff) {
        QDivisor d;
        d.set(pl, coeff);
        return d;
    }

    const std::map<Place, Rational>& coeffs() const { return coeffs_; }
    Rational coeff(const Place& pl) const;
    void set(const Place& pl, const Rational& c);
    bool is_zero() const { return coeffs_.empty(); }
    bool is_integral() const;

    friend bool operator==(const QDivisor& a, const QDivisor& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const QDivisor& a, const QDivisor& b) { return !(a == b); }

    friend QDivisor operator+(const QDivisor& a, const QDivisor& b);
    friend QDivisor operator-(const QDivisor& a, const QDivisor& b);
    friend QDivisor operator-(const QDivisor& a);
    friend QDivisor operator*(const Rational& c, const QDivisor& a);

    // D <= E coefficientwise over the union of supports.
    friend bool leq(const QDivisor& a, const QDivisor& b);

private:
    std::map<Place, Rational> coeffs_;
};

// Sum of coefficients: each coarse coefficient already carries the 1/|G_P|
// weight of its residue gerbe, so the stacky degree is the plain sum.
Rational degree(const QDivisor& d);

// Coefficientwise floor toward -infinity.
QDivisor floor_divisor(const QDivisor& d);

// Pullback along the coarse map. Coarse Q-coefficients are our canonical
// coordinates, in which pi^* is the identity; the stack-coefficient lens
// below exposes the N-fold multiplication. Requires integer coefficients.
QDivisor pullback(const QDivisor& coarse);

}  // namespace wildstack
