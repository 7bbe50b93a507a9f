#include "wildstack/qdivisor.hpp"

#include <sstream>
#include <stdexcept>

namespace wildstack {

Integer floor_of(const Rational& q) {
    Integer n = numerator(q), d = denominator(q);  // d > 0 canonical
    if (n >= 0) return n / d;
    return -((-n + d - 1) / d);
}

std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

Rational QDivisor::coeff(const Place& pl) const {
    auto it = coeffs_.find(pl);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void QDivisor::set(const Place& pl, const Rational& c) {
    if (c == 0)
        coeffs_.erase(pl);
    else
        coeffs_[pl] = c;
}

bool QDivisor::is_integral() const {
    for (const auto& [pl, c] : coeffs_)
        if (denominator(c) != 1) return false;
    return true;
}

QDivisor operator+(const QDivisor& a, const QDivisor& b) {
    QDivisor out = a;
    for (const auto& [pl, c] : b.coeffs_) out.set(pl, out.coeff(pl) + c);
    return out;
}

QDivisor operator-(const QDivisor& a, const QDivisor& b) { return a + (-b); }

QDivisor operator-(const QDivisor& a) {
    QDivisor out;
    for (const auto& [pl, c] : a.coeffs_) out.set(pl, -c);
    return out;
}

QDivisor operator*(const Rational& c, const QDivisor& a) {
    QDivisor out;
    if (c == 0) return out;
    for (const auto& [pl, k] : a.coeffs_) out.set(pl, c * k);
    return out;
}

bool leq(const QDivisor& a, const QDivisor& b) {
    for (const auto& [pl, c] : a.coeffs())
        if (c > b.coeff(pl)) return false;
    for (const auto& [pl, c] : b.coeffs())
        if (a.coeff(pl) > c) return false;
    return true;
}

Rational degree(const QDivisor& d) {
    Rational sum = 0;
    for (const auto& [pl, c] : d.coeffs()) sum += c;
    return sum;
}

QDivisor floor_divisor(const QDivisor& d) {
    QDivisor out;
    for (const auto& [pl, c] : d.coeffs()) out.set(pl, Rational(floor_of(c)));
    return out;
}

QDivisor pullback(const QDivisor& coarse) {
    if (!coarse.is_integral())
        throw std::invalid_argument("pullback: coarse divisor must have integer coefficients");
    return coarse;
}

}  // namespace wildstack
