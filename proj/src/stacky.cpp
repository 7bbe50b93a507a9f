#include "wildstack/stacky.hpp"

#include <numeric>

#include "wildstack/fp.hpp"
#include "wildstack/rational_fn.hpp"

namespace wildstack {

void StackyCurveSpec::validate() const {
    require_prime(p);
    if (coarse_genus < 0) throw std::invalid_argument("spec: negative coarse genus");
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& pt = points[i];
        if (pt.place.is_finite() && pt.place.alpha.p != p)
            throw std::invalid_argument("spec: finite place modulus differs from p");
        if (pt.is_wild()) {
            if (pt.jump() < 1) throw std::invalid_argument("spec: wild jump must be >= 1");
            if (pt.jump() % p == 0)
                throw std::invalid_argument("spec: wild jump divisible by p at " + to_string(pt.place));
        } else {
            if (pt.tame_order() < 2) throw std::invalid_argument("spec: tame order must be >= 2");
            if (pt.tame_order() % p == 0)
                throw std::invalid_argument("spec: tame order divisible by p at " + to_string(pt.place));
        }
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[j].place == pt.place)
                throw std::invalid_argument("spec: duplicate stacky place " + to_string(pt.place));
    }
}

const StackyPoint* StackyCurveSpec::find_point(const Place& pl) const {
    for (const auto& pt : points)
        if (pt.place == pl) return &pt;
    return nullptr;
}

std::map<Place, Integer> stack_coefficient_view(const QDivisor& d, const StackyCurveSpec& spec) {
    spec.validate();
    std::map<Place, Integer> out;
    for (const auto& [pl, c] : d.coeffs()) {
        const StackyPoint* pt = spec.find_point(pl);
        Rational scaled = pt ? Rational(spec.stabilizer_order(*pt)) * c : c;
        if (denominator(scaled) != 1)
            throw IntegralityViolation(pl, "coefficient " + to_string(c) + " at " + to_string(pl) +
                                               " is not integral for the stack");
        out[pl] = numerator(scaled);
    }
    return out;
}

}  // namespace wildstack
