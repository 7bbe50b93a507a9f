#include "wildstack/riemann_roch.hpp"

#include "wildstack/artin_schreier.hpp"

namespace wildstack {

namespace {

Place coarse_hyperplane(const StackyCurveSpec& spec) {
    std::string label = "H";
    while (spec.find_point(Place::generic(label)) != nullptr) label += "'";
    return Place::generic(label);
}

RamFiltration filtration_at(const StackyCurveSpec& spec, const StackyPoint& pt) {
    return pt.is_wild() ? wild_filtration(pt.jump(), spec.p) : tame_filtration(pt.tame_order());
}

}  // namespace

QDivisor canonical_divisor(const StackyCurveSpec& spec) {
    spec.validate();
    QDivisor k;
    k.set(coarse_hyperplane(spec), Rational(2 * spec.coarse_genus - 2));
    for (const auto& pt : spec.points) {
        Rational local(different_exponent(filtration_at(spec, pt)), spec.stabilizer_order(pt));
        k.set(pt.place, k.coeff(pt.place) + local);
    }
    return k;
}

Rational stacky_genus(const StackyCurveSpec& spec) {
    spec.validate();
    Rational g(spec.coarse_genus);
    for (const auto& pt : spec.points) {
        const std::int64_t order = spec.stabilizer_order(pt);
        Rational sum = 0;
        for (std::int64_t gi : filtration_at(spec, pt).orders)
            sum += Rational(1, order / gi) - Rational(1, order);
        g += sum / 2;
    }
    Rational deg_k = degree(canonical_divisor(spec));
    if (deg_k != 2 * g - 2) throw std::logic_error("stacky_genus: deg K != 2g - 2");
    return g;
}

Rational euler_characteristic(const StackyCurveSpec& spec) { return -degree(canonical_divisor(spec)); }

H0Result h0(const StackyCurveSpec& spec, const QDivisor& d) {
    spec.validate();
    stack_coefficient_view(d, spec);  // integrality gate; throws when invalid

    QDivisor f = floor_divisor(d);
    Rational deg_f = degree(f);
    if (denominator(deg_f) != 1) throw std::logic_error("h0: floor degree not an integer");
    Integer deg = numerator(deg_f);
    const std::int64_t g = spec.coarse_genus;

    if (deg < 0) return H0Result::make_exact(0);
    if (g == 0) return H0Result::make_exact(static_cast<std::int64_t>(deg) + 1);
    if (deg > 2 * g - 2) return H0Result::make_exact(static_cast<std::int64_t>(deg) - g + 1);
    if (f.is_zero()) return H0Result::make_exact(1);
    if (d == canonical_divisor(spec) && deg == 2 * g - 2) return H0Result::make_exact(g);
    return H0Result::indeterminate("special divisor on positive-genus coarse curve");
}

std::vector<H0Result> canonical_ring_table(const StackyCurveSpec& spec, std::int64_t max_n) {
    if (max_n < 0) throw std::invalid_argument("canonical_ring_table: max_n must be >= 0");
    QDivisor k = canonical_divisor(spec);
    std::vector<H0Result> out;
    out.reserve(static_cast<std::size_t>(max_n) + 1);
    for (std::int64_t n = 0; n <= max_n; ++n) out.push_back(h0(spec, Rational(n) * k));
    return out;
}

std::int64_t closed_form_wild_p1(std::int64_t p, std::int64_t m, std::int64_t n) {
    require_prime(p);
    if (m % p == 0) throw std::invalid_argument("closed_form_wild_p1: m divisible by p");
    if (m < 2)
        throw std::invalid_argument("closed_form_wild_p1: the formula's derivation assumes m >= 2");
    if (n < 1) throw std::invalid_argument("closed_form_wild_p1: n must be >= 1");
    std::int64_t value = n * (m - 1) - (n * (m + 1)) / p;
    return value > 1 ? value : 1;
}

std::vector<HilbertRow> hilbert_report(const StackyCurveSpec& spec, std::int64_t max_n) {
    spec.validate();
    const bool closed_form_applies =
        spec.coarse_genus == 0 && spec.points.size() == 1 && spec.points[0].is_wild() &&
        spec.points[0].jump() >= 2;
    QDivisor k = canonical_divisor(spec);
    std::vector<HilbertRow> rows;
    for (std::int64_t n = 0; n <= max_n; ++n) {
        QDivisor d = Rational(n) * k;
        HilbertRow row{n, h0(spec, d), Integer(numerator(degree(floor_divisor(d)))), std::nullopt,
                       std::nullopt};
        if (closed_form_applies && n >= 1) {
            row.closed_form = closed_form_wild_p1(spec.p, spec.points[0].jump(), n);
            if (row.h0.is_exact()) row.agree = (*row.h0.exact == *row.closed_form);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace wildstack
