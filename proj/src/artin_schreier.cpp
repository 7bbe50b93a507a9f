#include "wildstack/artin_schreier.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>

namespace wildstack {

namespace {

// Repeatedly replaces the largest p-divisible order k by k/p, merging
// coefficients and accumulating the Artin-Schreier shift. The order multiset
// strictly decreases, so this terminates with every order coprime to p.
void reduce_pole_orders(std::map<int, FpElem>& orders, std::int64_t p,
                        const std::function<FpRat(int)>& pole_basis, FpRat& shift) {
    while (true) {
        auto it = std::find_if(orders.rbegin(), orders.rend(), [&](const auto& kv) {
            return kv.first % p == 0 && !kv.second.is_zero();
        });
        if (it == orders.rend()) return;
        const int k = it->first;
        const FpElem c = it->second;
        orders.erase(std::next(it).base());
        const int down = k / static_cast<int>(p);
        shift = shift + FpRat::constant(c) * pole_basis(down);
        auto [slot, inserted] = orders.emplace(down, c);
        if (!inserted) slot->second = slot->second + c;
    }
}

struct ByValue {
    bool operator()(const FpElem& a, const FpElem& b) const { return a.value < b.value; }
};

}  // namespace

ASReduction as_reduce(const FpRat& f) {
    const std::int64_t p = f.modulus();
    ASReduction out{FpRat::zero(p), FpRat::zero(p), FpElem{0, p}};
    if (f.is_zero()) return out;

    PartialFractions pf = partial_fractions(f);

    // Finite places: c/(x-a)^(pk) = w^p - w + c/(x-a)^k for w = c/(x-a)^k,
    // because c^p = c in F_p.
    std::map<FpElem, std::map<int, FpElem>, ByValue> by_root;
    for (const auto& t : pf.terms) by_root[t.root][t.order] = t.coeff;

    FpRat shift = FpRat::zero(p);
    for (auto& [root, orders] : by_root) {
        const FpElem alpha = root;
        reduce_pole_orders(
            orders, p,
            [&](int k) {
                return FpRat(FpPoly::constant(FpElem{1, p}), pow(FpPoly::linear_root(alpha), k));
            },
            shift);
    }

    // The pole at infinity is the polynomial part: c*x^(pk) reduces the same way.
    std::map<int, FpElem> inf_orders;
    for (int d = 1; d <= pf.poly_part.degree(); ++d) {
        FpElem c = pf.poly_part.coeff(d);
        if (!c.is_zero()) inf_orders[d] = c;
    }
    reduce_pole_orders(
        inf_orders, p, [&](int k) { return FpRat::from_poly(FpPoly::monomial(p, k)); }, shift);

    FpRat reduced = FpRat::constant(pf.poly_part.coeff(0));
    for (const auto& [d, c] : inf_orders)
        if (!c.is_zero()) reduced = reduced + FpRat::from_poly(FpPoly::monomial(p, d, c.value));
    for (const auto& [root, orders] : by_root)
        for (const auto& [k, c] : orders)
            if (!c.is_zero())
                reduced = reduced + FpRat(FpPoly::constant(c), pow(FpPoly::linear_root(root), k));

    FpElem absorbed{0, p};
    if (reduced.is_constant() && !reduced.is_zero()) {
        absorbed = reduced.num().coeff(0);
        reduced = FpRat::zero(p);
    }

    // Exactness postcondition; cheap at desk scale and non-negotiable.
    FpRat residual = f - reduced - FpRat::constant(absorbed) - artin_schreier_image(shift);
    if (!residual.is_zero()) throw std::logic_error("as_reduce: soundness identity violated");

    out.reduced = reduced;
    out.shift = shift;
    out.absorbed_constant = absorbed;
    return out;
}

std::optional<std::int64_t> jump_at(const FpRat& f, const Place& place) {
    if (place.is_generic()) throw std::invalid_argument("jump_at: generic place carries no coordinate");
    ASReduction red = as_reduce(f);
    if (red.reduced.is_zero()) return std::nullopt;
    std::int64_t v = ord_at(red.reduced, place);
    if (v >= 0) return std::nullopt;
    std::int64_t m = -v;
    if (m % f.modulus() == 0) throw std::logic_error("jump_at: reduced pole order divisible by p");
    return m;
}

BranchData branch_data(const FpRat& f) {
    const std::int64_t p = f.modulus();
    ASReduction red = as_reduce(f);
    BranchData bd{p, {}, red.geometrically_trivial()};
    if (red.reduced.is_zero()) return bd;

    const FpPoly& den = red.reduced.den();
    FpPoly cof = den;
    for (std::int64_t a = 0; a < p && cof.degree() > 0; ++a) {
        FpElem alpha{a, p};
        int m = root_multiplicity(den, alpha);
        if (m == 0) continue;
        bd.points.push_back({Place::finite(alpha), m});
        for (int i = 0; i < m; ++i) cof = divmod(cof, FpPoly::linear_root(alpha)).quotient;
    }
    std::int64_t inf_order = red.reduced.num().degree() - red.reduced.den().degree();
    if (inf_order > 0) bd.points.push_back({Place::infinity(), inf_order});

    for (const auto& pt : bd.points)
        if (pt.jump % p == 0) throw std::logic_error("branch_data: jump divisible by p after reduction");
    return bd;
}

RamFiltration wild_filtration(std::int64_t m, std::int64_t p) {
    require_prime(p);
    if (m < 1) throw std::invalid_argument("wild_filtration: jump must be >= 1");
    if (m % p == 0) throw std::invalid_argument("wild_filtration: jump divisible by p");
    return RamFiltration{std::vector<std::int64_t>(static_cast<std::size_t>(m) + 1, p)};
}

RamFiltration tame_filtration(std::int64_t r) {
    if (r < 2) throw std::invalid_argument("tame_filtration: order must be >= 2");
    return RamFiltration{{r}};
}

std::int64_t different_exponent(const RamFiltration& filt) {
    std::int64_t sum = 0;
    std::int64_t prev = std::numeric_limits<std::int64_t>::max();
    for (std::int64_t o : filt.orders) {
        if (o < 1) throw std::invalid_argument("different_exponent: group order < 1");
        if (o > prev) throw std::invalid_argument("different_exponent: filtration not non-increasing");
        if (filt.orders.front() % o != 0)
            throw std::invalid_argument("different_exponent: order does not divide |G_0|");
        prev = o;
        sum += o - 1;
    }
    return sum;
}

std::int64_t cover_genus(const BranchData& bd, std::int64_t coarse_genus) {
    if (coarse_genus < 0) throw std::invalid_argument("cover_genus: negative coarse genus");
    if (bd.points.empty()) return coarse_genus;
    std::int64_t rhs = bd.p * (2 * coarse_genus - 2);
    for (const auto& pt : bd.points) rhs += (pt.jump + 1) * (bd.p - 1);
    if (rhs % 2 != 0 || rhs < -2) throw std::domain_error("cover_genus: inconsistent branch data");
    return (rhs + 2) / 2;
}

}  // namespace wildstack
