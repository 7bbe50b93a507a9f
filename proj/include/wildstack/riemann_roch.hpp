#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wildstack/stacky.hpp"

namespace wildstack {

// Dimension of a Riemann-Roch space, or an honest refusal: coarse
// Riemann-Roch pins the answer only outside the special range on
// positive-genus coarse curves.
struct H0Result {
    std::optional<std::int64_t> exact;
    std::string reason;  // set when indeterminate

    static H0Result make_exact(std::int64_t n) { return {n, {}}; }
    static H0Result indeterminate(std::string why) { return {std::nullopt, std::move(why)}; }
    bool is_exact() const { return exact.has_value(); }

    friend bool operator==(const H0Result& a, const H0Result& b) { return a.exact == b.exact; }
};

// Canonical divisor from wild stacky Riemann-Hurwitz: (2g-2)H at a fresh
// generic place plus, at each stacky point, the local different divided by
// the stabilizer order: (m+1)(p-1)/p wild, (r-1)/r tame.
QDivisor canonical_divisor(const StackyCurveSpec& spec);

// g(X) = g(coarse) + 1/2 sum_x sum_i (1/[G_x:G_{x,i}] - 1/|G_x|); checked
// internally against deg K = 2g - 2.
Rational stacky_genus(const StackyCurveSpec& spec);

// chi = -deg K = 2 - 2g.
Rational euler_characteristic(const StackyCurveSpec& spec);

// h^0(X, D) via floor pushforward and coarse Riemann-Roch. Exact regimes:
// deg floor(D) < 0; coarse genus 0; deg floor(D) > 2g-2; floor(D) = 0;
// D = K with deg floor = 2g-2. Anything else is Indeterminate.
H0Result h0(const StackyCurveSpec& spec, const QDivisor& d);

// Dimensions h^0(n K) for n = 0..max_n.
std::vector<H0Result> canonical_ring_table(const StackyCurveSpec& spec, std::int64_t max_n);

// The wild-P^1 closed form max{n(m-1) - floor(n(m+1)/p), 1}; requires m >= 2,
// n >= 1, gcd(m, p) = 1.
std::int64_t closed_form_wild_p1(std::int64_t p, std::int64_t m, std::int64_t n);

// One row of the Hilbert-series report emitted by the CLI.
struct HilbertRow {
    std::int64_t n;
    H0Result h0;
    Integer floor_degree;
    std::optional<std::int64_t> closed_form;  // single-wild-point genus-0 specs, m >= 2, n >= 1
    std::optional<bool> agree;                // null when either side is missing
};

std::vector<HilbertRow> hilbert_report(const StackyCurveSpec& spec, std::int64_t max_n);

}  // namespace wildstack
