// Acceptance suite: runs every criterion at its stated tolerance (all exact)
// and prints one PASS/FAIL line per criterion. Exit code is the number of
// failed criteria.

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "wildstack/json_io.hpp"
#include "wildstack/parser.hpp"

using namespace wildstack;

namespace {

constexpr std::array<std::int64_t, 6> kPrimes{2, 3, 5, 7, 11, 13};

int failures_total = 0;

void criterion(int number, const std::string& title, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    if (ok) {
        std::cout << "PASS  criterion " << number << ": " << title << "\n";
    } else {
        ++failures_total;
        std::cout << "FAIL  criterion " << number << ": " << title
                  << (detail.empty() ? "" : " -- " + detail) << "\n";
    }
}

FpRat random_split_rat(std::mt19937& rng, std::int64_t p, int max_factors, int max_mult) {
    std::uniform_int_distribution<std::int64_t> coeff(0, p - 1);
    std::uniform_int_distribution<int> count(0, max_factors);
    std::uniform_int_distribution<int> mult(1, max_mult);
    std::vector<std::int64_t> nc(static_cast<std::size_t>(count(rng)) + 1);
    for (auto& c : nc) c = coeff(rng);
    FpPoly num(p, std::move(nc));
    FpPoly den = FpPoly::constant(p, 1);
    int k = count(rng);
    for (int i = 0; i < k; ++i) den = den * pow(FpPoly::linear_root(FpElem(coeff(rng), p)), mult(rng));
    return FpRat(num, den);
}

FpPoly random_unit(std::mt19937& rng, std::int64_t p, int max_deg) {
    std::uniform_int_distribution<std::int64_t> coeff(0, p - 1);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::vector<std::int64_t> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coeff(rng);
    c[0] = 1 + coeff(rng) % (p - 1 > 0 ? p - 1 : 1);
    return FpPoly(p, std::move(c));
}

StackyCurveSpec wild_p1(std::int64_t p, std::int64_t m) {
    return StackyCurveSpec{p, 0, {StackyPoint{Place::infinity(), WildLocal{m}}}};
}

std::string run_cli(const std::string& args) {
    std::string cmd = std::string(WILDSTACK_CLI_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return "<popen failed>";
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    pclose(pipe);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool jump_extraction(std::string& detail) {
    for (std::int64_t m : {1, 2, 4, 5}) {
        auto j = jump_at(parse_rational_expr("1/x^" + std::to_string(m), 3), Place::finite(0, 3));
        if (!j || *j != m) {
            detail = "jump of 1/x^" + std::to_string(m);
            return false;
        }
    }
    auto j3 = jump_at(parse_rational_expr("1/x^3", 3), Place::finite(0, 3));
    if (!j3 || *j3 != 1) {
        detail = "jump of 1/x^3 should reduce to 1";
        return false;
    }
    return true;
}

bool elliptic_quotient(std::string& detail) {
    // y^2 = x^3 - x read as the Artin-Schreier cover z^3 - z = t^2 of the
    // y-line: branch datum is jump 2 at infinity
    BranchData bd = branch_data(parse_rational_expr("x^2", 3));
    if (bd.points.size() != 1 || !(bd.points[0].place == Place::infinity()) ||
        bd.points[0].jump != 2) {
        detail = "branch data of x^2 over F_3";
        return false;
    }
    if (cover_genus(bd, 0) != 1) {
        detail = "cover genus";
        return false;
    }
    if (stacky_genus(wild_p1(3, 2)) != 1) {
        detail = "stacky genus of the quotient";
        return false;
    }
    return true;
}

bool canonical_grid(std::string& detail) {
    for (std::int64_t p : kPrimes)
        for (std::int64_t m = 1; m <= 20; ++m) {
            if (m % p == 0) continue;
            StackyCurveSpec spec = wild_p1(p, m);
            QDivisor k = canonical_divisor(spec);
            auto view = stack_coefficient_view(k, spec);
            if (view.at(Place::infinity()) != (m + 1) * (p - 1)) {
                detail = "stack coefficient at p=" + std::to_string(p) + " m=" + std::to_string(m);
                return false;
            }
            Rational g = stacky_genus(spec);
            if (g != Rational((m + 1) * (p - 1), 2 * p) || degree(k) != 2 * g - 2) {
                detail = "genus identity at p=" + std::to_string(p) + " m=" + std::to_string(m);
                return false;
            }
        }
    return true;
}

bool hilbert_closed_form(std::string& detail) {
    long asserted = 0, logged = 0, disagreements = 0;
    for (std::int64_t p : kPrimes)
        for (std::int64_t m = 2; m <= 20; ++m) {
            if (m % p == 0) continue;
            StackyCurveSpec spec = wild_p1(p, m);
            QDivisor k = canonical_divisor(spec);
            for (std::int64_t n = 1; n <= 50; ++n) {
                H0Result r = h0(spec, Rational(n) * k);
                if (!r.is_exact()) {
                    detail = "h0 not exact on genus-0";
                    return false;
                }
                std::int64_t cf = closed_form_wild_p1(p, m, n);
                if ((n * (m + 1)) % p != 0) {
                    ++asserted;
                    if (*r.exact != cf) {
                        detail = "mismatch at p=" + std::to_string(p) + " m=" + std::to_string(m) +
                                 " n=" + std::to_string(n);
                        return false;
                    }
                } else {
                    ++logged;
                    if (*r.exact != cf) ++disagreements;
                }
            }
        }
    std::cout << "      [criterion 4] asserted " << asserted << " strata; logged " << logged
              << " p | n(m+1) strata with " << disagreements << " closed-form disagreements\n";
    return asserted > 0;
}

bool tame_regression(std::string& detail) {
    StackyCurveSpec g1{3, 1, {StackyPoint{Place::generic("Q"), TameLocal{2}}}};
    auto table = canonical_ring_table(g1, 20);
    std::vector<std::int64_t> head{1, 1, 1, 1, 2, 2, 3};
    for (std::size_t n = 0; n < table.size(); ++n) {
        std::int64_t expect = n < head.size() ? head[n] : static_cast<std::int64_t>(n / 2);
        if (!table[n].is_exact() || *table[n].exact != expect) {
            detail = "genus-1 order-2 table at n=" + std::to_string(n);
            return false;
        }
    }
    for (auto [a, b, p] : std::vector<std::array<std::int64_t, 3>>{{2, 3, 7}, {3, 5, 2}}) {
        StackyCurveSpec pab{p, 0,
                            {StackyPoint{Place::finite(0, p), TameLocal{a}},
                             StackyPoint{Place::infinity(), TameLocal{b}}}};
        auto t = canonical_ring_table(pab, 20);
        for (std::size_t n = 1; n < t.size(); ++n)
            if (!t[n].is_exact() || *t[n].exact != 0) {
                detail = "P(" + std::to_string(a) + "," + std::to_string(b) + ") at n=" +
                         std::to_string(n);
                return false;
            }
    }
    return true;
}

bool lemma_remark_verification(std::string& detail) {
    std::mt19937 rng(2024);
    for (std::int64_t p : kPrimes) {
        for (std::int64_t m = p - 1; m <= 40; m += p) {
            if (m < 1) continue;
            for (int t = 0; t < 10; ++t) {
                LocalCheck c = check_integral_identity(p, m, random_unit(rng, p, 4));
                if (!c.verified) {
                    detail = "integral identity p=" + std::to_string(p) + " m=" + std::to_string(m) +
                             ": " + c.detail;
                    return false;
                }
            }
        }
        for (std::int64_t m = 1; m <= 40; ++m) {
            if (m % p == 0) continue;
            LocalCheck c = uniformizer_check(p, m, random_unit(rng, p, 3));
            if (!c.verified) {
                detail = "uniformizer p=" + std::to_string(p) + " m=" + std::to_string(m) + ": " +
                         c.detail;
                return false;
            }
        }
    }
    return true;
}

bool property_suites(std::string& detail) {
    std::mt19937 rng(777);
    // phi-shift invariance of branch data, 500 cases per prime, with
    // soundness and idempotence of the reduction on every run
    for (std::int64_t p : {2, 3, 5, 7}) {
        for (int t = 0; t < 500; ++t) {
            FpRat f = random_split_rat(rng, p, 2, 3);
            FpRat h = random_split_rat(rng, p, 2, 2);
            BranchData a = branch_data(f);
            BranchData b = branch_data(f + artin_schreier_image(h));
            if (!(a.points == b.points)) {
                detail = "phi-shift invariance at p=" + std::to_string(p);
                return false;
            }
            ASReduction red = as_reduce(f);
            FpRat back =
                red.reduced + FpRat::constant(red.absorbed_constant) + artin_schreier_image(red.shift);
            if (!(back == f)) {
                detail = "reduction soundness";
                return false;
            }
            ASReduction again = as_reduce(red.reduced);
            if (!(again.reduced == red.reduced) || !again.shift.is_zero()) {
                detail = "reduction idempotence";
                return false;
            }
        }
    }
    // valuation additivity in cover algebras
    for (auto [p, m] : std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 3}, {3, 2}, {5, 4}, {7, 5}}) {
        ASCoverAlgebra alg(FpRat(FpPoly::constant(p, 1), FpPoly::monomial(p, static_cast<int>(m))),
                           Place::finite(0, p));
        std::uniform_int_distribution<std::int64_t> coeff(0, p - 1);
        std::uniform_int_distribution<int> small(0, 2);
        auto rand_rat = [&]() {
            std::vector<std::int64_t> nc(static_cast<std::size_t>(small(rng)) + 1);
            for (auto& c : nc) c = coeff(rng);
            return FpRat(FpPoly(p, std::move(nc)), FpPoly::monomial(p, small(rng)));
        };
        for (int t = 0; t < 250; ++t) {
            std::vector<FpRat> ca, cb;
            for (std::int64_t i = 0; i < p; ++i) {
                ca.push_back(small(rng) ? rand_rat() : FpRat::zero(p));
                cb.push_back(small(rng) ? rand_rat() : FpRat::zero(p));
            }
            AlgebraElem a(alg, std::move(ca)), b(alg, std::move(cb));
            if (a.is_zero() || b.is_zero()) continue;
            if (alg.valuation(alg.mul(a, b)) != alg.valuation(a) + alg.valuation(b)) {
                detail = "valuation additivity at p=" + std::to_string(p);
                return false;
            }
        }
    }
    // degree of canonical vs genus across >= 2000 random specs
    std::uniform_int_distribution<std::int64_t> genus(0, 3);
    std::uniform_int_distribution<std::int64_t> rdist(2, 12);
    std::uniform_int_distribution<std::int64_t> mdist(1, 20);
    std::uniform_int_distribution<int> npts(0, 4);
    std::uniform_int_distribution<int> flip(0, 1);
    for (int t = 0; t < 2200; ++t) {
        std::int64_t p = kPrimes[static_cast<std::size_t>(t) % kPrimes.size()];
        StackyCurveSpec spec{p, genus(rng), {}};
        int n = npts(rng);
        for (int i = 0; i < n; ++i) {
            Place pl = Place::generic("Q" + std::to_string(i));
            if (flip(rng)) {
                std::int64_t m = mdist(rng);
                if (m % p == 0) ++m;
                spec.points.push_back({pl, WildLocal{m}});
            } else {
                std::int64_t r = rdist(rng);
                if (r % p == 0) ++r;
                spec.points.push_back({pl, TameLocal{r}});
            }
        }
        if (degree(canonical_divisor(spec)) != 2 * stacky_genus(spec) - 2) {
            detail = "deg K vs genus at trial " + std::to_string(t);
            return false;
        }
    }
    return true;
}

bool presentation_round_trip(std::string& detail) {
    std::mt19937 rng(888);
    const std::array<std::int64_t, 4> primes{2, 3, 5, 7};
    std::uniform_int_distribution<int> npts(1, 4);
    std::uniform_int_distribution<std::int64_t> mdist(1, 10);
    for (int t = 0; t < 200; ++t) {
        std::int64_t p = primes[static_cast<std::size_t>(t) % primes.size()];
        StackyCurveSpec spec{p, 0, {}};
        std::vector<Place> places{Place::infinity()};
        for (std::int64_t a = 0; a < p; ++a) places.push_back(Place::finite(a, p));
        std::shuffle(places.begin(), places.end(), rng);
        int n = npts(rng);
        for (int i = 0; i < n && i < static_cast<int>(places.size()); ++i) {
            std::int64_t m = mdist(rng);
            if (m % p == 0) ++m;
            spec.points.push_back({places[static_cast<std::size_t>(i)], WildLocal{m}});
        }
        PresentationReport rep = global_presentation_p1(spec);
        if (rep.verdict != Verdict::Presentable || rep.wild.size() != spec.points.size()) {
            detail = "presentation not emitted";
            return false;
        }
        std::vector<BranchPoint> folded;
        for (const auto& d : rep.wild)
            for (const auto& bp : branch_data(d.f).points) folded.push_back(bp);
        auto key = [](const BranchPoint& a, const BranchPoint& b) {
            if (!(a.place == b.place)) return a.place < b.place;
            return a.jump < b.jump;
        };
        std::sort(folded.begin(), folded.end(), key);
        std::vector<BranchPoint> expect;
        for (const auto& pt : spec.points) expect.push_back({pt.place, pt.jump()});
        std::sort(expect.begin(), expect.end(), key);
        if (!(folded == expect)) {
            detail = "fold mismatch at trial " + std::to_string(t);
            return false;
        }
    }
    if (obstruction_single_wild_point(1, 1, 3).verdict != Verdict::Obstructed) {
        detail = "(g=1, m=1) should be obstructed";
        return false;
    }
    for (std::int64_t m = 2; m <= 20; ++m) {
        if (m % 3 == 0) continue;
        if (obstruction_single_wild_point(1, m, 3).verdict != Verdict::Presentable) {
            detail = "(g=1, m=" + std::to_string(m) + ") should be presentable";
            return false;
        }
    }
    return true;
}

bool cli_goldens(std::string& detail) {
    const std::string data = WILDSTACK_TEST_DATA;
    struct Case {
        std::string args;
        std::string golden;
    };
    std::vector<Case> cases{
        {"branch --prime 3 '1/x^3' --json", "branch_p3_inv_x3.json"},
        {"genus --spec " + data + "/fixtures/elliptic3.json --json", "genus_elliptic3.json"},
        {"hilbert --spec " + data + "/fixtures/tame_g1_r2.json --max-n 6 --json",
         "hilbert_tame_g1_r2.jsonl"},
    };
    for (const auto& c : cases) {
        std::string out = run_cli(c.args);
        std::string want = read_file(data + "/golden/" + c.golden);
        if (want.empty() || out != want) {
            detail = "golden mismatch for: " + c.args;
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    criterion(1, "jump extraction for f = 1/x^m over F_3", jump_extraction);
    criterion(2, "char-3 elliptic quotient: jump 2 at infinity, genus 1 twice", elliptic_quotient);
    criterion(3, "canonical divisor grid: stack coefficient (m+1)(p-1) and deg K = 2g-2",
              canonical_grid);
    criterion(4, "wild-P^1 Hilbert series matches the closed form off the p|n(m+1) stratum",
              hilbert_closed_form);
    criterion(5, "tame regressions: genus-1 order-2 table and hyperbolic P(a,b)", tame_regression);
    criterion(6, "integral-equation and uniformizer verification across the (p,m) grid",
              lemma_remark_verification);
    criterion(7, "property suites: shift invariance, soundness, valuations, deg K = 2g-2",
              property_suites);
    criterion(8, "presentation round-trip on 200 random wild specs and the genus-1 obstruction",
              presentation_round_trip);
    criterion(9, "CLI golden files are byte-identical", cli_goldens);
    if (failures_total == 0)
        std::cout << "all acceptance criteria pass\n";
    else
        std::cout << failures_total << " criteria failed\n";
    return failures_total;
}
