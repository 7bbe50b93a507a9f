// wildstack: exact invariants of wildly ramified stacky curves over F_p.
//
// Subcommands: reduce, branch, cover-genus, canonical, genus, hilbert,
// present, verify-local, algebra-check. All output is exact (integers and
// num/den strings); --json switches to the machine schemas.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <random>

#include "wildstack/json_io.hpp"
#include "wildstack/parser.hpp"

namespace ws = wildstack;

namespace {

struct Options {
    std::int64_t prime = 0;
    std::string expr;
    std::string spec_file;
    std::string unit_g = "1";
    std::int64_t jump = 0;
    std::int64_t max_n = 10;
    bool json_out = false;
};

void apply_prime_cap_env() {
    if (const char* cap = std::getenv("WILDSTACK_MAX_PRIME")) {
        try {
            ws::set_prime_cap(std::stoll(cap));
        } catch (const std::exception& e) {
            throw std::invalid_argument(std::string("WILDSTACK_MAX_PRIME: ") + e.what());
        }
    }
}

std::string human_rat(const ws::Rational& q) { return ws::to_string(q); }

std::string human_place(const ws::Place& pl) { return ws::to_string(pl); }

int run_reduce(const Options& opt) {
    ws::FpRat f = ws::parse_rational_expr(opt.expr, opt.prime);
    ws::ASReduction red = ws::as_reduce(f);
    if (opt.json_out) {
        std::cout << ws::reduce_report(red, opt.prime).dump() << "\n";
    } else {
        std::cout << "f_red = " << ws::to_expression(red.reduced) << "\n";
        std::cout << "shift = " << ws::to_expression(red.shift) << "\n";
        if (!red.absorbed_constant.is_zero())
            std::cout << "absorbed constant = " << red.absorbed_constant.value << "\n";
    }
    return 0;
}

int run_branch(const Options& opt) {
    ws::FpRat f = ws::parse_rational_expr(opt.expr, opt.prime);
    ws::BranchData bd = ws::branch_data(f);
    if (opt.json_out) {
        std::cout << ws::branch_report(bd).dump() << "\n";
        return 0;
    }
    if (bd.points.empty()) {
        std::cout << (bd.geometrically_trivial ? "trivial (no branch points)" : "unramified") << "\n";
        return 0;
    }
    for (const auto& pt : bd.points)
        std::cout << "{place: " << human_place(pt.place) << ", jump: " << pt.jump << "}\n";
    return 0;
}

int run_cover_genus(const Options& opt) {
    ws::FpRat f = ws::parse_rational_expr(opt.expr, opt.prime);
    ws::BranchData bd = ws::branch_data(f);
    std::int64_t g = ws::cover_genus(bd, 0);
    if (opt.json_out)
        std::cout << ws::cover_genus_report(bd, 0, g).dump() << "\n";
    else
        std::cout << g << "\n";
    return 0;
}

int run_canonical(const Options& opt) {
    ws::StackyCurveSpec spec = ws::load_spec_file(opt.spec_file);
    ws::QDivisor k = ws::canonical_divisor(spec);
    if (opt.json_out) {
        std::cout << ws::qdivisor_to_json(k).dump() << "\n";
        return 0;
    }
    if (k.is_zero()) {
        std::cout << "0\n";
        return 0;
    }
    bool first = true;
    for (const auto& [pl, c] : k.coeffs()) {
        if (!first) std::cout << " + ";
        first = false;
        std::cout << "(" << human_rat(c) << ")[" << human_place(pl) << "]";
    }
    std::cout << "\n";
    return 0;
}

int run_genus(const Options& opt) {
    ws::StackyCurveSpec spec = ws::load_spec_file(opt.spec_file);
    if (opt.json_out)
        std::cout << ws::genus_report(spec).dump() << "\n";
    else
        std::cout << human_rat(ws::stacky_genus(spec)) << "\n";
    return 0;
}

int run_hilbert(const Options& opt) {
    ws::StackyCurveSpec spec = ws::load_spec_file(opt.spec_file);
    auto rows = ws::hilbert_report(spec, opt.max_n);
    if (opt.json_out) {
        for (const auto& row : rows) std::cout << ws::hilbert_row_json(row).dump() << "\n";
        return 0;
    }
    bool first = true;
    for (const auto& row : rows) {
        if (!first) std::cout << " ";
        first = false;
        if (row.h0.is_exact())
            std::cout << *row.h0.exact;
        else
            std::cout << "?";
    }
    std::cout << "\n";
    return 0;
}

int run_present(const Options& opt) {
    ws::StackyCurveSpec spec = ws::load_spec_file(opt.spec_file);
    ws::PresentationReport report;
    if (spec.coarse_genus == 0) {
        report = ws::global_presentation_p1(spec);
    } else if (spec.points.size() == 1 && spec.points[0].is_wild()) {
        report = ws::obstruction_single_wild_point(spec.coarse_genus, spec.points[0].jump(), spec.p);
    } else {
        report = {ws::Verdict::Indeterminate, {}, {},
                  "only the single-wild-point obstruction is decided on positive-genus coarse curves"};
    }
    if (opt.json_out) {
        std::cout << ws::presentation_report_json(report).dump() << "\n";
        return 0;
    }
    switch (report.verdict) {
        case ws::Verdict::Presentable:
            std::cout << "presentable\n";
            for (const auto& d : report.wild)
                std::cout << "  wild: place=" << human_place(d.divisor.coeffs().begin()->first)
                          << " m=" << d.jump << " f=" << ws::to_expression(d.f) << "\n";
            for (const auto& t : report.tame)
                std::cout << "  tame: place=" << human_place(t.place) << " r=" << t.order << "\n";
            break;
        case ws::Verdict::Obstructed:
            std::cout << "obstructed: " << report.reason << "\n";
            break;
        case ws::Verdict::Indeterminate:
            std::cout << "indeterminate: " << report.reason << "\n";
            break;
    }
    return 0;
}

int run_verify_local(const Options& opt) {
    ws::FpRat g_rat = ws::parse_rational_expr(opt.unit_g, opt.prime);
    if (!g_rat.is_poly())
        throw std::invalid_argument("--g must be a polynomial (unit at 0)");
    ws::FpPoly g = g_rat.num();
    std::optional<ws::LocalCheck> identity;
    if ((opt.jump + 1) % opt.prime == 0)
        identity = ws::check_integral_identity(opt.prime, opt.jump, g);
    ws::LocalCheck uni = ws::uniformizer_check(opt.prime, opt.jump, g);
    if (opt.json_out) {
        std::cout << ws::verify_local_report(opt.prime, opt.jump, g, identity, uni).dump() << "\n";
    } else {
        if (identity)
            std::cout << "integral identity: " << (identity->verified ? "verified" : "FAILED " + identity->detail)
                      << "\n";
        else
            std::cout << "integral identity: not applicable (m != -1 mod p)\n";
        std::cout << "uniformizer: " << (uni.verified ? "verified" : "FAILED " + uni.detail) << "\n";
    }
    bool ok = uni.verified && (!identity || identity->verified);
    return ok ? 0 : 1;
}

// Randomized ring/automorphism/valuation properties at one (p, m).
int run_algebra_check(const Options& opt) {
    const std::int64_t p = opt.prime, m = opt.jump;
    ws::require_prime(p);
    if (m < 1 || m % p == 0) throw std::invalid_argument("algebra-check: jump must be >= 1, coprime to p");

    std::mt19937 rng(12345);
    auto rand_elem = [&](std::int64_t mod) { return std::uniform_int_distribution<std::int64_t>(0, mod - 1)(rng); };
    auto rand_poly = [&](int maxdeg) {
        std::vector<std::int64_t> c(static_cast<std::size_t>(rand_elem(maxdeg + 1)) + 1);
        for (auto& x : c) x = rand_elem(p);
        return ws::FpPoly(p, std::move(c));
    };
    auto rand_rat = [&]() {
        ws::FpPoly den = ws::FpPoly::monomial(p, static_cast<int>(rand_elem(3)));
        return ws::FpRat(rand_poly(3), den);
    };

    ws::FpPoly g = rand_poly(3);
    if (g.is_zero() || g.coeff_value(0) == 0) g = g + ws::FpPoly::constant(p, 1);
    ws::ASCoverAlgebra alg(ws::FpRat(g, ws::FpPoly::monomial(p, static_cast<int>(m))),
                           ws::Place::finite(0, p));
    auto rand_alg = [&]() {
        std::vector<ws::FpRat> coeffs;
        for (std::int64_t i = 0; i < p; ++i)
            coeffs.push_back(rand_elem(2) ? rand_rat() : ws::FpRat::zero(p));
        return ws::AlgebraElem(alg, std::move(coeffs));
    };

    const int trials = 200;
    int failures = 0;
    auto expect = [&](bool ok, const char* what) {
        if (!ok) {
            ++failures;
            std::cerr << "FAIL: " << what << "\n";
        }
    };
    for (int t = 0; t < trials; ++t) {
        ws::AlgebraElem a = rand_alg(), b = rand_alg(), c = rand_alg();
        expect(alg.mul(a, alg.add(b, c)) == alg.add(alg.mul(a, b), alg.mul(a, c)), "distributivity");
        expect(alg.mul(alg.mul(a, b), c) == alg.mul(a, alg.mul(b, c)), "associativity");
        expect(alg.mul(a, b) == alg.mul(b, a), "commutativity");
        expect(alg.galois_shift(alg.mul(a, b)) == alg.mul(alg.galois_shift(a), alg.galois_shift(b)),
               "shift is multiplicative");
        ws::AlgebraElem s = a;
        for (std::int64_t i = 0; i < p; ++i) s = alg.galois_shift(s);
        expect(s == a, "shift has order p");
        if (!a.is_zero() && !b.is_zero()) {
            expect(alg.valuation(alg.mul(a, b)) == alg.valuation(a) + alg.valuation(b),
                   "valuation is multiplicative");
            ws::AlgebraElem sum = alg.add(a, b);
            if (!sum.is_zero()) {
                std::int64_t va = alg.valuation(a), vb = alg.valuation(b);
                std::int64_t vs = alg.valuation(sum);
                expect(vs >= std::min(va, vb), "ultrametric inequality");
                if (va != vb) expect(vs == std::min(va, vb), "ultrametric equality");
            }
        }
    }
    if (opt.json_out) {
        ws::json j;
        j["p"] = p;
        j["jump"] = m;
        j["trials"] = trials;
        j["failures"] = failures;
        j["passed"] = failures == 0;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << (failures == 0 ? "all properties hold" : "FAILURES: " + std::to_string(failures))
                  << " (" << trials << " random trials at p=" << p << ", m=" << m << ")\n";
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of wildly ramified stacky curves over F_p"};
    app.require_subcommand(1);

    Options opt;
    auto add_prime = [&](CLI::App* cmd) {
        cmd->add_option("--prime", opt.prime, "characteristic p (prime)")->required();
    };
    auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", opt.json_out, "machine-readable output"); };
    auto add_expr = [&](CLI::App* cmd) {
        cmd->add_option("expr", opt.expr, "rational function in x")->required();
    };
    auto add_spec = [&](CLI::App* cmd) {
        cmd->add_option("--spec", opt.spec_file, "stacky curve spec JSON file")->required();
    };

    CLI::App* reduce = app.add_subcommand("reduce", "Artin-Schreier reduction of f");
    add_prime(reduce); add_expr(reduce); add_json(reduce);
    CLI::App* branch = app.add_subcommand("branch", "branch places and ramification jumps of y^p-y=f");
    add_prime(branch); add_expr(branch); add_json(branch);
    CLI::App* cover = app.add_subcommand("cover-genus", "genus of the covering curve y^p-y=f");
    add_prime(cover); add_expr(cover); add_json(cover);
    CLI::App* canonical = app.add_subcommand("canonical", "canonical divisor of a stacky curve");
    add_spec(canonical); add_json(canonical);
    CLI::App* genus = app.add_subcommand("genus", "stacky genus");
    add_spec(genus); add_json(genus);
    CLI::App* hilbert = app.add_subcommand("hilbert", "dimensions h^0(nK) for n = 0..N");
    add_spec(hilbert); add_json(hilbert);
    hilbert->add_option("--max-n", opt.max_n, "largest n (default 10)");
    CLI::App* present = app.add_subcommand("present", "global Artin-Schreier presentation or obstruction");
    add_spec(present); add_json(present);
    CLI::App* verify = app.add_subcommand("verify-local", "verify local integral equation and uniformizer");
    add_prime(verify); add_json(verify);
    verify->add_option("--jump", opt.jump, "ramification jump m")->required();
    verify->add_option("--g", opt.unit_g, "unit polynomial g (default 1)");
    CLI::App* algcheck = app.add_subcommand("algebra-check", "randomized cover-algebra property suite");
    add_prime(algcheck); add_json(algcheck);
    algcheck->add_option("--jump", opt.jump, "ramification jump m")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        apply_prime_cap_env();
        if (reduce->parsed()) return run_reduce(opt);
        if (branch->parsed()) return run_branch(opt);
        if (cover->parsed()) return run_cover_genus(opt);
        if (canonical->parsed()) return run_canonical(opt);
        if (genus->parsed()) return run_genus(opt);
        if (hilbert->parsed()) return run_hilbert(opt);
        if (present->parsed()) return run_present(opt);
        if (verify->parsed()) return run_verify_local(opt);
        if (algcheck->parsed()) return run_algebra_check(opt);
        std::cerr << "no subcommand\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        // internal invariant failures; should never happen
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
