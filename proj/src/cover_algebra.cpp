#include "wildstack/cover_algebra.hpp"

#include <algorithm>
#include <sstream>

namespace wildstack {

AlgebraElem::AlgebraElem(const ASCoverAlgebra& algebra, std::vector<FpRat> coeffs)
    : algebra_(&algebra), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != static_cast<std::size_t>(algebra.p()))
        throw std::invalid_argument("AlgebraElem: coefficient vector must have length p");
}

bool AlgebraElem::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const FpRat& c) { return c.is_zero(); });
}

ASCoverAlgebra::ASCoverAlgebra(FpRat f, Place distinguished) : f_(std::move(f)), place_(distinguished) {
    require_prime(f_.modulus());
    if (place_.is_generic())
        throw std::invalid_argument("ASCoverAlgebra: distinguished place must carry a coordinate");
    if (f_.is_zero()) throw std::invalid_argument("ASCoverAlgebra: f must be nonzero");
    std::int64_t v = ord_at(f_, place_);
    if (v >= 0) throw std::invalid_argument("ASCoverAlgebra: f has no pole at the distinguished place");
    jump_ = -v;
    if (jump_ % p() == 0)
        throw std::invalid_argument("ASCoverAlgebra: pole order divisible by p (reduce f first)");
}

void ASCoverAlgebra::check_mine(const AlgebraElem& a) const {
    if (&a.algebra() != this) throw std::invalid_argument("AlgebraElem from a different algebra");
}

AlgebraElem ASCoverAlgebra::zero() const {
    return AlgebraElem(*this, std::vector<FpRat>(static_cast<std::size_t>(p()), FpRat::zero(p())));
}

AlgebraElem ASCoverAlgebra::one() const { return from_rat(FpRat::constant(FpElem{1, p()})); }

AlgebraElem ASCoverAlgebra::y() const { return monomial(FpRat::constant(FpElem{1, p()}), 1); }

AlgebraElem ASCoverAlgebra::from_rat(const FpRat& c) const { return monomial(c, 0); }

AlgebraElem ASCoverAlgebra::monomial(const FpRat& c, int k) const {
    if (k < 0 || k >= p()) throw std::invalid_argument("ASCoverAlgebra::monomial: need 0 <= k < p");
    std::vector<FpRat> coeffs(static_cast<std::size_t>(p()), FpRat::zero(p()));
    coeffs[static_cast<std::size_t>(k)] = c;
    return AlgebraElem(*this, std::move(coeffs));
}

AlgebraElem ASCoverAlgebra::add(const AlgebraElem& a, const AlgebraElem& b) const {
    check_mine(a);
    check_mine(b);
    std::vector<FpRat> out;
    out.reserve(a.coeffs().size());
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) out.push_back(a.coeffs()[i] + b.coeffs()[i]);
    return AlgebraElem(*this, std::move(out));
}

AlgebraElem ASCoverAlgebra::sub(const AlgebraElem& a, const AlgebraElem& b) const {
    check_mine(a);
    check_mine(b);
    std::vector<FpRat> out;
    out.reserve(a.coeffs().size());
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) out.push_back(a.coeffs()[i] - b.coeffs()[i]);
    return AlgebraElem(*this, std::move(out));
}

AlgebraElem ASCoverAlgebra::mul(const AlgebraElem& a, const AlgebraElem& b) const {
    check_mine(a);
    check_mine(b);
    const std::size_t n = static_cast<std::size_t>(p());
    std::vector<FpRat> conv(2 * n - 1, FpRat::zero(p()));
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs()[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b.coeffs()[j].is_zero()) continue;
            conv[i + j] = conv[i + j] + a.coeffs()[i] * b.coeffs()[j];
        }
    }
    // y^k = y^(k-p) (y + f) for k >= p; one descending pass suffices since
    // k - p + 1 <= p - 1 for k <= 2p - 2.
    for (std::size_t k = conv.size(); k-- > n;) {
        if (conv[k].is_zero()) continue;
        conv[k - n + 1] = conv[k - n + 1] + conv[k];
        conv[k - n] = conv[k - n] + conv[k] * f_;
        conv[k] = FpRat::zero(p());
    }
    conv.resize(n, FpRat::zero(p()));
    return AlgebraElem(*this, std::move(conv));
}

AlgebraElem ASCoverAlgebra::pow(const AlgebraElem& a, std::int64_t e) const {
    check_mine(a);
    if (e < 0) throw std::invalid_argument("ASCoverAlgebra::pow: negative exponent");
    AlgebraElem acc = one();
    AlgebraElem base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return acc;
}

AlgebraElem ASCoverAlgebra::galois_shift(const AlgebraElem& a) const {
    check_mine(a);
    const std::int64_t q = p();
    // Pascal's triangle mod p up to row p-1; (y+1)^i stays below degree p.
    std::vector<std::vector<std::int64_t>> binom(static_cast<std::size_t>(q));
    for (std::size_t i = 0; i < binom.size(); ++i) {
        binom[i].assign(i + 1, 1);
        for (std::size_t j = 1; j < i; ++j)
            binom[i][j] = (binom[i - 1][j - 1] + binom[i - 1][j]) % q;
    }
    std::vector<FpRat> out(static_cast<std::size_t>(q), FpRat::zero(q));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (a.coeffs()[i].is_zero()) continue;
        for (std::size_t j = 0; j <= i; ++j) {
            if (binom[i][j] == 0) continue;
            out[j] = out[j] + FpRat::constant(FpElem{binom[i][j], q}) * a.coeffs()[i];
        }
    }
    return AlgebraElem(*this, std::move(out));
}

std::int64_t ASCoverAlgebra::valuation(const AlgebraElem& a) const {
    check_mine(a);
    if (a.is_zero()) throw std::domain_error("valuation of zero element");
    bool found = false;
    std::int64_t best = 0;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i].is_zero()) continue;
        std::int64_t cand = p() * ord_at(a.coeffs()[i], place_) - jump_ * static_cast<std::int64_t>(i);
        if (!found || cand < best) {
            best = cand;
            found = true;
        }
    }
    return best;
}

EuclidPair euclid_pair(std::int64_t r, std::int64_t p) {
    require_prime(p);
    if (r <= 1 || r >= p) throw std::invalid_argument("euclid_pair: need 1 < r < p");
    std::int64_t c = mod_inv(r, p);
    return {c, (c * r - 1) / p};
}

namespace {

ASCoverAlgebra make_local_algebra(std::int64_t p, std::int64_t m, const FpPoly& g) {
    require_prime(p);
    if (m < 1) throw std::invalid_argument("jump must be >= 1");
    if (g.modulus() != p) throw std::invalid_argument("unit polynomial has wrong modulus");
    if (g.is_zero() || g.coeff_value(0) == 0)
        throw std::invalid_argument("g must be a unit at 0 (nonzero constant term)");
    FpRat f(g, FpPoly::monomial(p, static_cast<int>(m)));
    return ASCoverAlgebra(std::move(f), Place::finite(0, p));
}

}  // namespace

LocalCheck check_integral_identity(std::int64_t p, std::int64_t m, const FpPoly& g) {
    if ((m + 1) % p != 0)
        throw std::invalid_argument("check_integral_identity: requires m = -1 mod p");
    ASCoverAlgebra alg = make_local_algebra(p, m, g);
    const std::int64_t n = (m + 1) / p;

    FpRat xn = FpRat::from_poly(FpPoly::monomial(p, static_cast<int>(n)));
    AlgebraElem z = alg.monomial(xn, 1);
    AlgebraElem lhs = alg.sub(alg.pow(z, p),
                              alg.mul(z, alg.from_rat(pow(FpRat::variable(p), n * (p - 1)))));
    AlgebraElem rhs = alg.from_rat(FpRat::from_poly(FpPoly::monomial(p, 1) * g));
    AlgebraElem residual = alg.sub(lhs, rhs);
    if (!residual.is_zero()) {
        std::ostringstream os;
        os << "nonzero residual, y-coefficients:";
        for (const auto& c : residual.coeffs()) os << " " << to_expression(c);
        return {false, os.str()};
    }
    std::int64_t vz = alg.valuation(z);
    if (vz != 1) return {false, "v_L(z) = " + std::to_string(vz) + ", expected 1"};
    return {true, ""};
}

LocalCheck uniformizer_check(std::int64_t p, std::int64_t m, const FpPoly& g) {
    if (m % p == 0) throw std::invalid_argument("uniformizer_check: m divisible by p");
    ASCoverAlgebra alg = make_local_algebra(p, m, g);
    const std::int64_t n = m / p + 1;
    const std::int64_t r = n * p - m;  // 0 < r < p
    std::int64_t c = 1, d = 0;
    if (r > 1) {
        EuclidPair e = euclid_pair(r, p);
        c = e.c;
        d = e.d;
    }
    FpRat xpow = FpRat::from_poly(FpPoly::monomial(p, static_cast<int>(n * c - d)));
    AlgebraElem u = alg.monomial(xpow, static_cast<int>(c));
    std::int64_t vu = alg.valuation(u);
    if (vu != 1)
        return {false, "v_L(u) = " + std::to_string(vu) + " for u = x^" + std::to_string(n * c - d) +
                           " y^" + std::to_string(c) + ", expected 1"};
    return {true, ""};
}

}  // namespace wildstack
