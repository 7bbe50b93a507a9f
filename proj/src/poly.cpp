#include "wildstack/poly.hpp"

#include <algorithm>
#include <sstream>

namespace wildstack {

FpPoly::FpPoly(std::int64_t p, std::vector<std::int64_t> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c = ((c % p_) + p_) % p_;
    trim();
}

void FpPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FpPoly FpPoly::constant(const FpElem& c) { return FpPoly(c.p, {c.value}); }

FpPoly FpPoly::constant(std::int64_t p, std::int64_t c) { return FpPoly(p, {c}); }

FpPoly FpPoly::monomial(std::int64_t p, int degree, std::int64_t c) {
    if (degree < 0) throw std::invalid_argument("monomial: negative degree");
    std::vector<std::int64_t> v(static_cast<std::size_t>(degree) + 1, 0);
    v.back() = c;
    return FpPoly(p, std::move(v));
}

FpPoly FpPoly::linear_root(const FpElem& alpha) {
    return FpPoly(alpha.p, {alpha.p - alpha.value, 1});
}

FpElem FpPoly::coeff(int i) const { return FpElem{coeff_value(i), p_}; }

FpElem FpPoly::leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return FpElem{coeffs_.back(), p_};
}

FpElem FpPoly::eval(const FpElem& x) const {
    if (x.p != p_) throw std::invalid_argument("eval: mixed moduli");
    std::int64_t acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = (acc * x.value + *it) % p_;
    return FpElem{acc, p_};
}

namespace {
void check_same(const FpPoly& a, const FpPoly& b) {
    if (a.modulus() != b.modulus()) throw std::invalid_argument("FpPoly: mixed moduli");
}
}  // namespace

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
    check_same(a, b);
    std::vector<std::int64_t> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::int64_t s = (i < a.coeffs_.size() ? a.coeffs_[i] : 0) + (i < b.coeffs_.size() ? b.coeffs_[i] : 0);
        if (s >= a.p_) s -= a.p_;
        out[i] = s;
    }
    FpPoly r(a.p_);
    r.coeffs_ = std::move(out);
    r.trim();
    return r;
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
    check_same(a, b);
    std::vector<std::int64_t> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::int64_t s = (i < a.coeffs_.size() ? a.coeffs_[i] : 0) - (i < b.coeffs_.size() ? b.coeffs_[i] : 0);
        if (s < 0) s += a.p_;
        out[i] = s;
    }
    FpPoly r(a.p_);
    r.coeffs_ = std::move(out);
    r.trim();
    return r;
}

FpPoly operator-(const FpPoly& a) {
    FpPoly r(a.modulus());
    r.coeffs_ = a.coeffs_;
    for (auto& c : r.coeffs_)
        if (c != 0) c = a.p_ - c;
    return r;
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
    check_same(a, b);
    if (a.is_zero() || b.is_zero()) return FpPoly::zero(a.p_);
    std::vector<std::int64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] = (out[i + j] + a.coeffs_[i] * b.coeffs_[j]) % a.p_;
    }
    FpPoly r(a.p_);
    r.coeffs_ = std::move(out);
    r.trim();
    return r;
}

FpPoly operator*(const FpElem& c, const FpPoly& a) {
    if (c.p != a.modulus()) throw std::invalid_argument("FpPoly: mixed moduli");
    FpPoly r(a.modulus());
    r.coeffs_ = a.coeffs_;
    for (auto& x : r.coeffs_) x = (x * c.value) % c.p;
    r.trim();
    return r;
}

DivModResult divmod(const FpPoly& f, const FpPoly& g) {
    if (f.modulus() != g.modulus()) throw std::invalid_argument("divmod: mixed moduli");
    if (g.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
    const std::int64_t p = f.modulus();
    if (f.is_zero() || f.degree() < g.degree()) return {FpPoly::zero(p), f};

    std::vector<std::int64_t> rem(f.coeffs());
    const int dg = g.degree();
    const std::int64_t lead_inv = mod_inv(g.coeffs().back(), p);
    std::vector<std::int64_t> quot(rem.size() - static_cast<std::size_t>(dg), 0);
    for (int i = static_cast<int>(rem.size()) - 1; i >= dg; --i) {
        if (rem[static_cast<std::size_t>(i)] == 0) continue;
        std::int64_t factor = (rem[static_cast<std::size_t>(i)] * lead_inv) % p;
        quot[static_cast<std::size_t>(i - dg)] = factor;
        for (int j = 0; j <= dg; ++j) {
            auto& r = rem[static_cast<std::size_t>(i - dg + j)];
            r = ((r - factor * g.coeff_value(j)) % p + p) % p;
        }
    }
    return {FpPoly(p, std::move(quot)), FpPoly(p, std::move(rem))};
}

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
    FpPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        FpPoly r2 = divmod(r0, r1).remainder;
        r0 = r1;
        r1 = r2;
    }
    if (r0.is_zero()) return r0;
    return inv(r0.leading()) * r0;
}

ExtendedGcd extended_gcd(const FpPoly& a, const FpPoly& b) {
    const std::int64_t p = a.modulus();
    FpPoly r0 = a, r1 = b;
    FpPoly u0 = FpPoly::constant(p, 1), u1 = FpPoly::zero(p);
    FpPoly v0 = FpPoly::zero(p), v1 = FpPoly::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        FpPoly u2 = u0 - q * u1;
        FpPoly v2 = v0 - q * v1;
        r0 = r1; r1 = r2;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    if (r0.is_zero()) return {r0, u0, v0};
    FpElem c = inv(r0.leading());
    return {c * r0, c * u0, c * v0};
}

FpPoly derivative(const FpPoly& f) {
    if (f.degree() <= 0) return FpPoly::zero(f.modulus());
    const std::int64_t p = f.modulus();
    std::vector<std::int64_t> out(static_cast<std::size_t>(f.degree()), 0);
    for (int i = 1; i <= f.degree(); ++i)
        out[static_cast<std::size_t>(i - 1)] = (f.coeff_value(i) * (i % p)) % p;
    return FpPoly(p, std::move(out));
}

FpPoly pow(const FpPoly& base, std::int64_t e) {
    if (e < 0) throw std::invalid_argument("FpPoly pow: negative exponent");
    FpPoly acc = FpPoly::constant(base.modulus(), 1);
    FpPoly b = base;
    while (e > 0) {
        if (e & 1) acc = acc * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return acc;
}

int root_multiplicity(const FpPoly& f, const FpElem& alpha) {
    if (f.is_zero()) throw std::domain_error("root_multiplicity of zero polynomial");
    if (f.modulus() != alpha.p) throw std::invalid_argument("root_multiplicity: mixed moduli");
    const std::int64_t p = f.modulus();
    int mult = 0;
    std::vector<std::int64_t> cur = f.coeffs();
    while (true) {
        // synthetic division by (x - alpha)
        std::int64_t acc = 0;
        std::vector<std::int64_t> q(cur.size() > 1 ? cur.size() - 1 : 0, 0);
        for (int i = static_cast<int>(cur.size()) - 1; i >= 0; --i) {
            acc = (acc * alpha.value + cur[static_cast<std::size_t>(i)]) % p;
            if (i > 0) q[static_cast<std::size_t>(i - 1)] = acc;
        }
        if (acc != 0) return mult;
        ++mult;
        cur = std::move(q);
        if (cur.empty()) return mult;  // fully divided (f was a power of the factor)
    }
}

FpPoly taylor_shift(const FpPoly& f, const FpElem& alpha) {
    if (f.modulus() != alpha.p) throw std::invalid_argument("taylor_shift: mixed moduli");
    const std::int64_t p = f.modulus();
    FpPoly acc = FpPoly::zero(p);
    FpPoly shift(p, {alpha.value, 1});  // x + alpha
    for (int i = f.degree(); i >= 0; --i) acc = acc * shift + FpPoly::constant(p, f.coeff_value(i));
    return acc;
}

FpPoly series_inverse(const FpPoly& g, int k) {
    if (k <= 0) throw std::invalid_argument("series_inverse: k must be positive");
    if (g.coeff_value(0) == 0) throw std::domain_error("series_inverse: constant term is zero");
    const std::int64_t p = g.modulus();
    const std::int64_t c0_inv = mod_inv(g.coeff_value(0), p);
    std::vector<std::int64_t> out(static_cast<std::size_t>(k), 0);
    out[0] = c0_inv;
    for (int j = 1; j < k; ++j) {
        std::int64_t s = 0;
        for (int i = 1; i <= j; ++i) s = (s + g.coeff_value(i) * out[static_cast<std::size_t>(j - i)]) % p;
        out[static_cast<std::size_t>(j)] = ((-s % p + p) * c0_inv) % p;
    }
    return FpPoly(p, std::move(out));
}

std::string to_string(const FpPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        std::int64_t c = f.coeff_value(i);
        if (c == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace wildstack
