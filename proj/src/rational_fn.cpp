#include "wildstack/rational_fn.hpp"

#include <sstream>

namespace wildstack {

FpRat::FpRat(FpPoly num, FpPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.modulus() != den_.modulus()) throw std::invalid_argument("FpRat: mixed moduli");
    if (den_.is_zero()) throw std::domain_error("FpRat: zero denominator");
    if (num_.is_zero()) {
        den_ = FpPoly::constant(num_.modulus(), 1);
        return;
    }
    FpPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = divmod(num_, g).quotient;
        den_ = divmod(den_, g).quotient;
    }
    if (!den_.is_monic()) {
        FpElem c = inv(den_.leading());
        num_ = c * num_;
        den_ = c * den_;
    }
}

FpRat operator+(const FpRat& a, const FpRat& b) {
    return FpRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

FpRat operator-(const FpRat& a, const FpRat& b) {
    return FpRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

FpRat operator-(const FpRat& a) { return FpRat(-a.num_, a.den_); }

FpRat operator*(const FpRat& a, const FpRat& b) { return FpRat(a.num_ * b.num_, a.den_ * b.den_); }

FpRat operator/(const FpRat& a, const FpRat& b) {
    if (b.is_zero()) throw std::domain_error("FpRat: division by zero");
    return FpRat(a.num_ * b.den_, a.den_ * b.num_);
}

FpRat pow(const FpRat& base, std::int64_t e) {
    if (e < 0) {
        if (base.is_zero()) throw std::domain_error("FpRat: negative power of zero");
        return pow(FpRat(base.den(), base.num()), -e);
    }
    // num and den are coprime, so the powers need no renormalization.
    return FpRat(pow(base.num(), e), pow(base.den(), e));
}

std::int64_t ord_at(const FpRat& f, const Place& place) {
    if (f.is_zero()) throw std::domain_error("ord_at: valuation of zero is infinite");
    switch (place.kind) {
        case Place::Kind::Finite:
            return root_multiplicity(f.num(), place.alpha) - root_multiplicity(f.den(), place.alpha);
        case Place::Kind::Infinity:
            return f.den().degree() - f.num().degree();
        case Place::Kind::Generic:
            throw std::invalid_argument("ord_at: generic place carries no coordinate");
    }
    throw std::logic_error("ord_at: unreachable");
}

FpRat artin_schreier_image(const FpRat& f) { return pow(f, f.modulus()) - f; }

std::string to_string(const Place& pl) {
    switch (pl.kind) {
        case Place::Kind::Finite: return std::to_string(pl.alpha.value);
        case Place::Kind::Infinity: return "infinity";
        case Place::Kind::Generic: return pl.label;
    }
    return "";
}

namespace {
// True when s is safe as a denominator without parentheses: "x", "x^k", "c".
bool atom_like(const std::string& s) {
    if (s.empty()) return false;
    if (s.find_first_not_of("0123456789") == std::string::npos) return true;
    if (s[0] != 'x') return false;
    if (s.size() == 1) return true;
    if (s[1] != '^') return false;
    return s.find_first_not_of("0123456789", 2) == std::string::npos && s.size() > 2;
}
}  // namespace

std::string to_expression(const FpRat& f) {
    std::string n = to_string(f.num());
    if (f.is_poly()) return n;
    std::string d = to_string(f.den());
    std::ostringstream os;
    if (n.find('+') != std::string::npos)
        os << "(" << n << ")";
    else
        os << n;
    os << "/";
    if (atom_like(d))
        os << d;
    else
        os << "(" << d << ")";
    return os.str();
}

}  // namespace wildstack
