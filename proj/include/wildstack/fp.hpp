#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wildstack {

// Primes are kept at desk scale: arithmetic is schoolbook and primality is
// checked by trial division. The cap is configurable (WILDSTACK_MAX_PRIME in
// the CLI) but hard-limited so that p*p never overflows int64.
std::int64_t prime_cap();
void set_prime_cap(std::int64_t cap);

bool is_prime(std::int64_t n);

// Throws std::invalid_argument if p is not a prime within the cap.
void require_prime(std::int64_t p);

// Residue in [0, p). Every element carries its modulus; mixing moduli is a
// programming error and throws.
struct FpElem {
    std::int64_t value = 0;
    std::int64_t p = 2;

    FpElem() = default;
    FpElem(std::int64_t v, std::int64_t prime) : value(((v % prime) + prime) % prime), p(prime) {}

    bool is_zero() const { return value == 0; }

    friend bool operator==(const FpElem& a, const FpElem& b) {
        return a.p == b.p && a.value == b.value;
    }
    friend bool operator!=(const FpElem& a, const FpElem& b) { return !(a == b); }
};

namespace detail {
inline void check_same_field(const FpElem& a, const FpElem& b) {
    if (a.p != b.p) throw std::invalid_argument("FpElem: mixed moduli " + std::to_string(a.p) + " and " + std::to_string(b.p));
}
}  // namespace detail

inline FpElem operator+(const FpElem& a, const FpElem& b) {
    detail::check_same_field(a, b);
    std::int64_t s = a.value + b.value;
    if (s >= a.p) s -= a.p;
    return FpElem{s, a.p};
}

inline FpElem operator-(const FpElem& a, const FpElem& b) {
    detail::check_same_field(a, b);
    std::int64_t s = a.value - b.value;
    if (s < 0) s += a.p;
    return FpElem{s, a.p};
}

inline FpElem operator-(const FpElem& a) {
    return FpElem{a.value == 0 ? 0 : a.p - a.value, a.p};
}

inline FpElem operator*(const FpElem& a, const FpElem& b) {
    detail::check_same_field(a, b);
    return FpElem{(a.value * b.value) % a.p, a.p};
}

FpElem inv(const FpElem& a);  // throws std::domain_error on zero
FpElem pow(const FpElem& a, std::int64_t e);

inline FpElem operator/(const FpElem& a, const FpElem& b) { return a * inv(b); }

// Raw-residue helpers used by the polynomial kernels.
std::int64_t mod_inv(std::int64_t a, std::int64_t p);
std::int64_t mod_pow(std::int64_t a, std::int64_t e, std::int64_t p);

}  // namespace wildstack
