#include "wildstack/fp.hpp"

#include <atomic>

namespace wildstack {

namespace {
constexpr std::int64_t kDefaultCap = 97;
constexpr std::int64_t kHardCap = 1'000'000;  // keeps p*p comfortably inside int64
std::atomic<std::int64_t> g_prime_cap{kDefaultCap};
}  // namespace

std::int64_t prime_cap() { return g_prime_cap.load(); }

void set_prime_cap(std::int64_t cap) {
    if (cap < 2) throw std::invalid_argument("prime cap must be at least 2");
    if (cap > kHardCap) throw std::invalid_argument("prime cap exceeds hard limit " + std::to_string(kHardCap));
    g_prime_cap.store(cap);
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void require_prime(std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (p > prime_cap())
        throw std::invalid_argument("prime " + std::to_string(p) + " exceeds cap " + std::to_string(prime_cap()));
}

std::int64_t mod_pow(std::int64_t a, std::int64_t e, std::int64_t p) {
    a = ((a % p) + p) % p;
    if (e < 0) throw std::invalid_argument("mod_pow: negative exponent");
    std::int64_t r = 1 % p;
    while (e > 0) {
        if (e & 1) r = (r * a) % p;
        a = (a * a) % p;
        e >>= 1;
    }
    return r;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
    a = ((a % p) + p) % p;
    if (a == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(p));
    // extended Euclid
    std::int64_t r0 = p, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    return ((t0 % p) + p) % p;
}

FpElem inv(const FpElem& a) { return FpElem{mod_inv(a.value, a.p), a.p}; }

FpElem pow(const FpElem& a, std::int64_t e) {
    if (e < 0) return pow(inv(a), -e);
    return FpElem{mod_pow(a.value, e, a.p), a.p};
}

}  // namespace wildstack
