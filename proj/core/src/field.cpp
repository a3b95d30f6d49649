#include "agh/field.hpp"

namespace agh {

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((__uint128_t)a * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

// Deterministic Miller-Rabin; this witness set is exact for all n < 3.3e24.
bool FieldPrime::isPrime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

FieldPrime::FieldPrime(std::uint64_t p) {
    if (p < 2 || p > 0x7fffffffULL)
        throwValidation("BadPrime", "field modulus must lie in [2, 2^31-1]");
    if (!isPrime(p))
        throwValidation("BadPrime", "field modulus " + std::to_string(p) + " is not prime");
    p_ = static_cast<std::uint32_t>(p);
}

std::uint32_t FieldPrime::add(std::uint32_t a, std::uint32_t b) const {
    check(a); check(b);
    std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
}

std::uint32_t FieldPrime::sub(std::uint32_t a, std::uint32_t b) const {
    check(a); check(b);
    return a >= b ? a - b : static_cast<std::uint32_t>(a + static_cast<std::uint64_t>(p_) - b);
}

std::uint32_t FieldPrime::mul(std::uint32_t a, std::uint32_t b) const {
    check(a); check(b);
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
}

std::uint32_t FieldPrime::neg(std::uint32_t a) const {
    check(a);
    return a == 0 ? 0 : p_ - a;
}

std::uint32_t FieldPrime::inv(std::uint32_t a) const {
    check(a);
    if (a == 0) throwValidation("InversionOfZero", "no inverse of 0 in F_p");
    return pow(a, p_ - 2);
}

std::uint32_t FieldPrime::pow(std::uint32_t a, std::uint64_t e) const {
    check(a);
    return static_cast<std::uint32_t>(powmod64(a, e, p_));
}

std::uint32_t FieldPrime::reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
}

} // namespace agh
