#include "ringunits/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ringunits {

std::uint64_t PrimePower::value() const { return ipow(prime, exponent); }

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in product");
    return r;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / std::gcd(a, b), b);
}

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    if (n > kFactorizeBound)
        throw std::invalid_argument("factorize: n = " + std::to_string(n) + " exceeds bound 1e15");
    Factorization f;
    auto strip = [&](std::uint64_t p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) f.push_back({p, e});
    };
    strip(2);
    strip(3);
    // 6k +- 1 wheel
    for (std::uint64_t p = 5; p * p <= n; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (n > 1) f.push_back({n, 1});
    return f;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t r = 1;
    for (const auto& [p, e] : factorize(n)) r *= ipow(p, e - 1) * (p - 1);
    return r;
}

std::uint64_t star(std::uint64_t n) {
    if (n <= 2) {
        if (n == 0) throw std::invalid_argument("star: n must be positive");
        return 0;
    }
    return euler_phi(n) / 2 - 1;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    auto f = factorize(n);
    return f.size() == 1 && f[0].exponent == 1;
}

std::optional<PrimePower> as_prime_power(std::uint64_t n) {
    if (n < 2) return std::nullopt;
    auto f = factorize(n);
    if (f.size() != 1) return std::nullopt;
    return f[0];
}

std::optional<PrimePower> prime_power_ratio(std::uint64_t n, std::uint64_t m) {
    if (n == 0 || m == 0) throw std::invalid_argument("prime_power_ratio: arguments must be positive");
    if (n == m) throw std::invalid_argument("prime_power_ratio: moduli must be distinct");
    if (n % m != 0) return std::nullopt;
    return as_prime_power(n / m);
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> ds{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t base = ds.size();
        std::uint64_t pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

}  // namespace ringunits
