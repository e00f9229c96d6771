// Elementary integer arithmetic on machine-sized moduli: factorization,
// Euler's totient, prime-power tests.

#ifndef RINGUNITS_ARITH_HPP
#define RINGUNITS_ARITH_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace ringunits {

/// A prime power p^e with e >= 1.
struct PrimePower {
    std::uint64_t prime = 0;
    unsigned exponent = 0;

    std::uint64_t value() const;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
    friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization sorted by prime; empty for n = 1.
using Factorization = std::vector<PrimePower>;

/// Largest input accepted by factorize(). Trial division up to sqrt(n)
/// keeps this fast (about 3.2e7 candidate divisors at the bound).
inline constexpr std::uint64_t kFactorizeBound = 1'000'000'000'000'000ULL;

Factorization factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// Rank of the unit group of Z[zeta_n]: phi(n)/2 - 1 for n >= 3, else 0.
std::uint64_t star(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// Returns (p, e) when n = p^e with e >= 1.
std::optional<PrimePower> as_prime_power(std::uint64_t n);

/// Returns (p, e) iff m | n and n/m = p^e, e >= 1. Throws when n == m.
std::optional<PrimePower> prime_power_ratio(std::uint64_t n, std::uint64_t m);

/// Sorted list of positive divisors of n.
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// Multiplication that throws std::overflow_error instead of wrapping.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

/// Order of the group of roots of unity in Z[zeta_m], i.e. lcm(2, m).
inline std::uint64_t roots_of_unity_order(std::uint64_t m) { return m % 2 == 0 ? m : 2 * m; }

}  // namespace ringunits

#endif
