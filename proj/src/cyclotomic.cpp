#include "ringunits/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "ringunits/arith.hpp"

namespace ringunits {

namespace {

std::shared_mutex g_cyclo_mutex;
std::map<std::uint64_t, IntPoly> g_cyclo_memo;  // node addresses are stable

const IntPoly* lookup_cyclo(std::uint64_t n) {
    std::shared_lock lock(g_cyclo_mutex);
    auto it = g_cyclo_memo.find(n);
    return it == g_cyclo_memo.end() ? nullptr : &it->second;
}

}  // namespace

const IntPoly& cyclotomic_poly(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_poly: n must be positive");
    if (const IntPoly* hit = lookup_cyclo(n)) return *hit;

    IntPoly acc = IntPoly::monomial(n) - IntPoly{1};
    for (std::uint64_t d : divisors(n)) {
        if (d == n) break;
        acc = exact_div(acc, cyclotomic_poly(d));
    }
    std::unique_lock lock(g_cyclo_mutex);
    auto [it, inserted] = g_cyclo_memo.emplace(n, std::move(acc));
    return it->second;
}

Integer phi_at_1(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("phi_at_1: n must be positive");
    if (n == 1) return 0;
    if (auto pp = as_prime_power(n)) return Integer(static_cast<unsigned long>(pp->prime));
    return 1;
}

IntPoly reduce_mod_cyclotomic(const IntPoly& f, std::uint64_t n) {
    return rem_unit_leading(f, cyclotomic_poly(n));
}

IntPoly zeta_power(std::uint64_t n, std::uint64_t k) {
    return reduce_mod_cyclotomic(IntPoly::monomial(static_cast<std::size_t>(k % n)), n);
}

CoeffExtPoly psi_poly(std::uint64_t p, unsigned a, unsigned b) {
    if (!is_prime(p)) throw std::invalid_argument("psi_poly: p must be prime");
    if (a <= b) throw std::invalid_argument("psi_poly: requires a > b");
    CoeffExtPoly out;
    if (b == 0) {
        out.modulus = 1;
        for (const auto& c : cyclotomic_poly(ipow(p, a)).coeffs()) out.coeffs.push_back(IntPoly::constant(c));
        return out;
    }
    const std::uint64_t l = ipow(p, b);
    const std::uint64_t top = ipow(p, a - b);
    out.modulus = l;
    out.coeffs.assign(static_cast<std::size_t>(top) + 1, IntPoly{});
    out.coeffs[0] = -zeta_power(l, 1);
    out.coeffs.back() = IntPoly{1};
    return out;
}

IntPoly evaluate_in_cyclotomic(const CoeffExtPoly& f, std::uint64_t big_n, std::uint64_t k) {
    if (big_n % f.modulus != 0) throw std::invalid_argument("evaluate_in_cyclotomic: modulus must divide N");
    const std::uint64_t step = big_n / f.modulus;
    std::vector<Integer> acc(static_cast<std::size_t>(big_n));
    for (std::size_t j = 0; j < f.coeffs.size(); ++j) {
        const auto& cj = f.coeffs[j].coeffs();
        for (std::size_t i = 0; i < cj.size(); ++i) {
            const std::uint64_t e = (i * step + j * k) % big_n;
            acc[static_cast<std::size_t>(e)] += cj[i];
        }
    }
    return reduce_mod_cyclotomic(IntPoly(std::move(acc)), big_n);
}

Integer resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant: zero polynomial");
    const std::size_t m = static_cast<std::size_t>(f.degree());
    const std::size_t n = static_cast<std::size_t>(g.degree());
    if (m == 0) {
        Integer r;
        mpz_pow_ui(r.get_mpz_t(), f.leading().get_mpz_t(), n);
        return r;
    }
    if (n == 0) {
        Integer r;
        mpz_pow_ui(r.get_mpz_t(), g.leading().get_mpz_t(), m);
        return r;
    }
    const std::size_t size = m + n;
    std::vector<std::vector<Integer>> a(size, std::vector<Integer>(size));
    // Rows 0..n-1 hold shifted copies of f, rows n..n+m-1 shifted copies of g,
    // coefficients written highest degree first.
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i <= m; ++i) a[r][r + i] = f.coeffs()[m - i];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= n; ++i) a[n + r][r + i] = g.coeffs()[n - i];

    // Bareiss fraction-free elimination.
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < size; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < size && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == size) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j) {
                Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Integer det = a[size - 1][size - 1];
    if (sign < 0) det = -det;
    return det;
}

}  // namespace ringunits
