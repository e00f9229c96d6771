// Cyclotomic polynomials, relative minimal polynomials of prime-power roots
// of unity, and exact resultants.

#ifndef RINGUNITS_CYCLOTOMIC_HPP
#define RINGUNITS_CYCLOTOMIC_HPP

#include <cstdint>

#include "ringunits/poly.hpp"

namespace ringunits {

/// Phi_n, computed by exact division of x^n - 1 by Phi_d for the proper
/// divisors d of n. Memoized per process; safe to call concurrently.
const IntPoly& cyclotomic_poly(std::uint64_t n);

/// Phi_n(1): 0 for n = 1, p for n = p^e, 1 otherwise.
Integer phi_at_1(std::uint64_t n);

/// Minimal polynomial of zeta_{p^a} over Q(zeta_{p^b}), a > b >= 0.
/// For b = 0 this is Phi_{p^a} with constant coefficients (modulus 1);
/// for b > 0 it is x^{p^{a-b}} - zeta_{p^b} over Z[zeta_{p^b}].
CoeffExtPoly psi_poly(std::uint64_t p, unsigned a, unsigned b);

/// zeta_n^k reduced modulo Phi_n, as a polynomial of degree < phi(n).
IntPoly zeta_power(std::uint64_t n, std::uint64_t k);

/// f reduced modulo Phi_n.
IntPoly reduce_mod_cyclotomic(const IntPoly& f, std::uint64_t n);

/// Evaluates a Z[zeta_l]-coefficient polynomial at x = zeta_N^k inside
/// Z[zeta_N]; requires l | N so that zeta_l = zeta_N^{N/l}.
IntPoly evaluate_in_cyclotomic(const CoeffExtPoly& f, std::uint64_t big_n, std::uint64_t k);

/// Res(f, g) = lc(f)^deg(g) * prod g(alpha) over the roots alpha of f,
/// computed as the Sylvester determinant by fraction-free elimination.
Integer resultant(const IntPoly& f, const IntPoly& g);

}  // namespace ringunits

#endif
