// Dense univariate polynomials over Z and Q with unbounded coefficients.

#ifndef RINGUNITS_POLY_HPP
#define RINGUNITS_POLY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace ringunits {

using Integer = mpz_class;
using Rational = mpq_class;

/// Integer polynomial, coefficients lowest degree first. The zero polynomial
/// has no coefficients and there is never a trailing zero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly monomial(std::size_t degree, const Integer& c = 1);
    static IntPoly constant(const Integer& c);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }
    /// Coefficient of x^i, zero beyond the degree.
    Integer coeff(std::size_t i) const;
    const Integer& leading() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }

    Integer evaluate(const Integer& x) const;

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs);
    IntPoly& operator*=(const Integer& c);
    IntPoly operator-() const;

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    /// Human-readable form, e.g. "x^4 - x^2 + 1".
    std::string to_string(char var = 'x') const;

private:
    void normalize();
    std::vector<Integer> coeffs_;
};

/// Quotient and remainder of f by g, requires g with leading coefficient +-1.
std::pair<IntPoly, IntPoly> divmod_unit_leading(const IntPoly& f, const IntPoly& g);

/// f mod g for g with leading coefficient +-1.
IntPoly rem_unit_leading(const IntPoly& f, const IntPoly& g);

/// f / g, throws std::domain_error when the division is not exact over Z.
IntPoly exact_div(const IntPoly& f, const IntPoly& g);

/// Rational polynomial in canonical form (reduced fractions, no trailing zeros).
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);
    explicit RatPoly(const IntPoly& p);

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t i) const;
    const Rational& leading() const;

    bool is_integral() const;
    /// Throws std::domain_error unless every coefficient is an integer.
    IntPoly to_int_poly() const;

    RatPoly& operator+=(const RatPoly& rhs);
    RatPoly& operator-=(const RatPoly& rhs);
    RatPoly& operator*=(const Rational& c);
    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(RatPoly a, const Rational& c) { return a *= c; }
    friend bool operator==(const RatPoly&, const RatPoly&) = default;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

std::pair<RatPoly, RatPoly> divmod(const RatPoly& f, const RatPoly& g);

/// Extended Euclid over Q: returns (d, s, t) with s f + t g = d, d monic gcd.
struct RatXgcd {
    RatPoly gcd, s, t;
};
RatXgcd xgcd(const RatPoly& f, const RatPoly& g);

/// Polynomial whose coefficients live in Z[zeta_l] = Z[x]/(Phi_l); each
/// coefficient is stored reduced to degree < phi(l).
struct CoeffExtPoly {
    std::uint64_t modulus = 1;
    std::vector<IntPoly> coeffs;

    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
    friend bool operator==(const CoeffExtPoly&, const CoeffExtPoly&) = default;
};

}  // namespace ringunits

#endif
