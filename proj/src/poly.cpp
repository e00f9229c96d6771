#include "ringunits/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ringunits {

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPoly IntPoly::monomial(std::size_t degree, const Integer& c) {
    std::vector<Integer> v(degree + 1);
    v[degree] = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

const Integer& IntPoly::leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Integer IntPoly::evaluate(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPoly(std::move(r));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

IntPoly& IntPoly::operator*=(const Integer& c) {
    for (auto& x : coeffs_) x *= c;
    normalize();
    return *this;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& x : r.coeffs_) x = -x;
    return r;
}

std::string IntPoly::to_string(char var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Integer& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = (mag == 1);
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (!unit) os << mag.get_str();
        os << var;
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

std::pair<IntPoly, IntPoly> divmod_unit_leading(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
    const Integer lc = g.leading();
    if (lc != 1 && lc != -1) throw std::domain_error("divisor must have leading coefficient +-1");
    if (f.degree() < g.degree()) return {IntPoly{}, f};
    std::vector<Integer> rem = f.coeffs();
    const auto& gc = g.coeffs();
    const std::size_t dg = gc.size() - 1;
    std::vector<Integer> quo(rem.size() - dg);
    for (std::size_t k = rem.size(); k-- > dg;) {
        if (rem[k] == 0) continue;
        Integer q = rem[k] * lc;  // lc^-1 == lc for lc = +-1
        quo[k - dg] = q;
        for (std::size_t j = 0; j <= dg; ++j) rem[k - dg + j] -= q * gc[j];
    }
    rem.resize(dg);
    return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

IntPoly rem_unit_leading(const IntPoly& f, const IntPoly& g) { return divmod_unit_leading(f, g).second; }

IntPoly exact_div(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (f.is_zero()) return {};
    if (f.degree() < g.degree()) throw std::domain_error("exact_div: remainder is nonzero");
    std::vector<Integer> rem = f.coeffs();
    const auto& gc = g.coeffs();
    const Integer& lc = gc.back();
    const std::size_t dg = gc.size() - 1;
    std::vector<Integer> quo(rem.size() - dg);
    for (std::size_t k = rem.size(); k-- > dg;) {
        if (rem[k] == 0) continue;
        if (!mpz_divisible_p(rem[k].get_mpz_t(), lc.get_mpz_t()))
            throw std::domain_error("exact_div: quotient is not integral");
        Integer q = rem[k] / lc;
        quo[k - dg] = q;
        for (std::size_t j = 0; j <= dg; ++j) rem[k - dg + j] -= q * gc[j];
    }
    for (std::size_t k = 0; k < dg; ++k)
        if (rem[k] != 0) throw std::domain_error("exact_div: remainder is nonzero");
    return IntPoly(std::move(quo));
}

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

RatPoly::RatPoly(const IntPoly& p) {
    coeffs_.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) coeffs_.emplace_back(c);
}

void RatPoly::normalize() {
    for (auto& c : coeffs_) c.canonicalize();
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RatPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& RatPoly::leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

bool RatPoly::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

IntPoly RatPoly::to_int_poly() const {
    if (!is_integral()) throw std::domain_error("polynomial has non-integral coefficients");
    std::vector<Integer> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(c.get_num());
    return IntPoly(std::move(v));
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

RatPoly& RatPoly::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    normalize();
    return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RatPoly(std::move(r));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& f, const RatPoly& g) {
    if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (f.degree() < g.degree()) return {RatPoly{}, f};
    std::vector<Rational> rem = f.coeffs();
    const auto& gc = g.coeffs();
    const std::size_t dg = gc.size() - 1;
    const Rational inv_lc = 1 / gc.back();
    std::vector<Rational> quo(rem.size() - dg);
    for (std::size_t k = rem.size(); k-- > dg;) {
        if (rem[k] == 0) continue;
        Rational q = rem[k] * inv_lc;
        quo[k - dg] = q;
        for (std::size_t j = 0; j <= dg; ++j) rem[k - dg + j] -= q * gc[j];
    }
    rem.resize(dg);
    return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatXgcd xgcd(const RatPoly& f, const RatPoly& g) {
    RatPoly r0 = f, r1 = g;
    RatPoly s0(std::vector<Rational>{1}), s1;
    RatPoly t0, t1(std::vector<Rational>{1});
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        RatPoly s2 = s0 - q * s1;
        RatPoly t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!r0.is_zero()) {
        const Rational inv = 1 / r0.leading();
        r0 *= inv;
        s0 *= inv;
        t0 *= inv;
    }
    return {r0, s0, t0};
}

}  // namespace ringunits
