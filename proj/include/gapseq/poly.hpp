#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "gapseq/term.hpp"

namespace gapseq {

/// Dense univariate polynomial over Q. coeff(i) is the coefficient of x^i.
/// Canonical: no trailing zeros, the zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);
    Poly(std::initializer_list<Rat> coeffs);

    static Poly constant(const Rat& c) { return Poly{std::vector<Rat>{c}}; }
    /// c * x^k
    static Poly monomial(const Rat& c, std::size_t k);

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat{0}; }
    Rat leading() const { return c_.empty() ? Rat{0} : c_.back(); }
    Rat eval(const Rat& x) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rat& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
    friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b);

    bool operator==(const Poly&) const = default;

private:
    void trim();
    std::vector<Rat> c_;
};

/// Euclidean division; throws std::domain_error on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Monic gcd over Q; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

Poly pow(const Poly& p, unsigned e);


/// Printed with integer coefficients in ascending powers, e.g. `1 - 3x + x^2`.
/// The caller is responsible for clearing denominators first.
std::string to_string(const Poly& p);

}  // namespace gapseq
