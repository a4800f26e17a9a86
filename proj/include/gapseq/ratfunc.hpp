#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gapseq/poly.hpp"
#include "gapseq/term.hpp"

namespace gapseq {

/// Rational function num/den, expandable as a power series at 0.
///
/// Every value is normalized on construction: gcd(num, den) = 1 over Q and
/// den(0) = 1, so two RatFuncs are equal iff they represent the same function.
class RatFunc {
public:
    /// The zero function.
    RatFunc() : num_(), den_(Poly::constant(1)) {}
    explicit RatFunc(Poly num) : RatFunc(std::move(num), Poly::constant(1)) {}
    /// Throws std::domain_error if den is zero or vanishes at 0 after reduction.
    RatFunc(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const Rat& c);

    bool operator==(const RatFunc&) const = default;

private:
    Poly num_;
    Poly den_;
};

inline RatFunc rf_add(const RatFunc& a, const RatFunc& b) { return a + b; }
inline RatFunc rf_sub(const RatFunc& a, const RatFunc& b) { return a - b; }
inline RatFunc rf_mul(const RatFunc& a, const RatFunc& b) { return a * b; }

/// First `count` Taylor coefficients at 0, by the recurrence the denominator induces.
std::vector<Rat> rf_expand(const RatFunc& f, std::size_t count);

/// Same as rf_expand but requires every coefficient to be integral (throws NotIntegral).
std::vector<Term> rf_expand_integral(const RatFunc& f, std::size_t count);

/// `(num) / (den)` with denominators cleared jointly, e.g. `(3x) / (1 - 6x + 8x^2)`.
std::string to_string(const RatFunc& f);

class RatFuncSyntaxError : public std::invalid_argument {
public:
    RatFuncSyntaxError(const std::string& what, std::size_t pos)
        : std::invalid_argument(what), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// Accepts the rendering grammar: `(P) / (Q)`, `(P)`, or a bare polynomial P.
/// Polynomials are sums of terms `[+|-] [c] [x[^k]]` with integer or p/q coefficients.
RatFunc parse_ratfunc(std::string_view text);
Poly parse_poly(std::string_view text);

}  // namespace gapseq
