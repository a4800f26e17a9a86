#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "gapseq/term.hpp"

namespace gapseq {

/// Sequence families. Each struct is a closed description of a_n for n >= 0.
namespace family {

/// a_n = k*n + r
struct Linear {
    Term k;
    Term r;
    bool operator==(const Linear&) const = default;
};

/// a_n = k^n + offset
struct Geometric {
    Term k;
    Term offset;
    bool operator==(const Geometric&) const = default;
};

/// a_n = sum coeffs[i] * n^i; must be integer-valued on the naturals.
struct Poly {
    std::vector<Rat> coeffs;
    bool operator==(const Poly&) const = default;
};

/// a_n = C(n + shift, lower)
struct Binomial {
    std::uint64_t shift = 0;
    std::uint64_t lower = 1;
    bool operator==(const Binomial&) const = default;
};

/// a_n = h_{n+shift}, h_0 = alpha, h_1 = beta, h_n = r*h_{n-1} + s*h_{n-2}
struct Horadam {
    Term alpha;
    Term beta;
    Term r;
    Term s;
    std::uint64_t shift = 0;
    bool operator==(const Horadam&) const = default;
};

/// a_n = (n+1)-th prime
struct Primes {
    bool operator==(const Primes&) const = default;
};

/// a_n = A088748(n)
struct Fold {
    bool operator==(const Fold&) const = default;
};

struct Explicit {
    std::vector<Term> terms;
    bool operator==(const Explicit&) const = default;
};

}  // namespace family

/// A validated sequence description. Construction throws InvalidSpec when the
/// family parameters are out of range.
class SeqSpec {
public:
    using Variant = std::variant<family::Linear, family::Geometric, family::Poly, family::Binomial,
                                 family::Horadam, family::Primes, family::Fold, family::Explicit>;

    SeqSpec(family::Linear v);
    SeqSpec(family::Geometric v);
    SeqSpec(family::Poly v);
    SeqSpec(family::Binomial v);
    SeqSpec(family::Horadam v);
    SeqSpec(family::Primes v);
    SeqSpec(family::Fold v);
    SeqSpec(family::Explicit v);

    static SeqSpec fibonacci() { return family::Horadam{0, 1, 1, 1}; }
    static SeqSpec jacobsthal() { return family::Horadam{0, 1, 1, 2}; }
    static SeqSpec pell() { return family::Horadam{0, 1, 2, 1}; }

    const Variant& variant() const { return v_; }

    template <class T>
    const T* get_if() const { return std::get_if<T>(&v_); }

    bool operator==(const SeqSpec&) const = default;

private:
    Variant v_;
};

Term term(const SeqSpec& spec, std::uint64_t n);

/// [a_{n0}, ..., a_{n0+count-1}]; recurrence-driven families run in linear time.
std::vector<Term> terms(const SeqSpec& spec, std::uint64_t n0, std::size_t count);

/// (n+1)-th prime from a process-wide, incrementally extended sieve.
Term nth_prime(std::uint64_t n);

/// Canonical text form in the spec grammar, e.g. `horadam:1,3,1,2`.
std::string to_string(const SeqSpec& spec);

}  // namespace gapseq
