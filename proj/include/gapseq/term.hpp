#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace gapseq {

/// Exact signed integer used for every sequence value, sum and product.
using Term = boost::multiprecision::cpp_int;

/// Exact rational in canonical reduced form (positive denominator).
using Rat = boost::multiprecision::cpp_rational;

class IndexOutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class InvalidSpec : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a Rat expected to be integral is not.
class NotIntegral : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline std::string to_string(const Term& t) { return t.str(); }

std::string to_string(const Rat& q);

/// Parses an optionally signed decimal integer; throws std::invalid_argument.
Term parse_term(std::string_view text);

/// Parses `p` or `p/q`; throws std::invalid_argument (also for q == 0).
Rat parse_rat(std::string_view text);

Term to_integer(const Rat& q);

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

/// Narrowing with a range check; throws std::overflow_error.
std::uint64_t to_u64(const Term& t);

}  // namespace gapseq
