#pragma once

#include <cstdint>

#include "gapseq/term.hpp"

namespace gapseq {

/// C(n, k) by the multiplicative formula; 0 when k < 0 or k > n.
Term binom(std::uint64_t n, std::int64_t k);

Term factorial(std::uint64_t n);

/// Fuss-Catalan number C((p+1)m, m) / (pm + 1). fc(1, m) is the m-th Catalan number.
Term fuss_catalan(std::uint64_t p, std::uint64_t m);

/// Raney number r/(pn+r) * C(pn+r, n), kept exact in Q. Requires pn + r > 0.
Rat raney(std::uint64_t p, std::uint64_t r, std::uint64_t n);

/// Gap-product of a_n = kn + r from the factorial ratio
/// k!/(kn+r) * C(k(n+1)+r-1, k), i.e. (kn+r+1)(kn+r+2)...(kn+r+k-1).
Term gap_product_closed(std::uint64_t k, std::uint64_t r, std::uint64_t n);

/// P_n(kn+1) == k! * fc(n, k)
bool check_fc_identity(std::uint64_t k, std::uint64_t n);

/// P_n(kn+r) == (k!/r) * raney(n+1, r, k)
bool check_raney_identity(std::uint64_t k, std::uint64_t r, std::uint64_t n);

}  // namespace gapseq
