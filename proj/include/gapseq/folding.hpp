#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gapseq/sequences.hpp"
#include "gapseq/term.hpp"

namespace gapseq {

enum class FoldBit : std::uint8_t { zero = 0, one = 1 };

inline int to_int(FoldBit b) { return static_cast<int>(b); }

/// Regular paper-folding sequence A014707:
/// fold(4n) = 0, fold(4n+2) = 1, fold(2n+1) = fold(n).
FoldBit fold(std::uint64_t n);

/// A088748: a(0) = 1, a(n+1) = a(n) + 1 - 2 fold(n).
Term a088748(std::uint64_t n);
std::vector<Term> a088748_terms(std::uint64_t n0, std::size_t count);

/// 2 a_n - 1 where a_{n+1} - a_n = -1, otherwise 0.
Term descent_marker(const SeqSpec& spec, std::uint64_t n);

/// gap_sum_abs(Fold, n) - descent_marker(Fold, n) == 4 fold(n)
bool fold_identity_check(std::uint64_t n);

}  // namespace gapseq
