#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gapseq/sequences.hpp"
#include "gapseq/term.hpp"

namespace gapseq {

/// The integers strictly between a_n and a_{n+1}: start, start+1, ..., start+length-1.
/// Length is zero whenever a_{n+1} <= a_n + 1.
struct Gap {
    Term start;
    Term length;

    bool empty() const { return length == 0; }
    /// Materializes the elements; throws std::length_error above `limit`.
    std::vector<Term> elements(std::size_t limit = 1'000'000) const;

    bool operator==(const Gap&) const = default;
};

enum class GapSumKind {
    clamped,  ///< sum of the gap's elements, 0 on empty gaps
    signed_,  ///< (a_{n+1}-a_n-1)(a_n+a_{n+1})/2, negative on descents
    absolute, ///< sum_{j=1}^{|a_{n+1}-a_n-1|} (a_n+j)
};

Gap gap_between(const Term& lo, const Term& hi);
Term gap_sum_between(const Term& lo, const Term& hi, GapSumKind kind = GapSumKind::clamped);
Term gap_product_between(const Term& lo, const Term& hi);

Gap gap(const SeqSpec& spec, std::uint64_t n);
Term gap_sum(const SeqSpec& spec, std::uint64_t n);
Term gap_sum_signed(const SeqSpec& spec, std::uint64_t n);
Term gap_sum_abs(const SeqSpec& spec, std::uint64_t n);
Term gap_product(const SeqSpec& spec, std::uint64_t n);

/// Gap-sums for n0 .. n0+count-1, materializing the sequence once.
std::vector<Term> gap_sums(const SeqSpec& spec, std::uint64_t n0, std::size_t count,
                           GapSumKind kind = GapSumKind::clamped);
std::vector<Term> gap_products(const SeqSpec& spec, std::uint64_t n0, std::size_t count);

/// start * (start+1) * ... * (start+count-1); 1 when count == 0.
/// Long runs are multiplied as a balanced product tree.
Term consecutive_product(const Term& start, std::uint64_t count);

/// Gap-sum of a_n = r*n: (2n+1) * C(r,2).
Term gap_sum_linear_closed(const Term& r, std::uint64_t n);

/// Gap-sum of a_n = k^n: ((k^2-1) k^{2n} - (k+1) k^n) / 2.
Term gap_sum_geometric_closed(const Term& k, std::uint64_t n);

}  // namespace gapseq
