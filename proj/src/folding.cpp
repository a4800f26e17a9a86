#include "gapseq/folding.hpp"

#include "gapseq/gaps.hpp"

namespace gapseq {

FoldBit fold(std::uint64_t n) {
    while (n & 1) n >>= 1;
    return (n & 3) == 2 ? FoldBit::one : FoldBit::zero;
}

std::vector<Term> a088748_terms(std::uint64_t n0, std::size_t count) {
    std::vector<Term> out;
    out.reserve(count);
    std::int64_t a = 1;
    for (std::uint64_t i = 0; out.size() < count; ++i) {
        if (i >= n0) out.emplace_back(a);
        a += 1 - 2 * to_int(fold(i));
    }
    return out;
}

Term a088748(std::uint64_t n) { return a088748_terms(n, 1).front(); }

Term descent_marker(const SeqSpec& spec, std::uint64_t n) {
    const auto a = terms(spec, n, 2);
    if (a[1] - a[0] == -1) return 2 * a[0] - 1;
    return 0;
}

bool fold_identity_check(std::uint64_t n) {
    const SeqSpec spec = family::Fold{};
    return gap_sum_abs(spec, n) - descent_marker(spec, n) == 4 * to_int(fold(n));
}

}  // namespace gapseq
