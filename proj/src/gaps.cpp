#include "gapseq/gaps.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace gapseq {
namespace {

constexpr std::uint64_t kTreeThreshold = 64;

Term product_tree(Term start, std::uint64_t count) {
    if (count <= kTreeThreshold) {
        Term acc = 1;
        for (std::uint64_t i = 0; i < count; ++i, ++start) acc *= start;
        return acc;
    }
    const std::uint64_t half = count / 2;
    Term right_start = start + half;
    return product_tree(std::move(start), half) * product_tree(std::move(right_start), count - half);
}

// sum_{j=1}^{m} (lo + j)
Term run_sum(const Term& lo, const Term& m) { return m * lo + m * (m + 1) / 2; }

}  // namespace

std::vector<Term> Gap::elements(std::size_t limit) const {
    if (length > limit)
        throw std::length_error("gap of length " + length.str() + " exceeds enumeration limit " +
                                std::to_string(limit));
    std::vector<Term> out;
    const auto n = static_cast<std::size_t>(length);
    out.reserve(n);
    Term v = start;
    for (std::size_t i = 0; i < n; ++i, ++v) out.push_back(v);
    return out;
}

Gap gap_between(const Term& lo, const Term& hi) {
    Term length = hi - lo - 1;
    if (length < 0) length = 0;
    return Gap{lo + 1, std::move(length)};
}

Term gap_sum_between(const Term& lo, const Term& hi, GapSumKind kind) {
    switch (kind) {
        case GapSumKind::clamped: return run_sum(lo, gap_between(lo, hi).length);
        case GapSumKind::signed_: {
            // x^2 + x is always even, so (hi-lo-1)(lo+hi) is too
            const Term twice = (hi - lo - 1) * (lo + hi);
            return twice / 2;
        }
        case GapSumKind::absolute: return run_sum(lo, abs(Term(hi - lo - 1)));
    }
    throw std::logic_error("unknown GapSumKind");
}

Term gap_product_between(const Term& lo, const Term& hi) {
    const Gap g = gap_between(lo, hi);
    return consecutive_product(g.start, to_u64(g.length));
}

Term consecutive_product(const Term& start, std::uint64_t count) { return product_tree(start, count); }

Gap gap(const SeqSpec& spec, std::uint64_t n) {
    const auto a = terms(spec, n, 2);
    return gap_between(a[0], a[1]);
}

Term gap_sum(const SeqSpec& spec, std::uint64_t n) { return gap_sums(spec, n, 1, GapSumKind::clamped).front(); }

Term gap_sum_signed(const SeqSpec& spec, std::uint64_t n) {
    return gap_sums(spec, n, 1, GapSumKind::signed_).front();
}

Term gap_sum_abs(const SeqSpec& spec, std::uint64_t n) {
    return gap_sums(spec, n, 1, GapSumKind::absolute).front();
}

Term gap_product(const SeqSpec& spec, std::uint64_t n) { return gap_products(spec, n, 1).front(); }

std::vector<Term> gap_sums(const SeqSpec& spec, std::uint64_t n0, std::size_t count, GapSumKind kind) {
    std::vector<Term> out;
    if (count == 0) return out;
    const auto a = terms(spec, n0, count + 1);
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(gap_sum_between(a[i], a[i + 1], kind));
    return out;
}

std::vector<Term> gap_products(const SeqSpec& spec, std::uint64_t n0, std::size_t count) {
    std::vector<Term> out;
    if (count == 0) return out;
    const auto a = terms(spec, n0, count + 1);
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(gap_product_between(a[i], a[i + 1]));
    return out;
}

Term gap_sum_linear_closed(const Term& r, std::uint64_t n) {
    if (r < 1) throw std::invalid_argument("gap_sum_linear_closed: r must be >= 1");
    return Term(2 * Term(n) + 1) * (r * (r - 1) / 2);
}

Term gap_sum_geometric_closed(const Term& k, std::uint64_t n) {
    if (k < 2) throw std::invalid_argument("gap_sum_geometric_closed: k must be >= 2");
    const Term kn = boost::multiprecision::pow(k, static_cast<unsigned>(n));
    return ((k * k - 1) * kn * kn - (k + 1) * kn) / 2;
}

}  // namespace gapseq
