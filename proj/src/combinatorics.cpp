#include "gapseq/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace gapseq {

Term binom(std::uint64_t n, std::int64_t k) {
    if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
    const std::uint64_t kk = std::min<std::uint64_t>(static_cast<std::uint64_t>(k), n - static_cast<std::uint64_t>(k));
    Term acc = 1;
    // acc stays C(n-kk+i, i), an integer, after each step
    for (std::uint64_t i = 1; i <= kk; ++i) acc = acc * (n - kk + i) / i;
    return acc;
}

Term factorial(std::uint64_t n) {
    Term acc = 1;
    for (std::uint64_t i = 2; i <= n; ++i) acc *= i;
    return acc;
}

Term fuss_catalan(std::uint64_t p, std::uint64_t m) {
    const Term top = binom((p + 1) * m, static_cast<std::int64_t>(m));
    const Term d = Term(p) * m + 1;
    if (top % d != 0) throw std::logic_error("fuss_catalan: inexact division");
    return top / d;
}

Rat raney(std::uint64_t p, std::uint64_t r, std::uint64_t n) {
    const std::uint64_t top = p * n + r;
    if (top == 0) throw std::invalid_argument("raney: pn + r must be positive");
    return Rat(Term(r), Term(top)) * Rat(binom(top, static_cast<std::int64_t>(n)));
}

Term gap_product_closed(std::uint64_t k, std::uint64_t r, std::uint64_t n) {
    if (k < 1) throw std::invalid_argument("gap_product_closed: k must be >= 1");
    if (r < 1) throw std::invalid_argument("gap_product_closed: r must be >= 1");
    const std::uint64_t base = k * n + r;
    const Term q = factorial(k) * binom(k * (n + 1) + r - 1, static_cast<std::int64_t>(k));
    if (q % base != 0) throw std::logic_error("gap_product_closed: inexact division");
    return q / base;
}

bool check_fc_identity(std::uint64_t k, std::uint64_t n) {
    return gap_product_closed(k, 1, n) == factorial(k) * fuss_catalan(n, k);
}

bool check_raney_identity(std::uint64_t k, std::uint64_t r, std::uint64_t n) {
    const Rat rhs = Rat(factorial(k), Term(r)) * raney(n + 1, r, k);
    return Rat(gap_product_closed(k, r, n)) == rhs;
}

}  // namespace gapseq
