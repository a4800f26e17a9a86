#include <algorithm>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "gapseq/sequences.hpp"

namespace gapseq {
namespace {

// Primes below `limit_`, grown segment by segment. Readers share the lock;
// extension takes it exclusively.
class PrimeTable {
public:
    std::uint64_t nth(std::uint64_t n) {
        {
            std::shared_lock lock(mu_);
            if (n < primes_.size()) return primes_[n];
        }
        std::unique_lock lock(mu_);
        while (n >= primes_.size()) extend();
        return primes_[n];
    }

    std::vector<std::uint64_t> range(std::uint64_t n0, std::size_t count) {
        nth(n0 + count);
        std::shared_lock lock(mu_);
        return {primes_.begin() + static_cast<std::ptrdiff_t>(n0),
                primes_.begin() + static_cast<std::ptrdiff_t>(n0 + count)};
    }

private:
    // Sieve [limit_, 2*limit_) with the primes already known; every composite
    // there has a factor below sqrt(2*limit_) <= limit_.
    void extend() {
        const std::uint64_t lo = limit_;
        const std::uint64_t hi = limit_ * 2;
        std::vector<bool> composite(hi - lo, false);
        for (const std::uint64_t p : primes_) {
            if (p * p >= hi) break;
            std::uint64_t first = std::max(p * p, (lo + p - 1) / p * p);
            for (std::uint64_t m = first; m < hi; m += p) composite[m - lo] = true;
        }
        for (std::uint64_t v = lo; v < hi; ++v)
            if (!composite[v - lo]) primes_.push_back(v);
        limit_ = hi;
    }

    std::shared_mutex mu_;
    std::vector<std::uint64_t> primes_{2, 3, 5, 7};
    std::uint64_t limit_ = 8;
};

PrimeTable& table() {
    static PrimeTable t;
    return t;
}

}  // namespace

Term nth_prime(std::uint64_t n) { return Term(table().nth(n)); }

namespace detail {
std::vector<Term> prime_range(std::uint64_t n0, std::size_t count) {
    std::vector<Term> out;
    out.reserve(count);
    if (count == 0) return out;
    for (const auto p : table().range(n0, count)) out.emplace_back(p);
    return out;
}
}  // namespace detail

}  // namespace gapseq
