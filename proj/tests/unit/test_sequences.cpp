#include <doctest.h>

#include <random>
#include <thread>

#include "gapseq/sequences.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace gapseq;

TEST_CASE("term: examples") {
    CHECK(term(family::Horadam{1, 3, 1, 2}, 3) == 11);
    CHECK(term(family::Linear{0, 7}, 100) == 7);
    CHECK(term(family::Primes{}, 4) == 11);
    CHECK(term(family::Poly{Q({0, 0, 2})}, 3) == 18);
}

TEST_CASE("terms: examples") {
    CHECK(terms(family::Horadam{0, 1, 1, 1}, 0, 8) == T({0, 1, 1, 2, 3, 5, 8, 13}));
    CHECK(terms(family::Explicit{T({1, 2, 3})}, 1, 2) == T({2, 3}));
    CHECK(terms(family::Horadam{1, 2, 2, 2}, 0, 7) == T({1, 2, 6, 16, 44, 120, 328}));
    CHECK(terms(family::Horadam{1, 3, 1, 2}, 0, 8) == T({1, 3, 5, 11, 21, 43, 85, 171}));
    CHECK(terms(family::Linear{3, 1}, 2, 0).empty());
}

TEST_CASE("nth_prime") {
    CHECK(nth_prime(0) == 2);
    CHECK(nth_prime(1) == 3);
    CHECK(nth_prime(14) == 47);
    CHECK(terms(family::Primes{}, 0, 15) == T({2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}));

    const auto expected = oracle::primes_by_trial(3000);
    const auto got = terms(family::Primes{}, 0, 3000);
    for (std::size_t i = 0; i < expected.size(); ++i) REQUIRE(got[i] == expected[i]);
    for (std::size_t i = 1; i < got.size(); ++i) REQUIRE(got[i] > got[i - 1]);
    CHECK(nth_prime(9999) == 104729);
}

TEST_CASE("nth_prime: concurrent readers see one table") {
    std::vector<std::thread> pool;
    std::vector<Term> seen(8);
    for (int t = 0; t < 8; ++t)
        pool.emplace_back([t, &seen] { seen[t] = nth_prime(20000 + 1000 * t); });
    for (auto& th : pool) th.join();
    for (int t = 0; t < 8; ++t) CHECK(oracle::is_prime_trial(static_cast<std::uint64_t>(seen[t])));
    CHECK(seen[0] == oracle::primes_by_trial(20001).back());
}

TEST_CASE("Horadam recurrence and shift coherence") {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> small(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        const family::Horadam h{small(rng), small(rng), small(rng), small(rng)};
        const auto a = terms(h, 0, 60);
        CHECK(a == oracle::horadam(h.alpha, h.beta, h.r, h.s, 60));
        for (std::size_t n = 2; n < a.size(); ++n) REQUIRE(a[n] == h.r * a[n - 1] + h.s * a[n - 2]);
        for (std::uint64_t s = 0; s <= 5; ++s) {
            family::Horadam shifted = h;
            shifted.shift = s;
            const auto b = terms(shifted, 0, 51);
            for (std::size_t n = 0; n <= 50; ++n) REQUIRE(b[n] == a[n + s]);
            CHECK(term(shifted, 7) == a[7 + s]);
        }
    }
}

TEST_CASE("aliases are Horadam specs") {
    CHECK(SeqSpec::fibonacci() == SeqSpec(family::Horadam{0, 1, 1, 1}));
    CHECK(terms(SeqSpec::jacobsthal(), 0, 6) == T({0, 1, 1, 3, 5, 11}));
    CHECK(terms(SeqSpec::pell(), 0, 6) == T({0, 1, 2, 5, 12, 29}));
    CHECK(terms(family::Horadam{0, 1, 1, 2, 2}, 0, 5) == T({1, 3, 5, 11, 21}));
}

TEST_CASE("Poly specs") {
    std::vector<Term> explicit_list;
    for (int n = 0; n < 10; ++n) explicit_list.emplace_back(2 * n * n);
    CHECK(terms(family::Poly{Q({0, 0, 2})}, 0, 10) == explicit_list);
    CHECK(terms(family::Poly{Q({0, 0, 2})}, 0, 10) == terms(family::Explicit{explicit_list}, 0, 10));

    // n(n+1)/2 and n(3n-1)/2 are integer-valued with fractional coefficients
    CHECK(terms(family::Poly{{0, Rat(1, 2), Rat(1, 2)}}, 0, 6) == T({0, 1, 3, 6, 10, 15}));
    CHECK(terms(family::Poly{{0, Rat(-1, 2), Rat(3, 2)}}, 0, 5) == T({0, 1, 5, 12, 22}));
    // n(n-1)(n-2)/6
    CHECK(terms(family::Poly{{0, Rat(1, 3), Rat(-1, 2), Rat(1, 6)}}, 3, 3) == T({1, 4, 10}));

    CHECK_THROWS_AS(SeqSpec(family::Poly{{Rat(1, 2)}}), InvalidSpec);
    CHECK_THROWS_AS(SeqSpec(family::Poly{{0, Rat(1, 2)}}), InvalidSpec);
    CHECK_THROWS_AS(SeqSpec(family::Poly{{0, Rat(1, 3), Rat(1, 3)}}), InvalidSpec);  // n(n+1)/3
    CHECK(terms(family::Poly{{0, 0, 0}}, 0, 3) == T({0, 0, 0}));
}

TEST_CASE("Binomial and Geometric specs") {
    CHECK(terms(family::Binomial{2, 3}, 0, 5) == T({0, 1, 4, 10, 20}));
    CHECK(terms(family::Binomial{3, 4}, 0, 5) == T({0, 1, 5, 15, 35}));
    CHECK(terms(family::Geometric{2, 0}, 0, 5) == T({1, 2, 4, 8, 16}));
    CHECK(terms(family::Geometric{2, -1}, 0, 5) == T({0, 1, 3, 7, 15}));
    CHECK(term(family::Geometric{3, 0}, 40) == Term("12157665459056928801"));
}

TEST_CASE("Fold spec") {
    CHECK(terms(family::Fold{}, 0, 8) == T({1, 2, 3, 2, 3, 4, 3, 2}));
}

TEST_CASE("invalid specs and index errors") {
    CHECK_THROWS_AS(SeqSpec(family::Geometric{1, 0}), InvalidSpec);
    CHECK_THROWS_AS(SeqSpec(family::Linear{-1, 0}), InvalidSpec);
    CHECK_THROWS_AS(SeqSpec(family::Binomial{0, 0}), InvalidSpec);
    CHECK_THROWS_AS(SeqSpec(family::Explicit{T({5})}), InvalidSpec);
    const SeqSpec e = family::Explicit{T({1, 2, 3})};
    CHECK(term(e, 2) == 3);
    CHECK_THROWS_AS(term(e, 3), IndexOutOfRange);
    CHECK_THROWS_AS(terms(e, 2, 2), IndexOutOfRange);
}

TEST_CASE("to_string uses the spec grammar") {
    CHECK(to_string(SeqSpec(family::Horadam{1, 3, 1, 2})) == "horadam:1,3,1,2");
    CHECK(to_string(SeqSpec(family::Horadam{0, 1, 1, 2, 2})) == "horadam:0,1,1,2,2");
    CHECK(to_string(SeqSpec(family::Geometric{2, -1})) == "geom:2,-1");
    CHECK(to_string(SeqSpec(family::Poly{{0, Rat(1, 2), Rat(1, 2)}})) == "poly:0,1/2,1/2");
    CHECK(to_string(SeqSpec(family::Primes{})) == "primes");
}
