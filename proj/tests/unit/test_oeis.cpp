#include <doctest.h>

#include <httplib.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "gapseq/gaps.hpp"
#include "gapseq/oeis.hpp"
#include "test_util.hpp"

using namespace gapseq;
using namespace gapseq::oeis;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const fs::path kFixtures = GAPSEQ_FIXTURE_DIR;

BFile bfile_of(const std::vector<Term>& v, std::int64_t offset = 0) {
    BFile b{"A000000", {}};
    for (std::size_t i = 0; i < v.size(); ++i) b.entries.push_back({offset + static_cast<std::int64_t>(i), v[i]});
    return b;
}

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() / ("gapseq-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("parse_bfile: examples") {
    const BFile a = parse_bfile("0 0\n1 4\n2 6\n");
    CHECK(a.entries == std::vector<BFileEntry>{{0, 0}, {1, 4}, {2, 6}});
    const BFile b = parse_bfile("# comment\n5 120\n6 720\n");
    CHECK(b.entries == std::vector<BFileEntry>{{5, 120}, {6, 720}});
    CHECK_THROWS_AS(parse_bfile("1 2\n3 4\n"), NonContiguousIndex);
}

TEST_CASE("parse_bfile: CRLF, blanks and big values") {
    const BFile b = parse_bfile("# x\r\n\r\n7 169958063987712000123456789\r\n8   -5\r\n  \n", "A999999");
    CHECK(b.id == "A999999");
    REQUIRE(b.entries.size() == 2);
    CHECK(b.entries[0].value == Term("169958063987712000123456789"));
    CHECK(b.entries[1] == BFileEntry{8, -5});
    CHECK(parse_bfile("").entries.empty());
}

TEST_CASE("parse_bfile: malformed lines report the line number") {
    auto line_of = [](std::string_view text) -> std::size_t {
        try {
            parse_bfile(text);
        } catch (const MalformedLine& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("0 1\n1 2\nfoo\n") == 3);
    CHECK(line_of("0 1\n1\n") == 2);
    CHECK(line_of("0 1 2\n") == 1);
    CHECK(line_of("0 1x\n") == 1);
    try {
        parse_bfile("# c\n1 1\n2 1\n4 1\n");
        FAIL("expected NonContiguousIndex");
    } catch (const NonContiguousIndex& e) {
        CHECK(e.line() == 4);
    }
}

TEST_CASE("property: render(parse(t)) reproduces the entry lines of t") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        std::string text = "# header\n";
        std::string expected;
        const std::int64_t offset = static_cast<std::int64_t>(rng() % 7) - 2;
        for (std::size_t i = 0; i < 1 + rng() % 30; ++i) {
            Term v = rng();
            v *= rng();
            if (rng() % 2) v = -v;
            const std::string line = std::to_string(offset + static_cast<std::int64_t>(i)) + " " + v.str();
            expected += line + "\n";
            text += line + (rng() % 2 ? "\r\n" : "\n");
            if (rng() % 5 == 0) text += "# interleaved\n\n";
        }
        REQUIRE(render_bfile(parse_bfile(text)) == expected);
    }
}

TEST_CASE("cross_check: fixtures") {
    const BFile primes = parse_bfile(slurp(kFixtures / "b054265.txt"), "A054265");
    const auto r = cross_check(T({0, 4, 6, 27, 12}), primes);
    CHECK(r.matched);
    CHECK(r.shift == 0);
    CHECK(r.compared == 5);
    CHECK(!r.first_mismatch);

    const BFile fib = parse_bfile(slurp(kFixtures / "b109454.txt"), "A109454");
    const auto f = cross_check(T({4, 13, 42, 119}), fib);
    CHECK(f.matched);
    CHECK(f.shift == 0);
    const auto from_zero = cross_check(gap_sums(SeqSpec::fibonacci(), 0, 11), fib);
    CHECK(from_zero.matched);
    CHECK(from_zero.shift == -4);
    CHECK(from_zero.compared == 7);

    const BFile corrupt = parse_bfile(slurp(kFixtures / "corrupt_b054265.txt"), "A054265");
    const auto c = cross_check(gap_sums(family::Primes{}, 0, 11), corrupt);
    CHECK(!c.matched);
    REQUIRE(c.first_mismatch);
    CHECK(c.first_mismatch->index == 8);
    CHECK(c.first_mismatch->expected == 64);
    CHECK(c.first_mismatch->got == 63);
    CHECK(c.shift == 0);
}

TEST_CASE("property: self-match and shift detection") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Term> v;
        for (int i = 0; i < 12; ++i) v.emplace_back(rng() % 1000);
        const BFile b = bfile_of(v, static_cast<std::int64_t>(rng() % 3));
        for (std::uint32_t s : {0u, 1u, 4u}) {
            const auto r = cross_check(v, b, s);
            REQUIRE(r.matched);
            REQUIRE(r.shift == 0);
        }
        const std::vector<Term> tail(v.begin() + 2, v.end());
        const auto r = cross_check(tail, b, 3);
        REQUIRE(r.matched);
        REQUIRE(r.shift == 2);
        std::vector<Term> padded{Term(1000001), Term(1000002)};
        padded.insert(padded.end(), v.begin(), v.end());
        const auto p = cross_check(padded, b, 3);
        REQUIRE(p.matched);
        REQUIRE(p.shift == -2);
    }
}

TEST_CASE("cross_check: tie-break prefers non-negative shift") {
    const BFile b = bfile_of(T({7, 7, 7, 7, 7}));
    CHECK(cross_check(T({7, 7, 7}), b, 2).shift == 0);
    const BFile c = bfile_of(T({1, 2, 1, 2, 1, 2, 1}));
    // shifts +1 and -1 both align [2,1,2,1]; +1 wins
    CHECK(cross_check(T({2, 1, 2, 1}), c, 2).shift == 1);
    CHECK_THROWS(cross_check(std::vector<Term>{}, c, 2));
}

TEST_CASE("ids and cache layout") {
    CHECK(is_valid_id("A000045"));
    CHECK(!is_valid_id("A10"));
    CHECK(!is_valid_id("a000045"));
    CHECK(!is_valid_id("A00004x"));
    CHECK(bfile_name("A103897") == "b103897.txt");
    CHECK_THROWS_AS(bfile_name("A10"), MalformedId);
}

TEST_CASE("default_cache_dir honours GAPSEQ_CACHE_DIR") {
    ::setenv("GAPSEQ_CACHE_DIR", "/tmp/gapseq-env-cache", 1);
    CHECK(default_cache_dir() == fs::path("/tmp/gapseq-env-cache"));
    ::unsetenv("GAPSEQ_CACHE_DIR");
    CHECK(!default_cache_dir().empty());
}

TEST_CASE("fetch_bfile: warm cache, bad id, cold cache without network") {
    TempDir cache;
    fs::copy_file(kFixtures / "b103897.txt", cache.path / "b103897.txt");
    const BFile b = fetch_bfile("A103897", cache.path);
    CHECK(b.id == "A103897");
    CHECK(b.entries.size() == 8);
    CHECK(b.entries[4].value == 360);

    CHECK_THROWS_AS(fetch_bfile("A10", cache.path), MalformedId);
    CHECK_THROWS_AS(fetch_bfile("A109454", cache.path), NetworkUnavailable);
    CHECK(!fs::exists(cache.path / "b109454.txt"));
}

TEST_CASE("fetch_bfile: HTTP download is cached atomically") {
    httplib::Server server;
    const std::string body = slurp(kFixtures / "b109454.txt");
    std::atomic<int> hits{0};
    server.Get("/A109454/b109454.txt", [&](const httplib::Request&, httplib::Response& res) {
        ++hits;
        res.set_content(body, "text/plain");
    });
    server.Get("/A000001/b000001.txt", [&](const httplib::Request&, httplib::Response& res) {
        res.status = 404;
        res.set_content("not found", "text/plain");
    });
    const int port = server.bind_to_any_port("127.0.0.1");
    std::thread worker([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    TempDir cache;
    const FetchOptions online{true, "http://127.0.0.1:" + std::to_string(port)};
    std::vector<std::thread> callers;
    std::vector<std::size_t> sizes(4);
    for (int i = 0; i < 4; ++i)
        callers.emplace_back([&, i] { sizes[i] = fetch_bfile("A109454", cache.path, online).entries.size(); });
    for (auto& t : callers) t.join();
    for (auto s : sizes) CHECK(s == 7);
    CHECK(slurp(cache.path / "b109454.txt") == body);
    std::size_t files = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(cache.path)) ++files;
    CHECK(files == 1);  // no temp files left behind
    const int before = hits.load();
    CHECK(fetch_bfile("A109454", cache.path, online).entries.size() == 7);
    CHECK(hits.load() == before);

    try {
        fetch_bfile("A000001", cache.path, online);
        FAIL("expected HttpStatusError");
    } catch (const HttpStatusError& e) {
        CHECK(e.status() == 404);
    }
    CHECK(!fs::exists(cache.path / "b000001.txt"));

    server.stop();
    worker.join();
    CHECK_THROWS_AS(fetch_bfile("A000002", cache.path, online), NetworkUnavailable);
}
