#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "gapseq/oeis.hpp"

#include <httplib.h>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <thread>

namespace gapseq::oeis {
namespace {

bool is_blank(char c) { return c == ' ' || c == '\t'; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && (is_blank(s.front()) || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (is_blank(s.back()) || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_atomically(const std::filesystem::path& target, const std::string& bytes) {
    static std::atomic<unsigned> counter{0};
    const auto tag = std::hash<std::thread::id>{}(std::this_thread::get_id()) ^ (counter++ * 0x9e3779b97f4a7c15ULL);
    auto tmp = target;
    tmp += ".tmp." + std::to_string(tag);
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) throw std::runtime_error("short write to " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot move " + tmp.string() + " into place: " + ec.message());
    }
}

}  // namespace

BFile parse_bfile(std::string_view text, std::string id) {
    BFile b{std::move(id), {}};
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        line = trim(line);
        if (line.empty() || line.front() == '#') continue;

        std::size_t split = 0;
        while (split < line.size() && !is_blank(line[split])) ++split;
        if (split == line.size()) throw MalformedLine(line_no, "expected '<index> <value>'");
        const std::string_view index_text = line.substr(0, split);
        const std::string_view value_text = trim(line.substr(split));
        for (const char c : value_text)
            if (is_blank(c)) throw MalformedLine(line_no, "unexpected extra field");

        BFileEntry e;
        try {
            const Term idx = parse_term(index_text);
            if (idx > std::numeric_limits<std::int64_t>::max() || idx < std::numeric_limits<std::int64_t>::min())
                throw std::invalid_argument("index out of range");
            e.index = static_cast<std::int64_t>(idx);
            e.value = parse_term(value_text);
        } catch (const std::invalid_argument& ex) {
            throw MalformedLine(line_no, ex.what());
        }
        if (!b.entries.empty() && e.index != b.entries.back().index + 1)
            throw NonContiguousIndex(line_no, b.entries.back().index + 1, e.index);
        b.entries.push_back(std::move(e));
    }
    return b;
}

std::string render_bfile(const BFile& b) {
    std::string out;
    for (const auto& e : b.entries) out += std::to_string(e.index) + " " + e.value.str() + "\n";
    return out;
}

CheckReport cross_check(std::span<const Term> values, const BFile& bfile, std::uint32_t max_shift) {
    if (values.empty()) throw std::invalid_argument("cross_check: no values to compare");
    const auto nv = static_cast<std::int64_t>(values.size());
    const auto ne = static_cast<std::int64_t>(bfile.entries.size());

    CheckReport best{bfile.id, false, 0, 0, std::nullopt};
    std::size_t best_agree = 0;
    bool have_best = false;

    // 0, +1, -1, +2, -2, ...: the first full match is the smallest |shift|, non-negative first
    for (std::int64_t step = 0; step <= 2 * static_cast<std::int64_t>(max_shift); ++step) {
        const std::int64_t shift = (step % 2 == 0) ? -(step / 2) : (step + 1) / 2;
        const std::int64_t lo = std::max<std::int64_t>(0, -shift);
        const std::int64_t hi = std::min<std::int64_t>(nv, ne - shift);
        if (lo >= hi) continue;

        std::size_t agree = 0;
        std::optional<Mismatch> first;
        for (std::int64_t i = lo; i < hi; ++i) {
            const auto& e = bfile.entries[static_cast<std::size_t>(i + shift)];
            const auto& v = values[static_cast<std::size_t>(i)];
            if (e.value == v)
                ++agree;
            else if (!first)
                first = Mismatch{e.index, e.value, v};
        }
        const auto compared = static_cast<std::size_t>(hi - lo);
        if (!first) return CheckReport{bfile.id, true, shift, compared, std::nullopt};
        if (!have_best || agree > best_agree) {
            best = CheckReport{bfile.id, false, shift, compared, first};
            best_agree = agree;
            have_best = true;
        }
    }
    return best;
}

bool is_valid_id(std::string_view id) {
    if (id.size() != 7 || id[0] != 'A') return false;
    for (std::size_t i = 1; i < id.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
    return true;
}

std::string bfile_name(std::string_view id) {
    if (!is_valid_id(id)) throw MalformedId("malformed OEIS id '" + std::string(id) + "' (expected A + 6 digits)");
    return "b" + std::string(id.substr(1)) + ".txt";
}

std::filesystem::path default_cache_dir() {
    if (const char* dir = std::getenv("GAPSEQ_CACHE_DIR"); dir && *dir) return dir;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "gapseq";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "gapseq";
    return std::filesystem::temp_directory_path() / "gapseq";
}

BFile fetch_bfile(std::string_view id, const std::filesystem::path& cache_dir, const FetchOptions& options) {
    const std::string name = bfile_name(id);
    const auto cached = cache_dir / name;
    if (std::filesystem::exists(cached)) return parse_bfile(read_file(cached), std::string(id));

    if (!options.allow_network)
        throw NetworkUnavailable(std::string(id) + " is not cached in " + cache_dir.string() +
                                 " and network access is disabled");

    httplib::Client client(options.base_url);
    if (!client.is_valid()) throw NetworkUnavailable("cannot create HTTP client for " + options.base_url);
    client.set_connection_timeout(options.timeout);
    client.set_read_timeout(options.timeout);
    client.set_follow_location(true);

    const std::string path = "/" + std::string(id) + "/" + name;
    auto res = client.Get(path);
    if (!res) throw NetworkUnavailable("GET " + options.base_url + path + " failed: " + httplib::to_string(res.error()));
    if (res->status != 200)
        throw HttpStatusError(res->status, "GET " + options.base_url + path + " returned HTTP " + std::to_string(res->status));

    BFile b = parse_bfile(res->body, std::string(id));
    std::filesystem::create_directories(cache_dir);
    write_atomically(cached, res->body);
    return b;
}

}  // namespace gapseq::oeis
