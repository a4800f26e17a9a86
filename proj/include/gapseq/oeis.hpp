#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gapseq/term.hpp"

namespace gapseq::oeis {

struct BFileEntry {
    std::int64_t index;
    Term value;
    bool operator==(const BFileEntry&) const = default;
};

/// Contiguous run of (index, value) pairs from an OEIS b-file.
struct BFile {
    std::string id;
    std::vector<BFileEntry> entries;
};

struct Mismatch {
    std::int64_t index;  ///< b-file index of the disagreeing entry
    Term expected;       ///< b-file value
    Term got;            ///< computed value
};

struct CheckReport {
    std::string id;
    bool matched = false;
    /// values[i] is aligned with entries[i + shift].
    std::int64_t shift = 0;
    std::size_t compared = 0;
    std::optional<Mismatch> first_mismatch;
};

class BFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MalformedLine : public BFileError {
public:
    MalformedLine(std::size_t line, const std::string& what)
        : BFileError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class NonContiguousIndex : public BFileError {
public:
    NonContiguousIndex(std::size_t line, std::int64_t expected, std::int64_t got)
        : BFileError("line " + std::to_string(line) + ": expected index " + std::to_string(expected) +
                     ", got " + std::to_string(got)),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class MalformedId : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NetworkUnavailable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class HttpStatusError : public std::runtime_error {
public:
    HttpStatusError(int status, const std::string& what) : std::runtime_error(what), status_(status) {}
    int status() const { return status_; }

private:
    int status_;
};

/// Parses `<index> <value>` lines; `#` comments, blank lines and CRLF are accepted.
BFile parse_bfile(std::string_view text, std::string id = {});

/// One `<index> <value>` line per entry, LF terminated.
std::string render_bfile(const BFile& b);

inline constexpr std::uint32_t default_max_shift = 4;

CheckReport cross_check(std::span<const Term> values, const BFile& bfile,
                        std::uint32_t max_shift = default_max_shift);

/// `A` followed by exactly six digits.
bool is_valid_id(std::string_view id);

/// `b<digits>.txt` for a valid id; throws MalformedId.
std::string bfile_name(std::string_view id);

/// GAPSEQ_CACHE_DIR if set, else $XDG_CACHE_HOME/gapseq, else ~/.cache/gapseq.
std::filesystem::path default_cache_dir();

struct FetchOptions {
    /// Without this, a cache miss raises NetworkUnavailable.
    bool allow_network = false;
    /// scheme://host[:port]; the b-file is requested at /A######/b######.txt.
    std::string base_url = "https://oeis.org";
    std::chrono::seconds timeout{20};
};

/// Returns the cached b-file if present; otherwise downloads it once, stores the
/// raw bytes atomically (temp file then rename) and parses.
BFile fetch_bfile(std::string_view id, const std::filesystem::path& cache_dir,
                  const FetchOptions& options = {});

}  // namespace gapseq::oeis
