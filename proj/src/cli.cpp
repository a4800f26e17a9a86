#include "gapseq/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "gapseq/combinatorics.hpp"
#include "gapseq/gaps.hpp"
#include "gapseq/genfun.hpp"
#include "gapseq/oeis.hpp"
#include "gapseq/ratfunc.hpp"
#include "gapseq/reference_tables.hpp"

namespace gapseq::cli {

SpecSyntaxError::SpecSyntaxError(const std::string& what, std::size_t pos)
    : std::invalid_argument(what + " at position " + std::to_string(pos)), pos_(pos) {}

namespace {

using nlohmann::json;

// Reads comma-separated numeric fields from `text`, starting at `pos`,
// reporting the offending character position on error.
class ArgScanner {
public:
    ArgScanner(std::string_view text, std::size_t pos) : s_(text), pos_(pos) {}

    std::vector<std::string_view> fields(bool allow_fraction) {
        std::vector<std::string_view> out;
        if (pos_ >= s_.size()) throw SpecSyntaxError("expected an argument list", pos_);
        while (true) {
            out.push_back(number(allow_fraction));
            if (pos_ == s_.size()) return out;
            if (s_[pos_] != ',') throw SpecSyntaxError(std::string("expected ',' but found '") + s_[pos_] + "'", pos_);
            ++pos_;
        }
    }

private:
    std::string_view number(bool allow_fraction) {
        const std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        digits();
        if (allow_fraction && pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            digits();
        }
        return s_.substr(start, pos_ - start);
    }
    void digits() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) {
            if (pos_ == s_.size()) throw SpecSyntaxError("expected a digit but input ended", pos_);
            throw SpecSyntaxError(std::string("expected a digit but found '") + s_[pos_] + "'", pos_);
        }
    }

    std::string_view s_;
    std::size_t pos_;
};

void arity(std::string_view name, std::size_t got, std::size_t lo, std::size_t hi, std::size_t pos) {
    if (got < lo || got > hi) {
        std::string want = lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi);
        if (hi == static_cast<std::size_t>(-1)) want = "at least " + std::to_string(lo);
        throw SpecSyntaxError(std::string(name) + " takes " + want + " arguments, got " + std::to_string(got), pos);
    }
}

std::uint64_t natural(std::string_view field, const char* what) {
    const Term t = parse_term(field);
    if (t < 0) throw InvalidSpec(std::string(what) + " must be >= 0");
    return to_u64(t);
}

}  // namespace

std::string spec_grammar_help() {
    return "sequence specs:\n"
           "  linear:K,R              a_n = K*n + R (K >= 0)\n"
           "  geom:K[,OFFSET]         a_n = K^n + OFFSET (K >= 2)\n"
           "  poly:C0,C1,...          a_n = sum Ci*n^i, Ci integer or p/q, integer-valued\n"
           "  binom:SHIFT,LOWER       a_n = C(n+SHIFT, LOWER) (LOWER >= 1)\n"
           "  horadam:A,B,R,S[,SHIFT] h_0=A, h_1=B, h_n=R*h_{n-1}+S*h_{n-2}; a_n = h_{n+SHIFT}\n"
           "  primes                  a_n = (n+1)-th prime\n"
           "  fold                    a_n = A088748(n)\n"
           "  explicit:T0,T1,...      listed terms (at least two)\n"
           "  fib | jacobsthal | pell horadam:0,1,1,1 | horadam:0,1,1,2 | horadam:0,1,2,1\n";
}

SeqSpec parse_spec(std::string_view text) {
    const auto colon = text.find(':');
    const std::string_view name = text.substr(0, colon);
    const std::size_t args_at = colon == std::string_view::npos ? text.size() : colon + 1;

    auto no_args = [&](SeqSpec s) {
        if (colon != std::string_view::npos) throw SpecSyntaxError(std::string(name) + " takes no arguments", colon);
        return s;
    };
    if (name == "primes") return no_args(family::Primes{});
    if (name == "fold") return no_args(family::Fold{});
    if (name == "fib") return no_args(SeqSpec::fibonacci());
    if (name == "jacobsthal") return no_args(SeqSpec::jacobsthal());
    if (name == "pell") return no_args(SeqSpec::pell());

    const bool known = name == "linear" || name == "geom" || name == "poly" || name == "binom" ||
                       name == "horadam" || name == "explicit";
    if (!known) throw SpecSyntaxError("unknown sequence family '" + std::string(name) + "'", 0);
    if (colon == std::string_view::npos) throw SpecSyntaxError("expected ':' after " + std::string(name), text.size());

    const auto f = ArgScanner(text, args_at).fields(name == "poly");
    const std::size_t n = f.size();
    if (name == "linear") {
        arity(name, n, 2, 2, args_at);
        return family::Linear{parse_term(f[0]), parse_term(f[1])};
    }
    if (name == "geom") {
        arity(name, n, 1, 2, args_at);
        return family::Geometric{parse_term(f[0]), n == 2 ? parse_term(f[1]) : Term(0)};
    }
    if (name == "poly") {
        std::vector<Rat> c;
        for (auto x : f) c.push_back(parse_rat(x));
        return family::Poly{std::move(c)};
    }
    if (name == "binom") {
        arity(name, n, 2, 2, args_at);
        return family::Binomial{natural(f[0], "binom SHIFT"), natural(f[1], "binom LOWER")};
    }
    if (name == "horadam") {
        arity(name, n, 4, 5, args_at);
        return family::Horadam{parse_term(f[0]), parse_term(f[1]), parse_term(f[2]), parse_term(f[3]),
                               n == 5 ? natural(f[4], "horadam SHIFT") : 0};
    }
    std::vector<Term> t;
    for (auto x : f) t.push_back(parse_term(x));
    return family::Explicit{std::move(t)};
}

namespace {

enum class Format { text, json, csv };

struct Output {
    Format format = Format::text;
    std::ostream& out;
};

json strings_json(const std::vector<Term>& v) {
    json a = json::array();
    for (const auto& t : v) a.push_back(t.str());
    return a;
}

json strings_json(const std::vector<Rat>& v) {
    json a = json::array();
    for (const auto& q : v) a.push_back(to_string(q));
    return a;
}

template <class T>
void emit_values(const Output& o, json meta, const std::vector<T>& values, std::uint64_t n0) {
    switch (o.format) {
        case Format::text: {
            for (std::size_t i = 0; i < values.size(); ++i) o.out << (i ? " " : "") << to_string(values[i]);
            o.out << "\n";
            break;
        }
        case Format::csv:
            o.out << "n,value\n";
            for (std::size_t i = 0; i < values.size(); ++i) o.out << n0 + i << "," << to_string(values[i]) << "\n";
            break;
        case Format::json:
            meta["from"] = n0;
            meta["values"] = strings_json(values);
            o.out << meta.dump() << "\n";
            break;
    }
}

std::vector<Term> int_list(std::string_view text, std::size_t expect, const char* what) {
    std::vector<Term> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(parse_term(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (expect && out.size() != expect)
        throw CLI::ValidationError(what, "expected " + std::to_string(expect) + " comma-separated integers");
    return out;
}

Poly coeff_list(std::string_view text) {
    std::vector<Rat> c;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        c.push_back(parse_rat(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Poly(std::move(c));
}

void emit_table(const Output& o, const tables::Table& t, json& doc) {
    switch (o.format) {
        case Format::text: {
            std::vector<std::size_t> width(t.columns.size() + 1, 0);
            for (const auto& r : t.rows) width[0] = std::max(width[0], r.label.size());
            for (std::size_t c = 0; c < t.columns.size(); ++c) {
                width[c + 1] = t.columns[c].size();
                for (const auto& r : t.rows)
                    if (c < r.cells.size()) width[c + 1] = std::max(width[c + 1], r.cells[c].size());
            }
            o.out << t.title << "\n";
            o.out << std::left << std::setw(static_cast<int>(width[0])) << "";
            for (std::size_t c = 0; c < t.columns.size(); ++c)
                o.out << "  " << std::setw(static_cast<int>(width[c + 1])) << t.columns[c];
            o.out << "\n";
            for (const auto& r : t.rows) {
                o.out << std::setw(static_cast<int>(width[0])) << r.label;
                for (std::size_t c = 0; c < r.cells.size(); ++c)
                    o.out << "  " << std::setw(static_cast<int>(width[c + 1])) << r.cells[c];
                o.out << "\n";
            }
            o.out << std::right;
            if (!t.corrections.empty()) {
                o.out << "corrections:\n";
                for (const auto& c : t.corrections) {
                    o.out << "  " << c.where << ": printed " << c.printed << ", computed " << c.computed;
                    if (!c.note.empty()) o.out << " (" << c.note << ")";
                    o.out << "\n";
                }
            }
            o.out << "\n";
            break;
        }
        case Format::csv:
            for (const auto& r : t.rows)
                for (std::size_t c = 0; c < r.cells.size(); ++c)
                    o.out << '"' << t.title << "\",\"" << r.label << "\",\"" << t.columns[c] << "\",\"" << r.cells[c]
                          << "\"\n";
            break;
        case Format::json: {
            json jt;
            jt["title"] = t.title;
            jt["columns"] = t.columns;
            jt["rows"] = json::array();
            for (const auto& r : t.rows) jt["rows"].push_back({{"label", r.label}, {"cells", r.cells}});
            jt["corrections"] = json::array();
            for (const auto& c : t.corrections)
                jt["corrections"].push_back(
                    {{"where", c.where}, {"printed", c.printed}, {"computed", c.computed}, {"note", c.note}});
            doc["tables"].push_back(jt);
            break;
        }
    }
}

json report_json(const oeis::CheckReport& r) {
    json j{{"id", r.id}, {"matched", r.matched}, {"shift", r.shift}, {"compared", r.compared}};
    if (r.first_mismatch)
        j["first_mismatch"] = {{"index", r.first_mismatch->index},
                               {"expected", r.first_mismatch->expected.str()},
                               {"got", r.first_mismatch->got.str()}};
    else
        j["first_mismatch"] = nullptr;
    return j;
}

std::string report_text(const oeis::CheckReport& r) {
    std::ostringstream s;
    s << r.id << (r.matched ? " matched" : " MISMATCH") << ": shift " << r.shift << ", " << r.compared << " compared";
    if (r.first_mismatch)
        s << ", first mismatch at index " << r.first_mismatch->index << ": expected " << r.first_mismatch->expected
          << ", got " << r.first_mismatch->got;
    return s.str();
}

struct OeisTarget {
    std::string spec;
    std::string kind;
    std::string id;
    std::optional<std::filesystem::path> bfile;
};

std::string read_text(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

oeis::CheckReport check_target(const OeisTarget& t, bool fetch, const std::filesystem::path& cache_dir,
                               std::uint32_t max_shift, std::optional<std::size_t> count) {
    if (!oeis::is_valid_id(t.id)) throw oeis::MalformedId("malformed OEIS id '" + t.id + "' (expected A + 6 digits)");
    const SeqSpec spec = parse_spec(t.spec);
    const oeis::BFile bfile = t.bfile ? oeis::parse_bfile(read_text(*t.bfile), t.id)
                                      : oeis::fetch_bfile(t.id, cache_dir, oeis::FetchOptions{fetch});
    const std::size_t n = count.value_or(bfile.entries.size() + max_shift);
    std::vector<Term> values;
    if (t.kind == "terms")
        values = terms(spec, 0, n);
    else if (t.kind == "gapsum")
        values = gap_sums(spec, 0, n);
    else if (t.kind == "gapprod")
        values = gap_products(spec, 0, n);
    else
        throw CLI::ValidationError("--kind", "expected terms, gapsum or gapprod, got '" + t.kind + "'");
    return oeis::cross_check(values, bfile, max_shift);
}

std::vector<OeisTarget> read_manifest(const std::filesystem::path& path) {
    std::vector<OeisTarget> out;
    std::istringstream in(read_text(path));
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream fields(line);
        OeisTarget t;
        if (!(fields >> t.spec) || t.spec.front() == '#') continue;
        std::string bfile;
        if (!(fields >> t.kind >> t.id))
            throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": expected SPEC KIND ID [BFILE]");
        if (fields >> bfile) t.bfile = path.parent_path() / bfile;
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gap-sum and gap-product sequences of integer sequences", "gapseq"};
    app.require_subcommand(1);
    std::string format_name = "text";
    app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));

    std::string spec_text;
    std::uint64_t count = 0;
    std::uint64_t from = 0;
    auto add_seq_opts = [&](CLI::App* sub) {
        sub->add_option("--spec", spec_text, "Sequence spec (see grammar)")->required();
        sub->add_option("--count", count, "Number of values")->required();
        sub->add_option("--from", from, "First index");
    };

    auto* terms_cmd = app.add_subcommand("terms", "Terms a_n");
    add_seq_opts(terms_cmd);
    auto* gaps_cmd = app.add_subcommand("gaps", "Gaps between consecutive terms");
    add_seq_opts(gaps_cmd);
    auto* gapsum_cmd = app.add_subcommand("gapsum", "Gap-sum sequence");
    add_seq_opts(gapsum_cmd);
    bool signed_sum = false, abs_sum = false;
    auto* signed_flag = gapsum_cmd->add_flag("--signed", signed_sum, "(a_{n+1}-a_n-1)(a_n+a_{n+1})/2");
    gapsum_cmd->add_flag("--abs", abs_sum, "sum over |a_{n+1}-a_n-1| terms")->excludes(signed_flag);
    auto* gapprod_cmd = app.add_subcommand("gapprod", "Gap-product sequence");
    add_seq_opts(gapprod_cmd);

    auto* gf_cmd = app.add_subcommand("gf", "Horadam generating functions");
    std::string horadam_text;
    std::optional<std::size_t> expand_count;
    gf_cmd->add_option("--horadam", horadam_text, "A,B,R,S")->required();
    auto* gf_mode = gf_cmd->add_option_group("kind");
    bool m_plain = false, m_shift = false, m_square = false, m_square_shift = false, m_gapsum = false;
    gf_mode->add_flag("--plain", m_plain, "g.f. of a_n");
    gf_mode->add_flag("--shift", m_shift, "g.f. of a_{n+1}");
    gf_mode->add_flag("--square", m_square, "g.f. of a_n^2");
    gf_mode->add_flag("--square-shift", m_square_shift, "g.f. of a_{n+1}^2");
    gf_mode->add_flag("--gapsum", m_gapsum, "g.f. of the signed gap-sum");
    gf_mode->require_option(1);
    gf_cmd->add_option("--expand", expand_count, "Expand N coefficients");

    auto* expand_cmd = app.add_subcommand("expand", "Power series of num/den");
    std::string num_text, den_text;
    expand_cmd->add_option("--num", num_text, "Numerator coefficients c0,c1,...")->required();
    expand_cmd->add_option("--den", den_text, "Denominator coefficients, den(0) != 0")->required();
    expand_cmd->add_option("--count", count, "Number of coefficients")->required();

    std::uint64_t p = 0, m = 0, r = 0, nn = 0;
    auto* fc_cmd = app.add_subcommand("fc", "Fuss-Catalan number C((p+1)m,m)/(pm+1)");
    fc_cmd->add_option("--p", p)->required();
    fc_cmd->add_option("--m", m)->required();
    auto* raney_cmd = app.add_subcommand("raney", "Raney number r/(pn+r) C(pn+r,n)");
    raney_cmd->add_option("--p", p)->required();
    raney_cmd->add_option("--r", r)->required()->check(CLI::PositiveNumber);
    raney_cmd->add_option("--n", nn)->required();

    auto* identity_cmd = app.add_subcommand("check-identity", "Verify a gap-product identity");
    std::string fc_args, raney_args;
    auto* identity_group = identity_cmd->add_option_group("identity");
    identity_group->add_option("--fc", fc_args, "K,N: P_n(kn+1) = k! fc(n,k)");
    identity_group->add_option("--raney", raney_args, "K,R,N: P_n(kn+r) = (k!/r) raney(n+1,r,k)");
    identity_group->require_option(1);

    auto* table_cmd = app.add_subcommand("table", "Reproduce a reference table");
    std::string table_kind;
    table_cmd->add_option("kind", table_kind)->required()->check(CLI::IsMember({"figurate", "fc", "raney", "horadam"}));

    auto* oeis_cmd = app.add_subcommand("check-oeis", "Cross-check against an OEIS b-file");
    std::string kind, id, bfile_path, manifest_path, cache_dir_text;
    bool fetch = false;
    std::uint32_t max_shift = oeis::default_max_shift;
    std::optional<std::size_t> oeis_count;
    oeis_cmd->add_option("--spec", spec_text, "Sequence spec");
    oeis_cmd->add_option("--kind", kind, "terms | gapsum | gapprod")->check(CLI::IsMember({"terms", "gapsum", "gapprod"}));
    oeis_cmd->add_option("--id", id, "A-number");
    auto* bfile_opt = oeis_cmd->add_option("--bfile", bfile_path, "Local b-file");
    oeis_cmd->add_flag("--fetch", fetch, "Allow downloading on cache miss")->excludes(bfile_opt);
    oeis_cmd->add_option("--max-shift", max_shift, "Largest offset tried");
    oeis_cmd->add_option("--count", oeis_count, "Values computed (default: b-file length + max shift)");
    oeis_cmd->add_option("--manifest", manifest_path, "File of 'SPEC KIND ID [BFILE]' lines, checked concurrently");
    oeis_cmd->add_option("--cache-dir", cache_dir_text, "Overrides GAPSEQ_CACHE_DIR");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return static_cast<int>(ExitCode::ok);
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return static_cast<int>(ExitCode::ok);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        const auto subs = app.get_subcommands();
        err << (subs.empty() ? app.help() : subs.front()->help());
        return static_cast<int>(ExitCode::usage);
    }

    const Output o{format_name == "json" ? Format::json : format_name == "csv" ? Format::csv : Format::text, out};

    try {
        if (terms_cmd->parsed() || gapsum_cmd->parsed() || gapprod_cmd->parsed()) {
            const SeqSpec spec = parse_spec(spec_text);
            json meta{{"spec", to_string(spec)}};
            if (terms_cmd->parsed()) {
                meta["command"] = "terms";
                emit_values(o, meta, terms(spec, from, count), from);
            } else if (gapsum_cmd->parsed()) {
                const auto k = signed_sum ? GapSumKind::signed_ : abs_sum ? GapSumKind::absolute : GapSumKind::clamped;
                meta["command"] = "gapsum";
                meta["kind"] = signed_sum ? "signed" : abs_sum ? "abs" : "clamped";
                emit_values(o, meta, gap_sums(spec, from, count, k), from);
            } else {
                meta["command"] = "gapprod";
                emit_values(o, meta, gap_products(spec, from, count), from);
            }
            return 0;
        }

        if (gaps_cmd->parsed()) {
            const SeqSpec spec = parse_spec(spec_text);
            constexpr std::size_t kShown = 64;
            const auto a = terms(spec, from, count + 1);
            json doc{{"command", "gaps"}, {"spec", to_string(spec)}, {"gaps", json::array()}};
            if (o.format == Format::csv) out << "n,start,length\n";
            for (std::size_t i = 0; i < count; ++i) {
                const Gap g = gap_between(a[i], a[i + 1]);
                const std::uint64_t n = from + i;
                const bool shown = g.length <= kShown;
                switch (o.format) {
                    case Format::text: {
                        out << n << ": start " << g.start << ", length " << g.length;
                        if (!g.empty()) {
                            out << ":";
                            if (shown)
                                for (const auto& e : g.elements()) out << " " << e;
                            else
                                out << " " << g.start << " ... " << Term(g.start + g.length - 1);
                        }
                        out << "\n";
                        break;
                    }
                    case Format::csv: out << n << "," << g.start << "," << g.length << "\n"; break;
                    case Format::json: {
                        json jg{{"n", n}, {"start", g.start.str()}, {"length", g.length.str()}};
                        if (shown) jg["elements"] = strings_json(g.elements());
                        doc["gaps"].push_back(jg);
                        break;
                    }
                }
            }
            if (o.format == Format::json) out << doc.dump() << "\n";
            return 0;
        }

        if (gf_cmd->parsed()) {
            const auto h = int_list(horadam_text, 4, "--horadam");
            const HoradamParams hp{h[0], h[1], h[2], h[3]};
            const RatFunc f = m_plain ? horadam_gf(hp)
                              : m_shift ? horadam_shift_gf(hp)
                              : m_square ? horadam_sq_gf(hp)
                              : m_square_shift ? horadam_sq_shift_gf(hp)
                                               : horadam_gapsum_gf(hp);
            const auto expansion = expand_count ? rf_expand(f, *expand_count) : std::vector<Rat>{};
            switch (o.format) {
                case Format::text:
                    out << to_string(f) << "\n";
                    if (expand_count) {
                        for (std::size_t i = 0; i < expansion.size(); ++i) out << (i ? " " : "") << to_string(expansion[i]);
                        out << "\n";
                    }
                    break;
                case Format::csv:
                    out << "n,value\n";
                    for (std::size_t i = 0; i < expansion.size(); ++i) out << i << "," << to_string(expansion[i]) << "\n";
                    break;
                case Format::json: {
                    json doc{{"command", "gf"},
                             {"gf", to_string(f)},
                             {"num", strings_json(f.num().coeffs())},
                             {"den", strings_json(f.den().coeffs())}};
                    if (expand_count) doc["expansion"] = strings_json(expansion);
                    out << doc.dump() << "\n";
                    break;
                }
            }
            return 0;
        }

        if (expand_cmd->parsed()) {
            const RatFunc f(coeff_list(num_text), coeff_list(den_text));
            emit_values(o, json{{"command", "expand"}, {"gf", to_string(f)}}, rf_expand(f, count), 0);
            return 0;
        }

        if (fc_cmd->parsed()) {
            emit_values(o, json{{"command", "fc"}, {"p", p}, {"m", m}}, std::vector<Term>{fuss_catalan(p, m)}, 0);
            return 0;
        }
        if (raney_cmd->parsed()) {
            emit_values(o, json{{"command", "raney"}, {"p", p}, {"r", r}, {"n", nn}}, std::vector<Rat>{raney(p, r, nn)},
                        0);
            return 0;
        }

        if (identity_cmd->parsed()) {
            bool holds = false;
            std::string lhs, rhs, name, statement;
            json params;
            if (!fc_args.empty()) {
                const auto v = int_list(fc_args, 2, "--fc");
                const auto k = to_u64(v[0]), n = to_u64(v[1]);
                if (k < 1) throw CLI::ValidationError("--fc", "K must be >= 1");
                holds = check_fc_identity(k, n);
                lhs = gap_product_closed(k, 1, n).str();
                rhs = Term(factorial(k) * fuss_catalan(n, k)).str();
                name = "fc";
                statement = "P_" + std::to_string(n) + "(" + std::to_string(k) + "n+1) = " + std::to_string(k) +
                            "! * fc(" + std::to_string(n) + "," + std::to_string(k) + ")";
                params = {{"k", k}, {"n", n}};
            } else {
                const auto v = int_list(raney_args, 3, "--raney");
                const auto k = to_u64(v[0]), rr = to_u64(v[1]), n = to_u64(v[2]);
                if (k < 1 || rr < 1) throw CLI::ValidationError("--raney", "K and R must be >= 1");
                holds = check_raney_identity(k, rr, n);
                lhs = gap_product_closed(k, rr, n).str();
                rhs = to_string(Rat(Rat(factorial(k), Term(rr)) * raney(n + 1, rr, k)));
                name = "raney";
                statement = "P_" + std::to_string(n) + "(" + std::to_string(k) + "n+" + std::to_string(rr) + ") = (" +
                            std::to_string(k) + "!/" + std::to_string(rr) + ") * raney(" + std::to_string(n + 1) + "," +
                            std::to_string(rr) + "," + std::to_string(k) + ")";
                params = {{"k", k}, {"r", rr}, {"n", n}};
            }
            switch (o.format) {
                case Format::text:
                    out << statement << ": " << lhs << (holds ? " = " : " != ") << rhs << (holds ? " (holds)" : " (fails)")
                        << "\n";
                    break;
                case Format::csv: out << "identity,lhs,rhs,holds\n" << name << "," << lhs << "," << rhs << "," << holds << "\n"; break;
                case Format::json:
                    params["identity"] = name;
                    params["lhs"] = lhs;
                    params["rhs"] = rhs;
                    params["holds"] = holds;
                    out << params.dump() << "\n";
                    break;
            }
            return static_cast<int>(holds ? ExitCode::ok : ExitCode::mismatch);
        }

        if (table_cmd->parsed()) {
            std::vector<tables::Table> ts;
            if (table_kind == "figurate") ts = {tables::figurate_table()};
            if (table_kind == "fc") ts = {tables::fc_product_table(), tables::fc_number_table()};
            if (table_kind == "raney") ts = {tables::raney_product_table(), tables::raney_quotient_table()};
            if (table_kind == "horadam") ts = {tables::horadam_table()};
            json doc{{"command", "table"}, {"kind", table_kind}, {"tables", json::array()}};
            if (o.format == Format::csv) out << "table,row,column,value\n";
            for (const auto& t : ts) emit_table(o, t, doc);
            if (o.format == Format::json) out << doc.dump() << "\n";
            return 0;
        }

        if (oeis_cmd->parsed()) {
            const std::filesystem::path cache = cache_dir_text.empty() ? oeis::default_cache_dir() : std::filesystem::path(cache_dir_text);
            std::vector<OeisTarget> targets;
            if (!manifest_path.empty()) {
                targets = read_manifest(manifest_path);
            } else {
                if (spec_text.empty() || kind.empty() || id.empty())
                    throw CLI::ValidationError("check-oeis", "--spec, --kind and --id are required without --manifest");
                if (bfile_path.empty() && !fetch && !std::filesystem::exists(cache / oeis::bfile_name(id)))
                    throw CLI::ValidationError("check-oeis", "one of --bfile or --fetch is required (cache miss)");
                targets.push_back({spec_text, kind, id, bfile_path.empty() ? std::nullopt
                                                                           : std::optional<std::filesystem::path>(bfile_path)});
            }
            std::vector<std::future<oeis::CheckReport>> jobs;
            for (const auto& t : targets)
                jobs.push_back(std::async(std::launch::async, [&, t] { return check_target(t, fetch, cache, max_shift, oeis_count); }));
            std::vector<oeis::CheckReport> reports;
            for (auto& j : jobs) reports.push_back(j.get());

            bool all = true;
            json doc{{"command", "check-oeis"}, {"reports", json::array()}};
            if (o.format == Format::csv) out << "id,matched,shift,compared,mismatch_index,expected,got\n";
            for (const auto& rep : reports) {
                all = all && rep.matched;
                switch (o.format) {
                    case Format::text: out << report_text(rep) << "\n"; break;
                    case Format::json: doc["reports"].push_back(report_json(rep)); break;
                    case Format::csv:
                        out << rep.id << "," << rep.matched << "," << rep.shift << "," << rep.compared << ",";
                        if (rep.first_mismatch)
                            out << rep.first_mismatch->index << "," << rep.first_mismatch->expected << ","
                                << rep.first_mismatch->got;
                        else
                            out << ",,";
                        out << "\n";
                        break;
                }
            }
            if (o.format == Format::json) out << doc.dump() << "\n";
            return static_cast<int>(all ? ExitCode::ok : ExitCode::mismatch);
        }
    } catch (const SpecSyntaxError& e) {
        err << "error: invalid spec: " << e.what() << "\n" << spec_grammar_help();
        return static_cast<int>(ExitCode::usage);
    } catch (const InvalidSpec& e) {
        err << "error: invalid spec: " << e.what() << "\n" << spec_grammar_help();
        return static_cast<int>(ExitCode::usage);
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::usage);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::usage);
    }
    return static_cast<int>(ExitCode::usage);
}

}  // namespace gapseq::cli
