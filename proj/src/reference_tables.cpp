#include "gapseq/reference_tables.hpp"

#include "gapseq/combinatorics.hpp"
#include "gapseq/gaps.hpp"

namespace gapseq::tables {
namespace {

Rat n_(std::uint64_t n) { return Rat(n); }

std::string join(const auto& values) {
    std::string s;
    for (const auto& v : values) {
        if (!s.empty()) s += ", ";
        s += to_string(v);
    }
    return s;
}

std::vector<std::string> strings(const std::vector<Term>& v) {
    std::vector<std::string> out;
    for (const auto& t : v) out.push_back(t.str());
    return out;
}

std::vector<std::string> columns_n(std::size_t count) {
    std::vector<std::string> c;
    for (std::size_t n = 0; n < count; ++n) c.push_back("n=" + std::to_string(n));
    return c;
}

const char* kn_label(std::uint64_t k, std::uint64_t r) {
    static const char* plus1[] = {"1", "n+1", "2n+1", "3n+1", "4n+1", "5n+1"};
    static const char* plus2[] = {"2", "n+2", "2n+2", "3n+2", "4n+2", "5n+2"};
    return r == 1 ? plus1[k] : plus2[k];
}

// Diffs a computed row against the printed cells and records every disagreement.
void diff_row(Table& t, const std::string& label, const std::vector<std::string>& printed,
              const std::vector<std::string>& computed, const std::string& note) {
    for (std::size_t i = 0; i < printed.size() && i < computed.size(); ++i)
        if (printed[i] != computed[i]) t.corrections.push_back({label + ", n=" + std::to_string(i), printed[i], computed[i], note});
}

}  // namespace

Poly one_minus_x_pow(unsigned k) { return pow(Poly{1, -1}, k); }

std::vector<FigurateRow> figurate_rows() {
    using family::Binomial;
    using family::Poly;
    auto gf = [](gapseq::Poly num, unsigned k) { return RatFunc(std::move(num), one_minus_x_pow(k)); };
    std::vector<FigurateRow> rows;
    rows.push_back({"n^2", Poly{{0, 0, 1}}, gf({0, 1, 1}, 3), "2n^3 + 2n^2 + n",
                    [](std::uint64_t n) -> Rat { return 2 * n_(n) * n * n + 2 * n_(n) * n + n; }, {},
                    gf(gapseq::Poly{0, 1, 1} * gapseq::Poly{5, 1}, 4)});
    rows.push_back({"n(n+1)/2", Poly{{0, Rat(1, 2), Rat(1, 2)}}, gf({0, 1}, 3), "n(n+1)^2/2",
                    [](std::uint64_t n) -> Rat { return n_(n) * (n + 1) * (n + 1) / 2; }, {}, gf({0, 2, 1}, 4)});
    rows.push_back({"n(n+1)", Poly{{0, 1, 1}}, gf({0, 2}, 3), "(2n+1)(n+1)^2",
                    [](std::uint64_t n) -> Rat { return n_(2 * n + 1) * (n + 1) * (n + 1); }, {}, gf({1, 8, 3}, 4)});
    rows.push_back({"n(3n+1)/2", Poly{{0, Rat(1, 2), Rat(3, 2)}}, gf({0, 2, 1}, 3), "(3n+1)(3n^2+4n+2)/2",
                    [](std::uint64_t n) -> Rat { return n_(3 * n + 1) * (3 * n_(n) * n + 4 * n + 2) / 2; }, {},
                    gf({1, 14, 11, 1}, 4)});
    rows.push_back({"C(n+2,3)", Binomial{2, 3}, gf({0, 1}, 4), "n(n+1)(n+2)(n+3)(2n+3)/4!",
                    [](std::uint64_t n) -> Rat { return n_(n) * (n + 1) * (n + 2) * (n + 3) * (2 * n + 3) / 24; }, {},
                    gf({0, 5, 5}, 6)});
    rows.push_back({"C(n+3,4)", Binomial{3, 4}, gf({0, 1}, 5), "n(n+1)(n+2)^2(n+3)(n^2+6n+11)/144",
                    [](std::uint64_t n) -> Rat {
                        return n_(n) * (n + 1) * (n + 2) * (n + 2) * (n + 3) * (n_(n) * n + 6 * n + 11) / 144;
                    },
                    {}, gf({0, 9, 18, 7, 1}, 8)});
    rows.push_back({"n(3n-1)/2", Poly{{0, Rat(-1, 2), Rat(3, 2)}}, gf({0, 1, 2}, 3), "3n(3n^2+2n+1)/3",
                    [](std::uint64_t n) -> Rat { return 3 * n_(n) * (3 * n_(n) * n + 2 * n + 1) / 3; },
                    [](std::uint64_t n) -> Rat { return 3 * n_(n) * (3 * n_(n) * n + 2 * n + 1) / 2; },
                    gf({0, 9, 15, 3}, 4)});
    for (auto& r : rows)
        if (!r.corrected_closed) r.corrected_closed = r.printed_closed;
    return rows;
}

std::vector<HoradamRow> horadam_rows() {
    auto T = [](std::initializer_list<long long> v) {
        std::vector<Term> out;
        for (auto x : v) out.emplace_back(x);
        return out;
    };
    std::vector<HoradamRow> rows;
    rows.push_back({"F_{n+1}", {1, 1, 1, 1},
                    RatFunc(-Poly{1, -3, -1, 1}, Poly{1, -1, -1} * Poly{1, -2, -2, 1}),
                    T({-1, 0, 0, 4, 13, 42, 119, 330})});
    rows.push_back({"J_{n+1}", {1, 1, 1, 2}, RatFunc(-Poly{1, -6}, Poly{1, -2} * Poly{1, -2, -8}),
                    T({-1, 2, 4, 40, 144, 672, 2624, 10880})});
    rows.push_back({"P_{n+1}", {1, 2, 2, 1},
                    RatFunc(Poly{0, 7, 2, -1}, Poly{1, -2, -1} * Poly{1, -5, -5, 1}),
                    T({0, 7, 51, 328, 1980, 11711, 68663, 401184})});
    rows.push_back({"a_n(1,2,2,2)", {1, 2, 2, 2},
                    RatFunc(Poly{0, 3} * Poly{4, 1, -2}, Poly{1, -2, -2} * Poly{1, -6, -12, 8}),
                    T({0, 12, 99, 810, 6150, 46368, 347004})});
    return rows;
}

Table figurate_table(std::size_t columns) {
    Table t{"Gap-sums of figurate numbers", {"a_n", "g.f. of a_n", "S_n", "g.f. of S_n", "first terms"}, {}, {}};
    constexpr std::uint64_t kCheck = 50;
    for (const auto& row : figurate_rows()) {
        const auto sums = gap_sums(row.spec, 0, kCheck + 1);
        const auto expansion = rf_expand(row.gapsum_gf, kCheck + 1);
        const auto seq_expansion = rf_expand(row.sequence_gf, kCheck + 1);
        const auto seq = terms(row.spec, 0, kCheck + 1);
        for (std::uint64_t n = 0; n <= kCheck; ++n) {
            if (row.corrected_closed(n) != Rat(sums[n])) {
                t.corrections.push_back({row.label + " S_n, n=" + std::to_string(n), to_string(row.corrected_closed(n)),
                                         sums[n].str(), "closed form disagrees with the enumerated gap-sum"});
                break;
            }
        }
        for (std::uint64_t n = 0; n <= kCheck; ++n) {
            if (row.printed_closed(n) != row.corrected_closed(n)) {
                t.corrections.push_back({row.label + " S_n", row.closed_form, "3n(3n^2+2n+1)/2",
                                         "printed form gives " + to_string(row.printed_closed(n)) + " at n=" +
                                             std::to_string(n) + ", the gap-sum is " + sums[n].str()});
                break;
            }
        }
        for (std::uint64_t n = 0; n <= kCheck; ++n) {
            if (expansion[n] != Rat(sums[n]) || seq_expansion[n] != Rat(seq[n])) {
                t.corrections.push_back({row.label + " g.f., n=" + std::to_string(n), to_string(expansion[n]),
                                         sums[n].str(), "generating function expansion disagrees"});
                break;
            }
        }
        const bool corrected = row.printed_closed(1) != row.corrected_closed(1);
        std::vector<Term> head(sums.begin(), sums.begin() + static_cast<std::ptrdiff_t>(columns));
        t.rows.push_back({row.label,
                          {to_string(row.sequence_gf), corrected ? "3n(3n^2+2n+1)/2" : row.closed_form,
                           to_string(row.gapsum_gf), join(head)}});
    }
    return t;
}

Table fc_product_table() {
    Table t{"Gap-products of kn+1", columns_n(6), {}, {}};
    const std::vector<std::vector<std::string>> printed = {
        {"1", "1", "1", "1", "1", "1"},
        {"1", "1", "1", "1", "1", "1"},
        {"2", "4", "6", "8", "10", "12"},
        {"6", "30", "72", "132", "210", "306"},
        {"24", "336", "1320", "6840", "12144", "19656"},
        {"120", "5040", "32760", "116280", "303600", "657720"},
    };
    for (std::uint64_t k = 0; k <= 5; ++k) {
        const auto cells = strings(gap_products(family::Linear{k, 1}, 0, 6));
        diff_row(t, kn_label(k, 1), printed[k], cells,
                 k == 4 ? "printed row skips n=3 (14*15*16 = 3360); later printed cells are n=4..6" : "");
        t.rows.push_back({kn_label(k, 1), cells});
    }
    t.corrections.push_back({"identity", "P_n = k! FC(k,n)", "P_n = k! fc(n,k)",
                             "orientation that matches every cell; fc(p,m) = C((p+1)m,m)/(pm+1)"});
    return t;
}

Table fc_number_table() {
    Table t{"Fuss-Catalan numbers fc(n,k) = P_n(kn+1)/k!", columns_n(6), {}, {}};
    const std::vector<std::vector<std::string>> printed = {
        {"1", "1", "1", "1", "1", "1"},       {"1", "1", "1", "1", "1", "1"},
        {"1", "2", "3", "4", "5", "6"},       {"1", "5", "12", "22", "35", "51"},
        {"1", "14", "55", "140", "285", "506"}, {"1", "42", "273", "969", "2530", "5481"},
    };
    for (std::uint64_t k = 0; k <= 5; ++k) {
        std::vector<std::string> cells;
        for (std::uint64_t n = 0; n < 6; ++n) cells.push_back(fuss_catalan(n, k).str());
        diff_row(t, kn_label(k, 1), printed[k], cells, "");
        t.rows.push_back({kn_label(k, 1), cells});
    }
    return t;
}

Table raney_product_table() {
    Table t{"Gap-products of kn+2", columns_n(6), {}, {}};
    const std::vector<std::vector<std::string>> printed = {
        {"1/2", "1/2", "1/2", "1/2", "1/2", "1/2"},
        {"1", "1", "1", "1", "1", "1"},
        {"3", "5", "7", "9", "11", "13"},
        {"12", "42", "90", "156", "240", "342"},
        {"60", "504", "1716", "4080", "7980", "13800"},
        {"360", "7920", "43680", "143640", "358800", "755160"},
    };
    for (std::uint64_t k = 0; k <= 5; ++k) {
        const auto cells = strings(gap_products(family::Linear{k, 2}, 0, 6));
        diff_row(t, kn_label(k, 2), printed[k], cells,
                 k == 0 ? "1/2 is the factorial ratio k! C((n+1)k+1,k)/(kn+2); the gap of a constant sequence is empty"
                        : "");
        t.rows.push_back({kn_label(k, 2), cells});
    }
    t.corrections.push_back({"row label", "5n+1", "5n+2", "the printed values are the gap-products of 5n+2"});
    t.corrections.push_back({"identity", "P_n = (k!/r) R_{k+1,r}(n)", "P_n = (k!/r) R_{n+1,r}(k)",
                             "orientation that matches every cell"});
    return t;
}

Table raney_quotient_table() {
    Table t{"Raney numbers R_{n+1,2}(k) = P_n(kn+2)/(k!/2)", columns_n(6), {}, {}};
    const std::vector<std::vector<std::string>> printed = {
        {"1", "1", "1", "1", "1", "1"},         {"2", "2", "2", "2", "2", "2"},
        {"3", "5", "7", "9", "11", "13"},       {"4", "14", "30", "52", "80", "114"},
        {"5", "42", "143", "340", "665", "1150"}, {"6", "136", "728", "2394", "5980", "12586"},
    };
    for (std::uint64_t k = 0; k <= 5; ++k) {
        std::vector<std::string> cells;
        for (std::uint64_t n = 0; n < 6; ++n) cells.push_back(to_string(raney(n + 1, 2, k)));
        diff_row(t, kn_label(k, 2), printed[k], cells, k == 5 ? "7920/60 = 132" : "");
        t.rows.push_back({kn_label(k, 2), cells});
    }
    return t;
}

Table horadam_table(std::size_t columns) {
    Table t{"Gap-sums of Horadam sequences", {"sequence", "g.f.", "g.f. of gap-sum", "first terms"}, {}, {}};
    for (const auto& row : horadam_rows()) {
        const RatFunc built = horadam_gapsum_gf(row.params);
        const auto a = row.params;
        const auto sums = gap_sums(family::Horadam{a.alpha, a.beta, a.r, a.s}, 0, columns, GapSumKind::signed_);
        if (built != row.printed_gapsum_gf)
            t.corrections.push_back({row.label + " g.f.", to_string(row.printed_gapsum_gf), to_string(built),
                                     "printed generating function differs from (W-X-Y-Z)/2"});
        const std::vector<std::string> printed = strings(row.printed_terms);
        diff_row(t, row.label, printed, strings(sums), "");
        t.rows.push_back({row.label, {to_string(horadam_gf(row.params)), to_string(built), join(sums)}});
    }
    t.corrections.push_back({"proposition", "W - X - Y - Z", "(W - X - Y - Z)/2",
                             "the halving is required by S_n = (a_{n+1}^2 - a_n^2 - a_n - a_{n+1})/2"});
    return t;
}

}  // namespace gapseq::tables
