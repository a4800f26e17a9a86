#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gapseq/genfun.hpp"
#include "gapseq/ratfunc.hpp"
#include "gapseq/sequences.hpp"
#include "gapseq/term.hpp"

// Published tables on gap-sums and gap-products, transcribed cell by cell,
// alongside the values this library computes for the same cells.
namespace gapseq::tables {

struct Correction {
    std::string where;
    std::string printed;
    std::string computed;
    std::string note;
};

struct Row {
    std::string label;
    std::vector<std::string> cells;
};

struct Table {
    std::string title;
    std::vector<std::string> columns;
    std::vector<Row> rows;
    std::vector<Correction> corrections;
};

/// One row of the figurate-number gap-sum table.
struct FigurateRow {
    std::string label;         ///< a_n as printed
    SeqSpec spec;
    RatFunc sequence_gf;       ///< printed g.f. of a_n
    std::string closed_form;   ///< printed S_n
    std::function<Rat(std::uint64_t)> printed_closed;
    std::function<Rat(std::uint64_t)> corrected_closed;  ///< equals printed_closed unless the row is corrected
    RatFunc gapsum_gf;         ///< printed g.f. of S_n
};

std::vector<FigurateRow> figurate_rows();

/// (1 - x)^k
Poly one_minus_x_pow(unsigned k);

struct HoradamRow {
    std::string label;
    HoradamParams params;
    RatFunc printed_gapsum_gf;
    std::vector<Term> printed_terms;
};

/// F_{n+1}, J_{n+1}, P_{n+1} and the (1,2,2,2) example.
std::vector<HoradamRow> horadam_rows();

Table figurate_table(std::size_t columns = 8);
Table fc_product_table();
Table fc_number_table();
Table raney_product_table();
Table raney_quotient_table();
Table horadam_table(std::size_t columns = 8);

}  // namespace gapseq::tables
