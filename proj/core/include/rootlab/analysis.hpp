#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rootlab/real.hpp"
#include "rootlab/schemes.hpp"

namespace rootlab {

// Computational order of convergence from three consecutive positive errors:
// ln(e3/e2) / ln(e2/e1). Throws std::invalid_argument when undefined (a
// nonpositive error or a zero log-ratio).
Real coc(const Real& e1, const Real& e2, const Real& e3);

struct CocEstimate {
    Real value;
    std::array<size_t, 3> window;  // indices of the errors used
};

// coc over the last three entries of an error sequence.
CocEstimate coc_of_errors(const std::vector<Real>& errors);

// One row of an error table: a method applied to a problem from a starting
// point, with the per-iteration errors rendered as three-significant-digit
// cells. After an early exit the remaining cells are "0" (the iteration has
// landed on a point whose f-value vanished); after a step error the
// remaining cells are the failure marker "---".
struct TableRow {
    std::string method;  // method label ("d2", "KT", ...)
    std::string problem;
    std::string x0;          // starting point literal
    std::string param;       // "", "A=1", "alpha=0.5", ...
    std::vector<std::string> cells;
    std::string coc_cell;              // "16.0000" style, or "---"
    std::optional<double> coc_value;   // measured coc when defined
    bool failed = false;
    std::string note;  // error message for failed rows
};

struct ErrorTable {
    std::vector<TableRow> rows;
    int iterations = 3;
    int digits = 300;
};

// A row request: method (with parameters) x problem, with an optional
// starting-point override replacing the problem's default.
struct RowSpec {
    MethodId method;
    std::string problem;
    std::optional<std::string> x0;
};

// Runs every row at the given precision and renders the table. Rows are
// independent and run in parallel when the MPFR build has thread-local
// caches; assembly order is the request order either way.
ErrorTable error_table(const std::vector<RowSpec>& rows, int iterations, int digits);

// Convenience: one problem, many methods (the comparison-table layout).
ErrorTable error_table(const std::vector<MethodId>& methods, const std::string& problem,
                       int iterations, int digits);

std::string to_markdown(const ErrorTable& table);
std::string to_csv(const ErrorTable& table);

// A stored reference row. `cells` are the published three-digit values;
// `coc` is the published coc (or the declared order for rows checked only
// by order); `value_check` is "cells" or "none"; `coc_rule` is "pm0.05",
// "pm0.5" or "min15.5".
struct GoldenRow {
    std::string method;
    std::string problem;
    std::string x0;
    std::string param;
    int digits = 0;
    std::array<std::string, 3> cells;
    double coc = 0.0;
    std::string value_check;
    std::string coc_rule;
};

struct GoldenTable {
    std::string id;  // derived from the file name, e.g. "table5"
    std::vector<GoldenRow> rows;
};

GoldenTable load_golden_csv(const std::string& path);  // throws std::runtime_error

// The MethodId a golden row calls for (label plus parameter column).
MethodId method_for_row(const GoldenRow& row);

// The row requests that regenerate a stored table (same methods, problems,
// starting points and order as the golden rows).
std::vector<RowSpec> recipe_for(const GoldenTable& golden);

// Cell agreement rule for golden comparison: exponents equal and the first
// two significant digits equal ("0.380e-20" vs "0.3804e-20" agrees). Exact
// zeros only match exact zeros.
bool cell_agrees(const std::string& golden_cell, const std::string& computed_cell);

struct DiffReport {
    bool ok = true;
    int rows = 0;
    int cells_checked = 0;
    int coc_checked = 0;
    std::vector<std::string> mismatches;
    std::vector<std::string> notes;  // non-failing remarks
};

// Compares a regenerated table against a stored reference, applying each
// row's value_check and coc_rule. Throws std::invalid_argument on shape
// mismatch (different row count or misaligned method/problem pairs).
DiffReport compare_to_golden(const ErrorTable& table, const GoldenTable& golden);

}  // namespace rootlab
