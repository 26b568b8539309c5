#pragma once

#include <string>

#include "rootlab/real.hpp"

namespace rootlab {

// Error-table cell format: three significant digits as "0.380e-20", meaning
// 0.380 * 10^-20. Exact zero renders as "0". Mantissa digits are truncated,
// not rounded (0.499901 prints as "0.499"), matching the published tables.
std::string render_cell(const Real& x, int digits = 3);

struct Cell {
    bool is_zero = false;
    bool negative = false;
    long mantissa = 0;       // integer reading of the printed digits, e.g. 380
    int mantissa_digits = 0; // how many digits were printed
    long exponent = 0;       // power of ten: value = 0.<digits> * 10^exponent
};

// Parses "0", "0.380e-20", "-0.5e3". Throws std::invalid_argument otherwise.
Cell parse_cell(const std::string& s);

// Two cells agree when their exponents match and the printed mantissas differ
// by at most `mantissa_tol` units in the last of three digits. That absorbs
// the half-ulp wobble produced by rounding a continued computation at a
// slightly different precision.
bool cells_match(const std::string& a, const std::string& b, long mantissa_tol = 5);

// Number of leading significant decimal digits on which a and b agree,
// clamped to [0, current working digits]. Identical values score the full
// working precision; values with different decimal exponents score 0.
int sig_digit_agreement(const Real& a, const Real& b);

}  // namespace rootlab
