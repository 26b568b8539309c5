#include "rootlab/precision.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rootlab {

namespace {
// 64 guard bits absorb rounding noise from chained transcendental calls so
// the advertised decimal digits stay meaningful.
constexpr long kGuardBits = 64;

thread_local long t_current_digits = kMinDecimalDigits;
}  // namespace

long digits_to_bits(long decimal_digits) {
    // log2(10) rounded up a hair; exact conversion error is < 1 bit per
    // 10^15 digits, far below the guard margin.
    return static_cast<long>(std::ceil(decimal_digits * 3.3219280948873626)) + kGuardBits;
}

long current_decimal_digits() { return t_current_digits; }

PrecisionContext::PrecisionContext(long decimal_digits) : digits_(decimal_digits) {
    if (decimal_digits < kMinDecimalDigits) {
        throw std::invalid_argument("working precision must be at least " +
                                    std::to_string(kMinDecimalDigits) + " decimal digits, got " +
                                    std::to_string(decimal_digits));
    }
    saved_digits_ = t_current_digits;
    saved_prec_ = mpfr_get_default_prec();
    t_current_digits = decimal_digits;
    mpfr_set_default_prec(digits_to_bits(decimal_digits));
}

PrecisionContext::~PrecisionContext() {
    t_current_digits = saved_digits_;
    mpfr_set_default_prec(saved_prec_);
}

}  // namespace rootlab
