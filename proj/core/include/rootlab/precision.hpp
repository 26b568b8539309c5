#pragma once

#include <mpfr.h>

#include <utility>

namespace rootlab {

// Working precision is expressed in significant decimal digits and applied
// through MPFR's default precision, which is thread-local. Every Real
// operation produces its result at the precision current at that moment.

// Minimum accepted working precision (double-precision territory).
inline constexpr long kMinDecimalDigits = 16;

// Bits needed for `decimal_digits` significant digits, plus guard bits so
// that chained operations keep the requested digits trustworthy.
long digits_to_bits(long decimal_digits);

// Decimal digits requested by the innermost active PrecisionContext of this
// thread (kMinDecimalDigits when none is active).
long current_decimal_digits();

// Scoped precision: construction switches this thread's working precision,
// destruction restores the previous one. Non-copyable, stack-like use only.
class PrecisionContext {
  public:
    explicit PrecisionContext(long decimal_digits);  // throws std::invalid_argument if < 16
    ~PrecisionContext();

    PrecisionContext(const PrecisionContext&) = delete;
    PrecisionContext& operator=(const PrecisionContext&) = delete;

    long decimal_digits() const { return digits_; }

  private:
    long digits_;
    long saved_digits_;
    mpfr_prec_t saved_prec_;
};

// Runs `fn` under a PrecisionContext and returns its result.
template <class Fn>
auto with_precision(long decimal_digits, Fn&& fn) {
    PrecisionContext scope(decimal_digits);
    return std::forward<Fn>(fn)();
}

}  // namespace rootlab
