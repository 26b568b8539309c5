#pragma once

#include <mpfr.h>

#include <iosfwd>
#include <string>

#include "rootlab/errors.hpp"
#include "rootlab/precision.hpp"

namespace rootlab {

// Arbitrary-precision real number backed by MPFR. Results of every
// operation are produced at the working precision current at the time of
// the call (see PrecisionContext); copies preserve the source's precision
// exactly. Division by an exact zero throws DivideByZero instead of
// propagating an infinity.
class Real {
  public:
    Real() { mpfr_init2(v_, mpfr_get_default_prec()); }  // NaN, like an uninitialized mpfr_t
    Real(long v) { mpfr_init2(v_, mpfr_get_default_prec()); mpfr_set_si(v_, v, MPFR_RNDN); }
    Real(int v) : Real(static_cast<long>(v)) {}
    Real(double v) { mpfr_init2(v_, mpfr_get_default_prec()); mpfr_set_d(v_, v, MPFR_RNDN); }

    // Parses a decimal literal ("0.03", "1e-20", "-3.5") at working precision.
    explicit Real(const std::string& decimal);

    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real pi();

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    long precision_bits() const { return mpfr_get_prec(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Full-precision decimal rendering that round-trips through the parsing
    // constructor at the same working precision.
    std::string str() const;

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    friend Real operator-(const Real& a);

    Real& operator+=(const Real& o) { *this = *this + o; return *this; }
    Real& operator-=(const Real& o) { *this = *this - o; return *this; }
    Real& operator*=(const Real& o) { *this = *this * o; return *this; }
    Real& operator/=(const Real& o) { *this = *this / o; return *this; }

    // Comparisons are IEEE-like: any comparison with NaN is false.
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return mpfr_lessgreater_p(a.v_, b.v_) != 0; }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

  private:
    mpfr_t v_;
};

inline Real operator+(const Real& a, long b) { return a + Real(b); }
inline Real operator+(long a, const Real& b) { return Real(a) + b; }
inline Real operator-(const Real& a, long b) { return a - Real(b); }
inline Real operator-(long a, const Real& b) { return Real(a) - b; }
inline Real operator*(const Real& a, long b) { return a * Real(b); }
inline Real operator*(long a, const Real& b) { return Real(a) * b; }
inline Real operator/(const Real& a, long b) { return a / Real(b); }
inline Real operator/(long a, const Real& b) { return Real(a) / b; }

Real abs(const Real& x);
Real sqrt(const Real& x);   // throws DomainError for negative x
Real log(const Real& x);    // natural log; throws DomainError for x <= 0
Real exp(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real pow_si(const Real& x, long n);  // integer power

// Generic scalar protocol shared with the complex type.
inline bool is_zero(const Real& x) { return x.is_zero(); }
inline bool is_finite(const Real& x) { return x.is_finite(); }
inline Real magnitude(const Real& x) { return abs(x); }

std::ostream& operator<<(std::ostream& os, const Real& x);

}  // namespace rootlab
