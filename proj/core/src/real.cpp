#include "rootlab/real.hpp"

#include <ostream>
#include <stdexcept>

namespace rootlab {

Real::Real(const std::string& decimal) {
    mpfr_init2(v_, mpfr_get_default_prec());
    if (decimal.empty() || mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(v_);
        throw std::invalid_argument("not a decimal number: '" + decimal + "'");
    }
}

Real Real::pi() {
    Real r;
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

std::string Real::str() const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    if (mpfr_zero_p(v_)) return "0";

    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, 0, v_, MPFR_RNDN);
    std::string digits(s);
    mpfr_free_str(s);

    std::string out;
    if (!digits.empty() && digits[0] == '-') {
        out += '-';
        digits.erase(0, 1);
    }
    out += "0.";
    out += digits;
    out += 'e';
    out += std::to_string(static_cast<long>(e));
    return out;
}

Real operator+(const Real& a, const Real& b) {
    Real r;
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b) {
    Real r;
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b) {
    Real r;
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b) {
    if (b.is_zero()) throw DivideByZero("division by zero");
    Real r;
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a) {
    Real r;
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Real abs(const Real& x) {
    Real r;
    mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real sqrt(const Real& x) {
    if (!x.is_nan() && x.sign() < 0) throw DomainError("square root of a negative number");
    Real r;
    mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real log(const Real& x) {
    if (!x.is_nan() && x.sign() <= 0) throw DomainError("logarithm of a non-positive number");
    Real r;
    mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real exp(const Real& x) {
    Real r;
    mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real sin(const Real& x) {
    Real r;
    mpfr_sin(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real cos(const Real& x) {
    Real r;
    mpfr_cos(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real pow_si(const Real& x, long n) {
    if (n < 0 && x.is_zero()) throw DivideByZero("zero raised to a negative power");
    Real r;
    mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
    return r;
}

std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.str(); }

}  // namespace rootlab
