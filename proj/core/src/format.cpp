#include "rootlab/format.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "rootlab/errors.hpp"

namespace rootlab {

std::string render_cell(const Real& x, int digits) {
    if (digits < 1) throw std::invalid_argument("render_cell needs at least one digit");
    if (!x.is_finite()) throw NonFiniteValue("cannot render a non-finite value");
    if (x.is_zero()) return "0";

    // The published tables truncate mantissas rather than round them (their
    // 0.499901... prints as 0.499). Reproduce that: render correctly rounded
    // with six guard digits, then cut the digit string. The guard digits keep
    // values that are exact in decimal ("0.0025") from slipping a digit when
    // their binary representation sits a hair below the decimal.
    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits) + 6, x.raw(), MPFR_RNDN);
    std::string body(s);
    mpfr_free_str(s);

    std::string out;
    if (!body.empty() && body[0] == '-') {
        out += '-';
        body.erase(0, 1);
    }
    body.resize(static_cast<size_t>(digits));
    out += "0.";
    out += body;
    out += 'e';
    if (e >= 0) out += '+';
    out += std::to_string(static_cast<long>(e));
    return out;
}

Cell parse_cell(const std::string& s) {
    auto bad = [&]() -> Cell { throw std::invalid_argument("not a table cell: '" + s + "'"); };

    Cell c;
    size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        c.negative = (s[i] == '-');
        ++i;
    }
    if (s.substr(i) == "0") {
        c.is_zero = true;
        c.negative = false;
        return c;
    }
    if (i + 1 >= s.size() || s[i] != '0' || s[i + 1] != '.') return bad();
    i += 2;
    size_t digit_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        c.mantissa = c.mantissa * 10 + (s[i] - '0');
        ++i;
    }
    c.mantissa_digits = static_cast<int>(i - digit_start);
    if (c.mantissa_digits == 0 || c.mantissa_digits > 18) return bad();
    if (i >= s.size() || (s[i] != 'e' && s[i] != 'E')) return bad();
    ++i;
    size_t pos = 0;
    try {
        c.exponent = std::stol(s.substr(i), &pos);
    } catch (const std::exception&) {
        return bad();
    }
    if (pos != s.size() - i) return bad();
    return c;
}

bool cells_match(const std::string& a, const std::string& b, long mantissa_tol) {
    Cell ca = parse_cell(a);
    Cell cb = parse_cell(b);
    if (ca.is_zero || cb.is_zero) return ca.is_zero == cb.is_zero;
    if (ca.negative != cb.negative) return false;
    if (ca.exponent != cb.exponent) return false;
    // Align mantissas that were printed with different digit counts.
    long ma = ca.mantissa, mb = cb.mantissa;
    int da = ca.mantissa_digits, db = cb.mantissa_digits;
    while (da < db) { ma *= 10; ++da; }
    while (db < da) { mb *= 10; ++db; }
    long diff = ma > mb ? ma - mb : mb - ma;
    return diff <= mantissa_tol;
}

namespace {

long decimal_exponent(const Real& x) {
    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, 0, x.raw(), MPFR_RNDN);
    mpfr_free_str(s);
    return static_cast<long>(e);
}

}  // namespace

int sig_digit_agreement(const Real& a, const Real& b) {
    int full = current_decimal_digits();
    if (!a.is_finite() || !b.is_finite()) return 0;
    if (a == b) return full;
    if (a.is_zero() || b.is_zero()) return 0;
    if (a.sign() != b.sign()) return 0;
    if (decimal_exponent(a) != decimal_exponent(b)) return 0;

    Real diff = abs(a - b);
    Real scale = abs(a) > abs(b) ? abs(a) : abs(b);
    Real ratio = diff / scale;
    if (ratio.is_zero()) return full;
    if (ratio >= Real(1)) return 0;

    Real digits = -(log(ratio) / log(Real(10)));
    double d = std::floor(digits.to_double());
    if (d <= 0) return 0;
    if (d >= full) return full;
    return static_cast<int>(d);
}

}  // namespace rootlab
