#pragma once

#include <cmath>
#include <ostream>
#include <utility>

#include "rootlab/errors.hpp"
#include "rootlab/real.hpp"

namespace rootlab {

// Scalar protocol for plain double, so generic scheme code can run over
// double-based complex numbers as well as Real-based ones.
inline bool is_zero(double x) { return x == 0.0; }
inline bool is_finite(double x) { return std::isfinite(x); }
inline double magnitude(double x) { return std::fabs(x); }

// Minimal complex number over a configurable real component type. T = double
// is the fast mode used for basin rendering; T = Real gives an arbitrary-
// precision complex scalar. Division uses Smith's algorithm, which branches
// on component magnitudes only, so conjugating both operands conjugates the
// result exactly, component by component.
template <typename T>
struct Cplx {
    using value_type = T;

    T re, im;

    Cplx() : re(0L), im(0L) {}
    Cplx(long v) : re(v), im(0L) {}
    Cplx(int v) : Cplx(static_cast<long>(v)) {}
    Cplx(T r) : re(std::move(r)), im(0L) {}
    Cplx(T r, T i) : re(std::move(r)), im(std::move(i)) {}
};

template <typename T>
bool is_zero(const Cplx<T>& z) {
    return is_zero(z.re) && is_zero(z.im);
}

template <typename T>
bool is_finite(const Cplx<T>& z) {
    return is_finite(z.re) && is_finite(z.im);
}

template <typename T>
Cplx<T> conj(const Cplx<T>& z) {
    return {z.re, -z.im};
}

inline double magnitude(const Cplx<double>& z) { return std::hypot(z.re, z.im); }
inline Real magnitude(const Cplx<Real>& z) { return sqrt(z.re * z.re + z.im * z.im); }

template <typename T>
Cplx<T> operator+(const Cplx<T>& a, const Cplx<T>& b) {
    return {a.re + b.re, a.im + b.im};
}

template <typename T>
Cplx<T> operator-(const Cplx<T>& a, const Cplx<T>& b) {
    return {a.re - b.re, a.im - b.im};
}

template <typename T>
Cplx<T> operator-(const Cplx<T>& a) {
    return {-a.re, -a.im};
}

template <typename T>
Cplx<T> operator*(const Cplx<T>& a, const Cplx<T>& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

template <typename T>
Cplx<T> operator/(const Cplx<T>& a, const Cplx<T>& b) {
    if (is_zero(b)) throw DivideByZero("complex division by exact zero");
    using std::abs;
    if (abs(b.re) >= abs(b.im)) {
        T t = b.im / b.re;
        T den = b.re + b.im * t;
        return {(a.re + a.im * t) / den, (a.im - a.re * t) / den};
    }
    T t = b.re / b.im;
    T den = b.re * t + b.im;
    return {(a.re * t + a.im) / den, (a.im * t - a.re) / den};
}

template <typename T>
bool operator==(const Cplx<T>& a, const Cplx<T>& b) {
    return a.re == b.re && a.im == b.im;
}

template <typename T>
bool operator!=(const Cplx<T>& a, const Cplx<T>& b) {
    return !(a == b);
}

template <typename T>
std::ostream& operator<<(std::ostream& os, const Cplx<T>& z) {
    return os << "(" << z.re << ", " << z.im << ")";
}

}  // namespace rootlab
