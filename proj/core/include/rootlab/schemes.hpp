#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "rootlab/complex.hpp"
#include "rootlab/errors.hpp"
#include "rootlab/precision.hpp"
#include "rootlab/problems.hpp"
#include "rootlab/real.hpp"
#include "rootlab/weights.hpp"

namespace rootlab {

// A root-finding target over an abstract scalar field S: the function and
// its analytic first derivative.
template <typename S>
struct Target {
    std::function<S(const S&)> f;
    std::function<S(const S&)> df;
};

inline Target<Real> target_of(const Problem& p) { return {p.f, p.df}; }

template <typename S>
Target<S> target_of(const ComplexProblem& cp) {
    std::vector<long> coef = cp.coefficients;
    return {[coef](const S& z) { return poly_eval(coef, z); },
            [coef](const S& z) { return poly_deriv_eval(coef, z); }};
}

// The real-valued magnitude type of a scalar field (Real for Real,
// double for Cplx<double>, ...).
template <typename S>
using Mag = decltype(magnitude(std::declval<S>()));

enum class MethodKind {
    newton,          // order 2
    two_point,       // order 4, parameterized by a weight family's G
    three_point_W1,  // order 8, G and H of the first weight family
    kung_traub8,     // order 8
    neta8,           // order 8, free parameter A
    khattri,         // order 8, free parameter alpha
    four_point_W1,   // order 16
    four_point_W2,   // order 16
    four_point_W3,   // order 16
    kung_traub16,    // order 16
    neta16,          // order 16, free parameter A
    geum_kim1,       // order 16
    geum_kim2,       // order 16
};

struct MethodId {
    MethodKind kind = MethodKind::newton;
    WeightFamily two_point_family = WeightFamily::W1;  // used by two_point only
    double neta_a = 0.0;                               // neta8/neta16 parameter
    double khattri_alpha = 1.0;                        // khattri parameter

    MethodId() = default;
    MethodId(MethodKind k) : kind(k) {}
};

const std::vector<MethodKind>& all_method_kinds();
std::string method_label(MethodKind k);                       // CLI vocabulary: "d2", "KT", ...
MethodKind method_kind_from_label(const std::string& label);  // throws std::invalid_argument
int declared_order(MethodKind k);
int eval_budget(MethodKind k);  // f plus f' evaluations per full iteration

// Result of one iteration: the next iterate, whatever intermediate points
// and ratios the scheme produced, the early-exit flag (set when some
// f-value vanished exactly, making that point the returned iterate), and
// instrumented evaluation counts.
template <typename S>
struct StepOutcome {
    S next;
    std::optional<S> y, z, w;
    std::optional<S> t, s, u, p, q, r;
    bool early_exit = false;
    char early_exit_stage = 0;  // 'x', 'a', 'y', 'z' or 'w'
    int f_evals = 0;
    int fp_evals = 0;
};

namespace detail {

// Converts a double-valued method parameter into the working scalar field.
// Spelled out so Cplx<Real> goes through Real and not a narrowing
// double-to-long constructor pick.
template <typename S>
S scalar_of(double v) {
    if constexpr (std::is_same_v<S, Cplx<Real>>) {
        return Cplx<Real>(Real(v));
    } else {
        return S(v);
    }
}

template <typename S>
S eval_f(const Target<S>& tgt, const S& x, StepOutcome<S>& out) {
    S v = tgt.f(x);
    ++out.f_evals;
    if (!is_finite(v)) throw NonFiniteValue("f evaluated to a non-finite value");
    return v;
}

template <typename S>
S eval_df(const Target<S>& tgt, const S& x, StepOutcome<S>& out) {
    S v = tgt.df(x);
    ++out.fp_evals;
    if (!is_finite(v)) throw NonFiniteValue("f' evaluated to a non-finite value");
    if (is_zero(v)) throw ZeroDerivative();
    return v;
}

template <typename S>
void require_nonzero(const S& v, const char* what) {
    if (is_zero(v)) throw DegenerateGeometry(std::string(what) + " vanished");
}

template <typename S>
const S& require_finite(const S& v) {
    if (!is_finite(v)) throw NonFiniteValue();
    return v;
}

template <typename S>
bool exit_if_zero(StepOutcome<S>& out, const S& fv, const S& point, char stage) {
    if (!is_zero(fv)) return false;
    out.next = point;
    out.early_exit = true;
    out.early_exit_stage = stage;
    return true;
}

}  // namespace detail

template <typename S>
StepOutcome<S> newton_step(const Target<S>& tgt, const S& x) {
    StepOutcome<S> out;
    S fx = detail::eval_f(tgt, x, out);
    S dfx = detail::eval_df(tgt, x, out);
    out.next = detail::require_finite(x - fx / dfx);
    return out;
}

template <typename S>
StepOutcome<S> two_point_step(const Target<S>& tgt, const S& x, const WeightSet<S>& W) {
    StepOutcome<S> out;
    S fx = detail::eval_f(tgt, x, out);
    if (detail::exit_if_zero(out, fx, x, 'x')) return out;
    S dfx = detail::eval_df(tgt, x, out);
    S y = detail::require_finite(x - fx / dfx);
    out.y = y;
    S fy = detail::eval_f(tgt, y, out);
    if (detail::exit_if_zero(out, fy, y, 'y')) return out;
    S t = fy / fx;
    out.t = t;
    out.next = detail::require_finite(y - W.G(t) * fy / dfx);
    return out;
}

template <typename S>
StepOutcome<S> three_point_step(const Target<S>& tgt, const S& x, const WeightSet<S>& W) {
    StepOutcome<S> out;
    S fx = detail::eval_f(tgt, x, out);
    if (detail::exit_if_zero(out, fx, x, 'x')) return out;
    S dfx = detail::eval_df(tgt, x, out);
    S y = detail::require_finite(x - fx / dfx);
    out.y = y;
    S fy = detail::eval_f(tgt, y, out);
    if (detail::exit_if_zero(out, fy, y, 'y')) return out;
    S t = fy / fx;
    out.t = t;
    S z = detail::require_finite(y - W.G(t) * fy / dfx);
    out.z = z;
    S fz = detail::eval_f(tgt, z, out);
    if (detail::exit_if_zero(out, fz, z, 'z')) return out;
    S s = fz / fy;
    S u = fz / fx;
    out.s = s;
    out.u = u;
    out.next = detail::require_finite(z - W.H(t, s, u) * fz / dfx);
    return out;
}

template <typename S>
StepOutcome<S> four_point_step(const Target<S>& tgt, const S& x, const WeightSet<S>& W) {
    StepOutcome<S> out;
    S fx = detail::eval_f(tgt, x, out);
    if (detail::exit_if_zero(out, fx, x, 'x')) return out;
    S dfx = detail::eval_df(tgt, x, out);
    S y = detail::require_finite(x - fx / dfx);
    out.y = y;
    S fy = detail::eval_f(tgt, y, out);
    if (detail::exit_if_zero(out, fy, y, 'y')) return out;
    S t = fy / fx;
    out.t = t;
    S z = detail::require_finite(y - W.G(t) * fy / dfx);
    out.z = z;
    S fz = detail::eval_f(tgt, z, out);
    if (detail::exit_if_zero(out, fz, z, 'z')) return out;
    S s = fz / fy;
    S u = fz / fx;
    out.s = s;
    out.u = u;
    S w = detail::require_finite(z - W.H(t, s, u) * fz / dfx);
    out.w = w;
    S fw = detail::eval_f(tgt, w, out);
    if (detail::exit_if_zero(out, fw, w, 'w')) return out;
    S p = fw / fx;
    S q = fw / fy;
    S r = fw / fz;
    out.p = p;
    out.q = q;
    out.r = r;
    S weight = W.I(t) + W.J(s) + W.K(u) + W.L(t, u) + W.M(p, q, r) + W.N(t, s, u, r);
    out.next = detail::require_finite(w - weight * fw / dfx);
    return out;
}

template <typename S>
StepOutcome<S> kung_traub8_step(const Target<S>& tgt, const S& x) {
    StepOutcome<S> out;
    S fx = detail::eval_f(tgt, x, out);
    if (detail::exit_if_zero(out, fx, x, 'x')) return out;
    S dfx = detail::eval_df(tgt, x, out);
    S y = detail::require_finite(x - fx / dfx);
    out.y = y;
    S fy = detail::eval_f(tgt, y, out);
    if (detail::exit_if_zero(out, fy, y, 'y')) return out;
    detail::require_nonzero(fx - fy, "f(x) - f(y)");
    S Gf = fx * fx * fy / (dfx * (fx - fy) * (fx - fy));
    S z = detail::require_finite(y - Gf);
    out.z = z;
    S fz = detail::eval_f(tgt, z, out);
    if (detail::exit_if_zero(out, fz, z, 'z')) return out;
    detail::require_nonzero(fx - fz, "f(x) - f(z)");
    detail::require_nonzero(fy - fz, "f(y) - f(z)");
    S dxz = fx - fz;
    S Hf = Gf
         * (-(S(1) / (fx * fx * dxz)) + (fy - fx) / (fx * fy * dxz * dxz)
            + S(1) / ((fy - fz) * dxz * dxz));
    out.next = detail::require_finite(z - fx * fx * fy * Hf);
    return out;
}

template <typename S>
StepOutcome<S> kung_traub16_step(const Target<S>& tgt, const S& x) {
    StepOutcome<S> out;
    S fx = detail::eval_f(tgt, x, out);
    if (detail::exit_if_zero(out, fx, x, 'x')) return out;
    S dfx = detail::eval_df(tgt, x, out);
    S y = detail::require_finite(x - fx / dfx);
    out.y = y;
    S fy = detail::eval_f(tgt, y, out);
    if (detail::exit_if_zero(out, fy, y, 'y')) return out;
    detail::require_nonzero(fx - fy, "f(x) - f(y)");
    S Gf = fx * fx * fy / (dfx * (fx - fy) * (fx - fy));
    S z = detail::require_finite(y - Gf);
    out.z = z;
    S fz = detail::eval_f(tgt, z, out);
    if (detail::exit_if_zero(out, fz, z, 'z')) return out;
    detail::require_nonzero(fx - fz, "f(x) - f(z)");
    detail::require_nonzero(fy - fz, "f(y) - f(z)");
    S dxz = fx - fz;
    S Hf = Gf
         * (-(S(1) / (fx * fx * dxz)) + (fy - fx) / (fx * fy * dxz * dxz)
            + S(1) / ((fy - fz) * dxz * dxz));
    S w = detail::require_finite(z - fx * fx * fy * Hf);
    out.w = w;
    S fw = detail::eval_f(tgt, w, out);
    if (detail::exit_if_zero(out, fw, w, 'w')) return out;
    detail::require_nonzero(fx - fw, "f(x) - f(w)");
    detail::require_nonzero(fy - fw, "f(y) - f(w)");
    detail::require_nonzero(fz - fw, "f(z) - f(w)");
    S Kf = (fx * (fy - fz) * (fx - fy) - fx * fx * fy)
         / (dfx * dxz * (fx - fy) * (fx - fy) * (fy - fz));
    S Lf = (Gf * (fz - fw) - fy * fx * fx * Hf * (fy - fz))
         / ((fy - fw) * (fy - fz) * (fz - fw));
    out.next = detail::require_finite(
        w + (fx * fx * fy * fz / (fx - fw)) * (Hf - (Kf - Lf) / (fx - fw)));
    return out;
}

template <typename S>
StepOutcome<S> neta8_step(const Target<S>& tgt, const S& x, const S& A) {
    StepOutcome<S> out;
    S fx = detail::eval_f(tgt, x, out);
    if (detail::exit_if_zero(out, fx, x, 'x')) return out;
    S dfx = detail::eval_df(tgt, x, out);
    S y = detail::require_finite(x - fx / dfx);
    out.y = y;
    S fy = detail::eval_f(tgt, y, out);
    if (detail::exit_if_zero(out, fy, y, 'y')) return out;
    S zden = fx + (A - S(2)) * fy;
    detail::require_nonzero(zden, "f(x) + (A-2) f(y)");
    S z = detail::require_finite(y - (fy / dfx) * (fx + A * fy) / zden);
    out.z = z;
    S fz = detail::eval_f(tgt, z, out);
    if (detail::exit_if_zero(out, fz, z, 'z')) return out;
    S Fy = fy - fx;
    S Fz = fz - fx;
    detail::require_nonzero(Fy, "F_y");
    detail::require_nonzero(Fz, "F_z");
    detail::require_nonzero(Fy - Fz, "F_y - F_z");
    S zeta_y = (S(1) / Fy) * ((y - x) / Fy - S(1) / dfx);
    S zeta_z = (S(1) / Fz) * ((z - x) / Fz - S(1) / dfx);
    S d2 = -(zeta_y - zeta_z) / (Fy - Fz);
    S d1 = zeta_y + d2 * Fy;
    out.next = detail::require_finite(y + d1 * fx * fx + d2 * fx * fx * fx);
    return out;
}

// The inverse-interpolation theta_2 coefficient of the sixteenth-order Neta
// scheme. The formula's published rendering garbles this line's signs; this
// function is the single place the repaired reading lives. The leading minus
// sign is what reproduces the golden tables (the naive "+" reading collapses
// the scheme to roughly third order).
template <typename S>
S neta16_theta2(const S& g1, const S& th3, const S& Fs, const S& Fz) {
    return -g1 + th3 * (Fs + Fz);
}

template <typename S>
StepOutcome<S> neta16_step(const Target<S>& tgt, const S& x, const S& A) {
    StepOutcome<S> out;
    S fx = detail::eval_f(tgt, x, out);
    if (detail::exit_if_zero(out, fx, x, 'x')) return out;
    S dfx = detail::eval_df(tgt, x, out);
    S y = detail::require_finite(x - fx / dfx);
    out.y = y;
    S fy = detail::eval_f(tgt, y, out);
    if (detail::exit_if_zero(out, fy, y, 'y')) return out;
    S zden = fx + (A - S(2)) * fy;
    detail::require_nonzero(zden, "f(x) + (A-2) f(y)");
    S z = detail::require_finite(y - (fy / dfx) * (fx + A * fy) / zden);
    out.z = z;
    S fz = detail::eval_f(tgt, z, out);
    if (detail::exit_if_zero(out, fz, z, 'z')) return out;
    S Fy = fy - fx;
    S Fz = fz - fx;
    detail::require_nonzero(Fy, "F_y");
    detail::require_nonzero(Fz, "F_z");
    detail::require_nonzero(Fy - Fz, "F_y - F_z");
    S zeta_y = (S(1) / Fy) * ((y - x) / Fy - S(1) / dfx);
    S zeta_z = (S(1) / Fz) * ((z - x) / Fz - S(1) / dfx);
    S d2 = -(zeta_y - zeta_z) / (Fy - Fz);
    S d1 = zeta_y + d2 * Fy;
    S w = detail::require_finite(y + d1 * fx * fx + d2 * fx * fx * fx);
    out.w = w;
    S fw = detail::eval_f(tgt, w, out);
    if (detail::exit_if_zero(out, fw, w, 'w')) return out;
    S Fs = fw - fx;
    detail::require_nonzero(Fs, "F_s");
    detail::require_nonzero(Fs - Fz, "F_s - F_z");
    detail::require_nonzero(Fs - Fy, "F_s - F_y");
    S zeta_s = (S(1) / Fs) * ((w - x) / Fs - S(1) / dfx);
    S g1 = (zeta_s - zeta_z) / (Fs - Fz);
    S g2 = (zeta_y - zeta_z) / (Fy - Fz);
    S th3 = (g1 - g2) / (Fs - Fy);
    S th2 = neta16_theta2(g1, th3, Fs, Fz);
    S th1 = zeta_s + th2 * Fs - th3 * Fs * Fs;
    out.next = detail::require_finite(
        y + th1 * fx * fx + th2 * fx * fx * fx + th3 * fx * fx * fx * fx);
    return out;
}

template <typename S>
StepOutcome<S> khattri_step(const Target<S>& tgt, const S& x, const S& alpha) {
    if (is_zero(alpha)) throw std::invalid_argument("khattri step needs alpha != 0");
    StepOutcome<S> out;
    S fx = detail::eval_f(tgt, x, out);
    if (detail::exit_if_zero(out, fx, x, 'x')) return out;
    S dfx = detail::eval_df(tgt, x, out);
    S y = detail::require_finite(x - fx / dfx);
    out.y = y;
    S a = x + alpha * fx;  // auxiliary node
    S fa = detail::eval_f(tgt, a, out);
    if (detail::exit_if_zero(out, fa, a, 'a')) return out;
    S fy = detail::eval_f(tgt, y, out);
    if (detail::exit_if_zero(out, fy, y, 'y')) return out;
    S xy = x - y;
    S xya = x - y + alpha * fx;
    detail::require_nonzero(xy, "x - y");
    detail::require_nonzero(xya, "x - y + alpha f(x)");
    S D = xya / (xy * alpha) - xy * fa / (xya * alpha * fx)
        - (S(2) * x - S(2) * y + alpha * fx) * fy / (xy * xya);
    detail::require_nonzero(D, "derivative estimate at y");
    S z = detail::require_finite(y - fy / D);
    out.z = z;
    S fz = detail::eval_f(tgt, z, out);
    if (detail::exit_if_zero(out, fz, z, 'z')) return out;
    S zx = z - x;
    S zxa = z - x - alpha * fx;
    S zy = z - y;
    detail::require_nonzero(zx, "z - x");
    detail::require_nonzero(zxa, "z - x - alpha f(x)");
    detail::require_nonzero(zy, "z - y");
    S H1 = (y - z) * zxa / (alpha * fx * (y - x) * zx);
    S H2 = zx * zy / (alpha * fx * (x + alpha * fx - y) * (x + alpha * fx - z));
    S H3 = zx * zxa / ((y - x) * (y - x - alpha * fx) * (y - z));
    S H4 = S(1) / zx + S(1) / zxa + S(1) / zy;
    S den = H1 * fx + H2 * fa + H3 * fy + H4 * fz;
    detail::require_nonzero(den, "interpolant derivative at z");
    out.next = detail::require_finite(z - fz / den);
    return out;
}

template <typename S>
StepOutcome<S> geum_kim1_step(const Target<S>& tgt, const S& x) {
    StepOutcome<S> out;
    S fx = detail::eval_f(tgt, x, out);
    if (detail::exit_if_zero(out, fx, x, 'x')) return out;
    S dfx = detail::eval_df(tgt, x, out);
    S y = detail::require_finite(x - fx / dfx);
    out.y = y;
    S fy = detail::eval_f(tgt, y, out);
    if (detail::exit_if_zero(out, fy, y, 'y')) return out;
    S u = fy / fx;
    out.t = u;
    S kden = S(1) - S(3) * u * u;
    detail::require_nonzero(kden, "K_f denominator");
    S Kf = (S(1) + S(2) * u - S(4) * u * u) / kden;
    S z = detail::require_finite(y - Kf * fy / dfx);
    out.z = z;
    S fz = detail::eval_f(tgt, z, out);
    if (detail::exit_if_zero(out, fz, z, 'z')) return out;
    S v = fz / fy;
    S w = fz / fx;
    out.s = v;
    out.u = w;
    S hden = S(1) - v - S(2) * w;
    detail::require_nonzero(hden, "H_f denominator");
    S Hf = (S(1) + S(2) * u) / hden;
    S sp = detail::require_finite(z - Hf * fz / dfx);
    out.w = sp;
    S fs = detail::eval_f(tgt, sp, out);
    if (detail::exit_if_zero(out, fs, sp, 'w')) return out;
    S t = fs / fz;
    out.r = t;
    S G = u * w * (S(1) - S(6) * u - u * u - S(24) * u * u * u) + (S(2) - S(2) * u) * w * w;
    S wden = S(1) - v - S(2) * w - t - S(2) * v * w;
    detail::require_nonzero(wden, "W_f denominator");
    S Wf = (S(1) + S(2) * u) / wden + G;
    out.next = detail::require_finite(sp - Wf * fs / dfx);
    return out;
}

template <typename S>
StepOutcome<S> geum_kim2_step(const Target<S>& tgt, const S& x) {
    StepOutcome<S> out;
    S fx = detail::eval_f(tgt, x, out);
    if (detail::exit_if_zero(out, fx, x, 'x')) return out;
    S dfx = detail::eval_df(tgt, x, out);
    S y = detail::require_finite(x - fx / dfx);
    out.y = y;
    S fy = detail::eval_f(tgt, y, out);
    if (detail::exit_if_zero(out, fy, y, 'y')) return out;
    S u = fy / fx;
    out.t = u;
    S kden = S(1) - S(2) * u - S(4) * u * u;
    detail::require_nonzero(kden, "K_f denominator");
    // The quadratic numerator coefficient is the lambda of the printed
    // parameter list (beta = 0 gives lambda = -9); reading it as the gamma
    // parameter instead drops the scheme to roughly tenth order and misses
    // every golden-table row.
    S Kf = (S(1) - S(9) * u * u) / kden;
    S z = detail::require_finite(y - Kf * fy / dfx);
    out.z = z;
    S fz = detail::eval_f(tgt, z, out);
    if (detail::exit_if_zero(out, fz, z, 'z')) return out;
    S v = fz / fy;
    S w = fz / fx;
    out.s = v;
    out.u = w;
    S hden = S(1) - v - S(2) * w;
    detail::require_nonzero(hden, "H_f denominator");
    S Hf = (S(1) + S(2) * u) / hden;
    S sp = detail::require_finite(z - Hf * fz / dfx);
    out.w = sp;
    S fs = detail::eval_f(tgt, sp, out);
    if (detail::exit_if_zero(out, fs, sp, 'w')) return out;
    S t = fs / fz;
    out.r = t;
    S G = S(-6) * u * u * u * v + S(6) * w * w - S(4) * u * u * u * u * (S(3) * v + S(17) * w)
        + u * (S(2) * v * v + S(4) * v * v * v + w - S(2) * w * w);
    S wden = S(1) - v - S(2) * w - t;
    detail::require_nonzero(wden, "W_f denominator");
    S Wf = (S(1) + S(2) * u) / wden + G;
    out.next = detail::require_finite(sp - Wf * fs / dfx);
    return out;
}

template <typename S>
StepOutcome<S> method_step(const MethodId& id, const Target<S>& tgt, const S& x) {
    switch (id.kind) {
        case MethodKind::newton: return newton_step(tgt, x);
        case MethodKind::two_point:
            return two_point_step(tgt, x, make_weights<S>(id.two_point_family));
        case MethodKind::three_point_W1:
            return three_point_step(tgt, x, make_weights<S>(WeightFamily::W1));
        case MethodKind::kung_traub8: return kung_traub8_step(tgt, x);
        case MethodKind::neta8: return neta8_step(tgt, x, detail::scalar_of<S>(id.neta_a));
        case MethodKind::khattri: return khattri_step(tgt, x, detail::scalar_of<S>(id.khattri_alpha));
        case MethodKind::four_point_W1:
            return four_point_step(tgt, x, make_weights<S>(WeightFamily::W1));
        case MethodKind::four_point_W2:
            return four_point_step(tgt, x, make_weights<S>(WeightFamily::W2));
        case MethodKind::four_point_W3:
            return four_point_step(tgt, x, make_weights<S>(WeightFamily::W3));
        case MethodKind::kung_traub16: return kung_traub16_step(tgt, x);
        case MethodKind::neta16: return neta16_step(tgt, x, detail::scalar_of<S>(id.neta_a));
        case MethodKind::geum_kim1: return geum_kim1_step(tgt, x);
        case MethodKind::geum_kim2: return geum_kim2_step(tgt, x);
    }
    throw std::invalid_argument("unknown method kind");
}

enum class Termination { completed, early_exit, error };

// Full record of an iteration run: every iterate (starting with x0), the
// error |x_k - x*| per iterate when a reference root is known, instrumented
// evaluation counts, and how the run ended.
template <typename S>
struct Trace {
    MethodId method;
    std::string problem;
    std::vector<S> iterates;
    std::vector<Mag<S>> errors;  // same length as iterates when root known
    long f_evals = 0;
    long fp_evals = 0;
    int precision_used = 0;
    Termination termination = Termination::completed;
    int early_exit_iteration = -1;  // 1-based, set on early exit
    int error_iteration = -1;       // 1-based, set on error
    std::string error_message;

    long total_evals() const { return f_evals + fp_evals; }
};

template <typename S>
Trace<S> run(const MethodId& id, const Target<S>& tgt, const S& x0, int iterations,
             const std::optional<S>& root = std::nullopt, const std::string& problem_name = {}) {
    if (iterations < 1) throw std::invalid_argument("run needs at least one iteration");
    Trace<S> trace;
    trace.method = id;
    trace.problem = problem_name;
    trace.precision_used = current_decimal_digits();
    trace.iterates.push_back(x0);
    if (root) trace.errors.push_back(magnitude(x0 - *root));

    S x = x0;
    for (int k = 1; k <= iterations; ++k) {
        StepOutcome<S> step;
        try {
            step = method_step(id, tgt, x);
        } catch (const NumericError& e) {
            trace.termination = Termination::error;
            trace.error_iteration = k;
            trace.error_message = e.what();
            return trace;
        }
        trace.f_evals += step.f_evals;
        trace.fp_evals += step.fp_evals;
        x = step.next;
        trace.iterates.push_back(x);
        if (root) trace.errors.push_back(magnitude(x - *root));
        if (step.early_exit) {
            trace.termination = Termination::early_exit;
            trace.early_exit_iteration = k;
            return trace;
        }
    }
    trace.termination = Termination::completed;
    return trace;
}

template <typename S>
Trace<S> run(const MethodId& id, const Target<S>& tgt, const S& x0, int iterations, const S& root,
             const std::string& problem_name = {}) {
    return run(id, tgt, x0, iterations, std::optional<S>(root), problem_name);
}

}  // namespace rootlab
