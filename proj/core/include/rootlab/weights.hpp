#pragma once

#include <functional>
#include <string>

#include "rootlab/real.hpp"

namespace rootlab {

// Weight functions parameterizing the two-, three-, and four-point families.
// The two-point step uses G(t); the three-point step adds H(t,s,u); the
// four-point step adds the six-part final weight I(t) + J(s) + K(u) +
// L(t,u) + M(p,q,r) + N(t,s,u,r), where the ratios are
//   t = f(y)/f(x), s = f(z)/f(y), u = f(z)/f(x),
//   p = f(w)/f(x), q = f(w)/f(y), r = f(w)/f(z).
template <typename S>
struct WeightSet {
    std::function<S(const S&)> G;
    std::function<S(const S&, const S&, const S&)> H;
    std::function<S(const S&)> I;
    std::function<S(const S&)> J;
    std::function<S(const S&)> K;
    std::function<S(const S&, const S&)> L;
    std::function<S(const S&, const S&, const S&)> M;
    std::function<S(const S&, const S&, const S&, const S&)> N;
};

// The three published weight choices. W1 is polynomial; W2 and W3 mix in
// rational terms. All satisfy the full optimality condition set (see
// conditions.hpp), so each four-point instance has order sixteen.
enum class WeightFamily { W1, W2, W3 };

const char* weight_family_name(WeightFamily fam);

template <typename S>
WeightSet<S> make_weights(WeightFamily fam) {
    WeightSet<S> w;
    switch (fam) {
        case WeightFamily::W1:
            w.G = [](const S& t) { return S(1) + S(2) * t + S(5) * t * t - S(6) * t * t * t; };
            w.H = [](const S& t, const S& s, const S& u) {
                return S(1) + S(2) * t + S(4) * u + S(6) * t * t + s;
            };
            w.I = [](const S& t) { return S(6) * t * t + S(2) * t; };
            w.J = [](const S& s) { return s - s * s * s; };
            w.K = [](const S& u) { return S(1) + S(4) * u - S(4) * u * u; };
            w.L = [](const S& t, const S& u) {
                return t * u + S(6) * t * t * u + S(2) * t * t * t * u - S(10) * t * u * u;
            };
            w.M = [](const S& p, const S& q, const S& r) { return r + S(2) * q + S(8) * p; };
            w.N = [](const S& t, const S& s, const S& u, const S& r) {
                return S(2) * t * r + S(2) * s * u + S(6) * t * t * r - S(4) * s * s * u
                     + S(24) * t * t * t * t * u;
            };
            break;
        case WeightFamily::W2:
            w.G = [](const S& t) {
                return t * t * (S(5) - S(7) * t) + (S(2) * t + S(1)) * (t * t * t + S(1))
                     - S(2) * t * t * t * t;
            };
            w.H = [](const S& t, const S& s, const S& u) {
                return (S(1) + s) + (S(6) + u * u) * (u + t * t) + S(2) * (t - u);
            };
            w.I = [](const S& t) {
                return (S(1) + t) * (S(2) * t + t * t) + t * t * (S(3) - t);
            };
            w.J = [](const S& s) { return (s + s * s - s * s * s) / (S(1) + s); };
            w.K = [](const S& u) { return (S(1) + S(5) * u) / (S(1) + u); };
            w.L = [](const S& t, const S& u) {
                return t * u + S(6) * t * t * u
                     + (S(2) * t * t * t * u - S(10) * t * u * u) / (S(1) + t * u);
            };
            w.M = [](const S& p, const S& q, const S& r) {
                return S(2) * (p + q) + (S(6) * p + r) / (S(1) + p);
            };
            w.N = [](const S& t, const S& s, const S& u, const S& r) {
                return S(8) * t * t * r - S(4) * s * s * u - S(2) * t * t * t * r
                     + (S(2) * s * u + S(2) * t * r + S(24) * t * t * t * t * u
                        + S(2) * t * s * u)
                           / (S(1) + t);
            };
            break;
        case WeightFamily::W3:
            w.G = [](const S& t) {
                return (S(1) + t * t) * (S(1) + S(2) * t + S(2) * t * t)
                     + t * t * (S(2) - S(8) * t - S(2) * t * t);
            };
            w.H = [](const S& t, const S& s, const S& u) {
                return S(4) * u - S(5) * s + (S(6) + s * s * s) * (t * t + s)
                     + (S(1) + u * u * u) * (S(1) + S(2) * t);
            };
            w.I = [](const S& t) {
                return (S(1) + t) * (S(2) * t + t * t * t) + t * t * (S(4) - t - t * t);
            };
            w.J = [](const S& s) {
                return S(-2) * s * s + (s + S(2) * s * s) / (S(1) + s * s);
            };
            w.K = [](const S& u) {
                return S(1) + S(6) * u - (S(2) * u + S(6) * u * u) / (S(1) + u);
            };
            w.L = [](const S& t, const S& u) {
                return t * u
                     + (S(2) * t * t * t * u - S(10) * t * u * u + S(6) * t * t * u)
                           / (S(1) + S(2) * t * u);
            };
            w.M = [](const S& p, const S& q, const S& r) {
                return (S(1) + S(2) * p + S(2) * q) / (S(1) - r) + S(6) * p / (S(1) + q) - S(1);
            };
            w.N = [](const S& t, const S& s, const S& u, const S& r) {
                return S(2) * t * r + S(2) * s * u + S(24) * t * t * t * t * u
                     + (S(6) * t * t * r + S(6) * t * t * t * r - S(4) * s * s * u)
                           / (S(1) + t);
            };
            break;
    }
    return w;
}

}  // namespace rootlab
