#include "rootlab/problems.hpp"

#include <stdexcept>

#include "rootlab/errors.hpp"

namespace rootlab {

namespace {

Real f1(const Real& x) { return log(1 + x * x) + exp(x) * sin(x); }
Real df1(const Real& x) { return 2 * x / (1 + x * x) + exp(x) * (sin(x) + cos(x)); }

Real f2(const Real& x) { return -x / 100 + sin(x); }
Real df2(const Real& x) { return Real(-1) / 100 + cos(x); }

Real f3(const Real& x) {
    Real pi = Real::pi();
    return x * log(1 + x * sin(x)) + exp(-1 + x * x + x * cos(x)) * sin(pi * x);
}
Real df3(const Real& x) {
    Real pi = Real::pi();
    Real g = 1 + x * sin(x);
    return log(g) + x * (sin(x) + x * cos(x)) / g
         + exp(-1 + x * x + x * cos(x))
               * ((2 * x + cos(x) - x * sin(x)) * sin(pi * x) + pi * cos(pi * x));
}

Real f4(const Real& x) { return 1 + exp(2 + x - x * x) + x * x * x - cos(1 + x); }
Real df4(const Real& x) { return (1 - 2 * x) * exp(2 + x - x * x) + 3 * x * x + sin(1 + x); }

Real f5(const Real& x) {
    Real pi = Real::pi();
    Real a = 1 - sin(x * x);
    Real b = (x * x + 1) / (pow_si(x, 3) + 1);
    Real offset = (1 + pi) / (1 + pi * sqrt(pi));
    return a * b + x * log(x * x - pi + 1) - offset;
}
Real df5(const Real& x) {
    Real pi = Real::pi();
    Real a = 1 - sin(x * x);
    Real b = (x * x + 1) / (pow_si(x, 3) + 1);
    Real da = -2 * x * cos(x * x);
    Real db = (-pow_si(x, 4) - 3 * x * x + 2 * x) / pow_si(pow_si(x, 3) + 1, 2);
    return da * b + a * db + log(x * x - pi + 1) + 2 * x * x / (x * x - pi + 1);
}

Real f6(const Real& x) {
    Real pi = Real::pi();
    Real q = x * x + 2 * x + 2;
    return (1 + x * x) * cos(pi * x / 2) + log(q) / (1 + x * x);
}
Real df6(const Real& x) {
    Real pi = Real::pi();
    Real q = x * x + 2 * x + 2;
    Real w = 1 + x * x;
    return 2 * x * cos(pi * x / 2) - w * (pi / 2) * sin(pi * x / 2)
         + ((2 * x + 2) * w / q - 2 * x * log(q)) / (w * w);
}

Real g5(const Real& x) { return log(1 - x + x * x) + 4 * sin(1 - x); }
Real dg5(const Real& x) { return (2 * x - 1) / (1 - x + x * x) - 4 * cos(1 - x); }

Real g7(const Real& x) {
    Real pi = Real::pi();
    Real offset = (Real(2) / 27) * (9 * sqrt(Real(2)) + 7 * sqrt(Real(3)));
    return -offset + sqrt(1 - x * x) + (1 + pow_si(x, 3)) * cos(pi * x / 2);
}
Real dg7(const Real& x) {
    Real pi = Real::pi();
    return -x / sqrt(1 - x * x) + 3 * x * x * cos(pi * x / 2)
         - (1 + pow_si(x, 3)) * (pi / 2) * sin(pi * x / 2);
}

std::vector<Problem> make_suite() {
    std::vector<Problem> v;
    v.push_back({"f1", "log(1+x^2) + e^x sin(x)", f1, df1, [] { return Real(0); }, "0.03"});
    v.push_back({"f2", "sin(x) - x/100", f2, df2, [] { return Real(0); }, "0.5"});
    v.push_back({"f3", "x log(1+x sin(x)) + e^(x^2+x cos(x)-1) sin(pi x)", f3, df3,
                 [] { return Real(0); }, "0.01"});
    v.push_back({"f4", "1 + e^(2+x-x^2) + x^3 - cos(1+x)", f4, df4,
                 [] { return Real(-1); }, "-0.3"});
    v.push_back({"f5", "(1-sin(x^2))(x^2+1)/(x^3+1) + x log(x^2-pi+1) - (1+pi)/(1+pi^1.5)",
                 f5, df5, [] { return sqrt(Real::pi()); }, "1.7"});
    v.push_back({"f6", "(1+x^2) cos(pi x/2) + log(x^2+2x+2)/(1+x^2)", f6, df6,
                 [] { return Real(-1); }, "-1.1"});
    v.push_back({"table5", "log(x^2-x+1) + 4 sin(1-x)", g5, dg5, [] { return Real(1); }, "1.1"});
    v.push_back({"table6", "log(1+x^2) + e^x sin(x)", f1, df1, [] { return Real(0); }, "0.1"});
    v.push_back({"table7", "sqrt(1-x^2) + (1+x^3) cos(pi x/2) - (2/27)(9 sqrt(2)+7 sqrt(3))",
                 g7, dg7, [] { return Real(1) / 3; }, "0.35"});
    return v;
}

std::vector<ComplexProblem> make_polynomials() {
    std::vector<ComplexProblem> v;
    v.push_back({"p1", "z^2 + 1", {1, 0, 1}, {{"0", "1"}, {"0", "-1"}}});
    v.push_back({"p2", "z^3 + z", {0, 1, 0, 1}, {{"0", "0"}, {"0", "1"}, {"0", "-1"}}});
    v.push_back({"p3",
                 "z^3 + z^2 - 1",
                 {-1, 0, 1, 1},
                 {{"0.75487766624669276", "0"},
                  {"-0.87743883312334638", "0.74486176661974423"},
                  {"-0.87743883312334638", "-0.74486176661974423"}}});
    return v;
}

}  // namespace

const std::vector<Problem>& builtin_suite() {
    static const std::vector<Problem> suite = make_suite();
    return suite;
}

const Problem& problem_by_name(const std::string& name) {
    for (const Problem& p : builtin_suite())
        if (p.name == name) return p;
    throw std::invalid_argument("unknown problem: '" + name + "'");
}

std::vector<Cplx<double>> ComplexProblem::roots_double() const {
    std::vector<Cplx<double>> out;
    for (const auto& [re, im] : root_literals)
        out.push_back({std::stod(re), std::stod(im)});
    return out;
}

std::vector<Cplx<Real>> ComplexProblem::roots_real() const {
    std::vector<Cplx<Real>> out;
    for (const auto& [re, im] : root_literals) out.push_back({Real(re), Real(im)});
    return out;
}

const std::vector<ComplexProblem>& builtin_polynomials() {
    static const std::vector<ComplexProblem> polys = make_polynomials();
    return polys;
}

const ComplexProblem& polynomial_by_name(const std::string& name) {
    for (const ComplexProblem& p : builtin_polynomials())
        if (p.name == name) return p;
    throw std::invalid_argument("unknown polynomial: '" + name + "'");
}

}  // namespace rootlab
