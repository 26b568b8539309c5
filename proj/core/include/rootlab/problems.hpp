#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "rootlab/complex.hpp"
#include "rootlab/real.hpp"

namespace rootlab {

// A scalar root-finding target over the reals: f, its analytic derivative,
// a reference root, and the standard starting point for the error tables.
// The root is a closure so irrational roots (sqrt(pi), 1/3) come out exact
// at whatever working precision is current when they are requested.
struct Problem {
    std::string name;
    std::string expression;  // short human-readable formula
    std::function<Real(const Real&)> f;
    std::function<Real(const Real&)> df;
    std::function<Real()> root;
    std::string x0;  // exact decimal literal
};

// The nine benchmark problems. Functions evaluate at the current working
// precision and throw DomainError / DivideByZero outside their domain.
const std::vector<Problem>& builtin_suite();

// Lookup by name ("f1".."f6", "table5", "table6", "table7").
// Throws std::invalid_argument for unknown names.
const Problem& problem_by_name(const std::string& name);

// A polynomial over the complex plane with known roots, used for basins of
// attraction. Coefficients are exact integers, ascending degree.
struct ComplexProblem {
    std::string name;
    std::string expression;
    std::vector<long> coefficients;
    std::vector<std::pair<std::string, std::string>> root_literals;  // (re, im)

    // Roots converted to the requested component type.
    std::vector<Cplx<double>> roots_double() const;
    std::vector<Cplx<Real>> roots_real() const;  // parsed at working precision
};

// p1 = z^2 + 1, p2 = z^3 + z, p3 = z^3 + z^2 - 1.
const std::vector<ComplexProblem>& builtin_polynomials();
const ComplexProblem& polynomial_by_name(const std::string& name);

// Horner evaluation of a polynomial and its derivative over any scalar field.
template <typename S>
S poly_eval(const std::vector<long>& coef, const S& z) {
    S acc(0);
    for (size_t i = coef.size(); i-- > 0;) acc = acc * z + S(coef[i]);
    return acc;
}

template <typename S>
S poly_deriv_eval(const std::vector<long>& coef, const S& z) {
    S acc(0);
    for (size_t i = coef.size(); i-- > 1;) acc = acc * z + S(coef[i] * static_cast<long>(i));
    return acc;
}

}  // namespace rootlab
