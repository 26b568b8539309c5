#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "rootlab/real.hpp"
#include "rootlab/weights.hpp"

namespace rootlab {

// One required mixed partial derivative at the origin. `index[i]` is the
// derivative order in the i-th argument of the named weight function, using
// the argument orders G(t), H(t,s,u), I(t), J(s), K(u), L(t,u), M(p,q,r),
// N(t,s,u,r). All required values are integers.
struct WeightCondition {
    char function;
    int arity;
    std::array<int, 4> index;
    long expected;

    std::string label() const;  // e.g. "H(1,1,0)"
};

// The complete optimality condition set for a sixteenth-order four-point
// family: 66 conditions across G, H, I, J, K, L, M, N.
const std::vector<WeightCondition>& weight_conditions();

struct ConditionCheck {
    WeightCondition condition;
    Real measured;
    Real error;  // |measured − expected|
    bool pass = false;
};

struct ConditionReport {
    std::vector<ConditionCheck> checks;
    bool all_pass = false;
};

// Central finite-difference estimate of a mixed partial derivative at the
// origin, at the current working precision. `orders[i]` is the derivative
// order (0..4) in argument i.
Real partial_derivative_at_origin(const std::function<Real(const std::vector<Real>&)>& fn,
                                  int arity, const std::vector<int>& orders, const Real& h);

// Checks every condition against the weight set by finite differences with
// step h and absolute tolerance tol, at the current working precision.
ConditionReport check_weight_conditions(const WeightSet<Real>& w, const Real& h, const Real& tol);

// Standard configuration: 100-digit precision, h = 1e-20, tol = 1e-8.
ConditionReport check_weight_conditions(WeightFamily fam);

}  // namespace rootlab
