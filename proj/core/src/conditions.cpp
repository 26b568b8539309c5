#include "rootlab/conditions.hpp"

#include <utility>

#include "rootlab/precision.hpp"

namespace rootlab {

std::string WeightCondition::label() const {
    std::string s(1, function);
    s += '(';
    for (int i = 0; i < arity; ++i) {
        if (i) s += ',';
        s += std::to_string(index[i]);
    }
    s += ')';
    return s;
}

namespace {

std::vector<WeightCondition> build_conditions() {
    std::vector<WeightCondition> v;
    auto add1 = [&](char fn, int i, long val) { v.push_back({fn, 1, {i, 0, 0, 0}, val}); };
    auto add2 = [&](char fn, int i, int j, long val) { v.push_back({fn, 2, {i, j, 0, 0}, val}); };
    auto add3 = [&](char fn, int i, int j, int k, long val) {
        v.push_back({fn, 3, {i, j, k, 0}, val});
    };
    auto add4 = [&](char fn, int i, int j, int k, int l, long val) {
        v.push_back({fn, 4, {i, j, k, l}, val});
    };

    add1('G', 0, 1); add1('G', 1, 2); add1('G', 2, 10); add1('G', 3, -36);

    add3('H', 0, 0, 0, 1); add3('H', 1, 0, 0, 2); add3('H', 0, 1, 0, 1);
    add3('H', 2, 0, 0, 12); add3('H', 0, 0, 1, 4); add3('H', 1, 1, 0, 0);
    add3('H', 0, 1, 1, 0); add3('H', 1, 1, 1, 0);

    add1('I', 0, 0); add1('I', 1, 2); add1('I', 2, 12);

    add1('J', 0, 0); add1('J', 1, 1); add1('J', 2, 0); add1('J', 3, -6);

    add1('K', 0, 1); add1('K', 1, 4); add1('K', 2, -8);

    add2('L', 0, 0, 0); add2('L', 1, 0, 0); add2('L', 1, 1, 1); add2('L', 2, 0, 0);
    add2('L', 0, 1, 0); add2('L', 3, 0, 0); add2('L', 2, 1, 12); add2('L', 3, 1, 12);
    add2('L', 0, 2, 0); add2('L', 1, 2, -20);

    add3('M', 0, 0, 0, 0); add3('M', 1, 0, 0, 8); add3('M', 0, 1, 0, 2); add3('M', 0, 0, 1, 1);

    const int nzero[][4] = {
        {0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
        {2, 0, 0, 0}, {1, 1, 0, 0}, {0, 2, 0, 0}, {1, 0, 1, 0}, {2, 1, 0, 0},
        {3, 1, 0, 0}, {2, 2, 0, 0}, {0, 1, 0, 1}, {3, 0, 0, 0}, {4, 0, 0, 0},
        {3, 0, 1, 0}, {1, 1, 0, 1}, {2, 1, 1, 0}, {3, 0, 0, 1}, {0, 0, 1, 1},
        {3, 2, 0, 0}, {4, 1, 0, 0}, {1, 2, 0, 0}, {2, 0, 1, 0}, {1, 1, 1, 0},
    };
    for (const auto& ix : nzero) add4('N', ix[0], ix[1], ix[2], ix[3], 0);
    add4('N', 1, 0, 0, 1, 2);
    add4('N', 2, 0, 0, 1, 12);
    add4('N', 0, 2, 1, 0, -8);
    add4('N', 4, 0, 1, 0, 576);
    add4('N', 0, 1, 1, 0, 2);

    return v;
}

// Central difference stencils: (offset, coefficient) pairs; the estimate is
// sum(coeff * f(offset*h)) / h^order.
struct StencilPoint {
    int offset;
    long num, den;
};

const std::vector<StencilPoint>& stencil(int order) {
    static const std::vector<StencilPoint> table[5] = {
        {{0, 1, 1}},
        {{-1, -1, 2}, {1, 1, 2}},
        {{-1, 1, 1}, {0, -2, 1}, {1, 1, 1}},
        {{-2, -1, 2}, {-1, 1, 1}, {1, -1, 1}, {2, 1, 2}},
        {{-2, 1, 1}, {-1, -4, 1}, {0, 6, 1}, {1, -4, 1}, {2, 1, 1}},
    };
    return table[order];
}

}  // namespace

const std::vector<WeightCondition>& weight_conditions() {
    static const std::vector<WeightCondition> conds = build_conditions();
    return conds;
}

Real partial_derivative_at_origin(const std::function<Real(const std::vector<Real>&)>& fn,
                                  int arity, const std::vector<int>& orders, const Real& h) {
    int total_order = 0;
    for (int i = 0; i < arity; ++i) total_order += orders[i];

    Real sum(0);
    std::vector<Real> args(static_cast<size_t>(arity), Real(0));

    // Walk the tensor product of the per-argument stencils.
    std::function<void(int, const Real&)> walk = [&](int dim, const Real& coeff) {
        if (dim == arity) {
            sum += coeff * fn(args);
            return;
        }
        for (const StencilPoint& pt : stencil(orders[dim])) {
            args[static_cast<size_t>(dim)] = Real(pt.offset) * h;
            walk(dim + 1, coeff * Real(pt.num) / Real(pt.den));
        }
    };
    walk(0, Real(1));

    return sum / pow_si(h, total_order);
}

ConditionReport check_weight_conditions(const WeightSet<Real>& w, const Real& h, const Real& tol) {
    ConditionReport report;
    report.all_pass = true;

    auto adapter = [&w](char fn) -> std::function<Real(const std::vector<Real>&)> {
        switch (fn) {
            case 'G': return [&w](const std::vector<Real>& a) { return w.G(a[0]); };
            case 'H': return [&w](const std::vector<Real>& a) { return w.H(a[0], a[1], a[2]); };
            case 'I': return [&w](const std::vector<Real>& a) { return w.I(a[0]); };
            case 'J': return [&w](const std::vector<Real>& a) { return w.J(a[0]); };
            case 'K': return [&w](const std::vector<Real>& a) { return w.K(a[0]); };
            case 'L': return [&w](const std::vector<Real>& a) { return w.L(a[0], a[1]); };
            case 'M': return [&w](const std::vector<Real>& a) { return w.M(a[0], a[1], a[2]); };
            default:  return [&w](const std::vector<Real>& a) { return w.N(a[0], a[1], a[2], a[3]); };
        }
    };

    for (const WeightCondition& c : weight_conditions()) {
        std::vector<int> orders(c.index.begin(), c.index.begin() + c.arity);
        ConditionCheck check;
        check.condition = c;
        check.measured = partial_derivative_at_origin(adapter(c.function), c.arity, orders, h);
        check.error = abs(check.measured - Real(c.expected));
        check.pass = check.error < tol;
        report.all_pass = report.all_pass && check.pass;
        report.checks.push_back(std::move(check));
    }
    return report;
}

ConditionReport check_weight_conditions(WeightFamily fam) {
    return with_precision(100, [&] {
        WeightSet<Real> w = make_weights<Real>(fam);
        return check_weight_conditions(w, Real(std::string("1e-20")), Real(std::string("1e-8")));
    });
}

const char* weight_family_name(WeightFamily fam) {
    switch (fam) {
        case WeightFamily::W1: return "W1";
        case WeightFamily::W2: return "W2";
        default: return "W3";
    }
}

}  // namespace rootlab
