#include "rootlab/schemes.hpp"

namespace rootlab {

const std::vector<MethodKind>& all_method_kinds() {
    static const std::vector<MethodKind> kinds = {
        MethodKind::newton,        MethodKind::two_point,     MethodKind::three_point_W1,
        MethodKind::kung_traub8,   MethodKind::neta8,         MethodKind::khattri,
        MethodKind::four_point_W1, MethodKind::four_point_W2, MethodKind::four_point_W3,
        MethodKind::kung_traub16,  MethodKind::neta16,        MethodKind::geum_kim1,
        MethodKind::geum_kim2,
    };
    return kinds;
}

std::string method_label(MethodKind k) {
    switch (k) {
        case MethodKind::newton: return "newton";
        case MethodKind::two_point: return "a3";
        case MethodKind::three_point_W1: return "dd2";
        case MethodKind::kung_traub8: return "KT0";
        case MethodKind::neta8: return "NNN";
        case MethodKind::khattri: return "kh1";
        case MethodKind::four_point_W1: return "d2";
        case MethodKind::four_point_W2: return "d4";
        case MethodKind::four_point_W3: return "d6";
        case MethodKind::kung_traub16: return "KT";
        case MethodKind::neta16: return "NNNN";
        case MethodKind::geum_kim1: return "d7";
        case MethodKind::geum_kim2: return "d9";
    }
    throw std::invalid_argument("unknown method kind");
}

MethodKind method_kind_from_label(const std::string& label) {
    for (MethodKind k : all_method_kinds())
        if (method_label(k) == label) return k;
    throw std::invalid_argument("unknown method label: " + label);
}

int declared_order(MethodKind k) {
    switch (k) {
        case MethodKind::newton: return 2;
        case MethodKind::two_point: return 4;
        case MethodKind::three_point_W1:
        case MethodKind::kung_traub8:
        case MethodKind::neta8:
        case MethodKind::khattri: return 8;
        default: return 16;
    }
}

int eval_budget(MethodKind k) {
    switch (k) {
        case MethodKind::newton: return 2;
        case MethodKind::two_point: return 3;
        case MethodKind::three_point_W1:
        case MethodKind::kung_traub8:
        case MethodKind::neta8: return 4;
        // One derivative plus f at x, x + alpha f(x), y and z: five
        // evaluations, one above the optimal order-8 budget.
        case MethodKind::khattri: return 5;
        default: return 5;
    }
}

}  // namespace rootlab
