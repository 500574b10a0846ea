#include "ytl/rep_theory.hpp"

#include <stdexcept>

#include "ytl/tableau.hpp"

namespace ytl {

namespace {

void require_n3(int n, const char* who) {
    if (n < 3)
        throw std::invalid_argument(std::string(who) + ": the quotient algebra is defined for n >= 3");
}

}  // namespace

RepClassification r_set(int d, int n) {
    if (d < 1) throw std::invalid_argument("r_set: d must be >= 1");
    require_n3(n, "r_set");
    RepClassification out;
    out.d = d;
    out.n = n;
    for (const auto& shape : enumerate_d_partitions(d, n)) {
        int first_row_sum = 0;
        int nonempty = 0;
        for (const auto& comp : shape.components) {
            if (!comp.empty()) {
                first_row_sum += comp.parts[0];
                ++nonempty;
            }
        }
        if (first_row_sum > 2) continue;
        out.members.push_back({shape, nonempty == 1
                                          ? IrrepFamily::single_component
                                          : IrrepFamily::two_single_columns});
    }
    return out;
}

Integer catalan(int n) {
    if (n < 0) throw std::invalid_argument("catalan: negative n");
    return binomial(2 * n, n) / (n + 1);
}

Integer ytl_dimension_formula(int d, int n) {
    if (d < 1) throw std::invalid_argument("ytl_dimension_formula: d must be >= 1");
    require_n3(n, "ytl_dimension_formula");
    Integer dd(d);
    Integer half = dd * (n * d - n + d + 1) / 2;  // nd-n+d+1 = (n+1)(d-1)+2, always even product
    return half * catalan(n) - dd * (dd - 1);
}

Integer ytl_dimension_sum_squares(int d, int n) {
    Integer total = 0;
    for (const auto& member : r_set(d, n).members) {
        Integer dim = standard_d_tableaux_count(member.shape);
        total += dim * dim;
    }
    return total;
}

}  // namespace ytl
