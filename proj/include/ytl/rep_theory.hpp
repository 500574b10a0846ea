#pragma once

#include <vector>

#include "ytl/integers.hpp"
#include "ytl/partition.hpp"

namespace ytl {

// The d-partitions of n whose irreducible representations survive in the
// quotient: total first-row sum <= 2.  They split into two families.
enum class IrrepFamily {
    single_component,   // one nonempty component, at most two columns
    two_single_columns  // two nonempty components, each a single column
};

struct IrrepClass {
    DPartition shape;
    IrrepFamily family;
};

struct RepClassification {
    int d = 0;
    int n = 0;
    std::vector<IrrepClass> members;
};

// All shapes with sum of first parts <= 2, in enumerate_d_partitions order.
// Defined for n >= 3 (the quotient algebra needs at least three strands).
RepClassification r_set(int d, int n);

Integer catalan(int n);

// d(nd-n+d+1)/2 * C_n - d(d-1); requires n >= 3.
Integer ytl_dimension_formula(int d, int n);

// Sum of squared irreducible dimensions over r_set(d,n).
Integer ytl_dimension_sum_squares(int d, int n);

}  // namespace ytl
