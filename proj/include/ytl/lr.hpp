#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ytl/integers.hpp"
#include "ytl/partition.hpp"
#include "ytl/tableau.hpp"

namespace ytl {

// Number of entries equal to `value` in each row: key (value, row).
// Rows with zero count are omitted.
std::map<std::pair<int, int>, int> row_counts(const SkewTableau& t);

// A semistandard skew tableau is Littlewood-Richardson when its companion
// tableau is semistandard of straight shape: row v of the companion lists,
// in increasing order, the row indices of all entries equal to v.
bool is_littlewood_richardson(const SkewTableau& t);

// Multiplicity of s_nu in s_lambda * s_mu: the number of LR tableaux of
// shape nu/lambda and weight mu.  Zero when lambda is not contained in nu
// or the sizes do not add up.
Integer lr_coefficient(const Partition& lambda, const Partition& mu,
                       const Partition& nu);

// Multiplicities of s_nu in the product s_{lambda^(0)} * ... * s_{lambda^(d-1)},
// i.e. the branching multiplicities of the d-tuple.  Keys are exactly the nu
// with nonzero multiplicity.
std::map<Partition, Integer> restriction_multiplicities(const DPartition& lambda);

// Pieri expansion for a d-tuple: all d-tuples obtained from mu by adding a
// total of l boxes, no two in the same column of the same component
// (horizontal strips distributed over the components).
std::vector<DPartition> pieri_summands(const DPartition& mu, int l);

}  // namespace ytl
