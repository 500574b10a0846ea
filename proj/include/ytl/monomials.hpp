#pragma once

#include <vector>

#include "ytl/cycle_pattern.hpp"
#include "ytl/integers.hpp"

namespace ytl {

// Exponent vector of a monomial in x_1..x_n, entries in {0,...,d-1}.
using ExponentVector = std::vector<int>;

// Basis monomials attached to the empty pattern:
//   x_i^a x_{i+1}^b prod_{j>=i+2} x_j^{eps_j}  (1 <= i < n, 1 <= a < d,
//   0 <= b < d, eps_j in {0,1})  together with the pure powers x_n^b.
// For d = 1 this degenerates to the single zero vector.
std::vector<ExponentVector> monomial_set_identity(int d, int n);

// Basis monomials attached to a nonempty increasing-start pattern of weight
// m.  Variables are relabeled: y_1 = x_{i_1}, y_2 = x_{i_{L(1)}+1}, and
// y_3..y_N (N = n-m+1) run over the remaining indices outside the pattern's
// interval support, in increasing order.  The set is
//   { y_i^a y_{i+1}^b prod_{j>=i+2} y_j^{eps_j} | 2 <= i < N }
//   union { y_N^b }  union  { y_1^a y_2^b },
// translated back to exponent vectors (covered indices other than i_1 get
// exponent 0).  Cardinality: 2^{n-m-1} d^2 - (2^{n-m-1}-1) d.
std::vector<ExponentVector> monomial_set(int d, int n, const CyclePattern& pattern);

// (framing, pattern) pairs forming the quotient basis: patterns with
// increasing starts, framings from the pattern's monomial set.
struct QuotientBasisElement {
    ExponentVector framing;
    CyclePattern pattern;
};

std::vector<QuotientBasisElement> enumerate_quotient_basis(int d, int n);

// Cardinality predicted for monomial_set of a weight-m pattern.
Integer monomial_set_size(int d, int n, int m);

}  // namespace ytl
