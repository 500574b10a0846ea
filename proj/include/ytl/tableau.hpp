#pragma once

#include <vector>

#include "ytl/integers.hpp"
#include "ytl/partition.hpp"

namespace ytl {

// Skew diagram nu/lambda (lambda inside nu).  Rows and columns are 1-based;
// row r holds the cells in columns lambda_r+1 .. nu_r.
struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape() = default;
    SkewShape(Partition out, Partition in);

    int rows() const { return outer.rows(); }
    int cells() const { return outer.size() - inner.size(); }
    bool contains_cell(int r, int c) const;
};

// Filling of a skew shape.  entries[r-1][j] is the value in row r at column
// inner_r + 1 + j.
struct SkewTableau {
    SkewShape shape;
    std::vector<std::vector<int>> entries;

    SkewTableau() = default;
    SkewTableau(SkewShape s, std::vector<std::vector<int>> e);

    int value_at(int r, int c) const;  // throws if (r,c) not in the shape
    int max_value() const;
    std::vector<int> weight() const;   // weight()[v-1] = multiplicity of v
    bool is_semistandard() const;
};

// All semistandard fillings of the shape with exactly weight[v-1] entries
// equal to v.  Deterministic order: cells are filled in reading order
// (row-major), candidate values ascending.
std::vector<SkewTableau> enumerate_skew_semistandard(const SkewShape& shape,
                                                     const std::vector<int>& weight);

// Number of standard Young tableaux of straight shape (hook length formula).
Integer standard_tableaux_count(const Partition& shape);

// Number of standard d-tableaux: fillings of the d diagrams by 1..n, rows and
// columns increasing in every component.  Equals the multinomial coefficient
// over component sizes times the product of the per-component counts.
Integer standard_d_tableaux_count(const DPartition& shape);

}  // namespace ytl
