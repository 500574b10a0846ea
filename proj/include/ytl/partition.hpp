#pragma once

#include <compare>
#include <string>
#include <vector>

#include "ytl/integers.hpp"

namespace ytl {

// Integer partition: weakly decreasing positive parts.  The empty partition
// is allowed and denotes the unique partition of 0.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int size() const;                 // number of boxes
    int rows() const { return static_cast<int>(parts.size()); }
    int at(int i) const;              // 1-based row length, 0 past the last row
    bool empty() const { return parts.empty(); }
    bool contains(const Partition& inner) const;
    Partition conjugate() const;
    std::string to_string() const;    // e.g. "(3,1,1)", "()" for empty

    auto operator<=>(const Partition&) const = default;
};

// All partitions of n, ordered lexicographically decreasing: (n) first,
// (1,...,1) last.
std::vector<Partition> enumerate_partitions(int n);

// d-tuple of partitions with total size n.
struct DPartition {
    std::vector<Partition> components;

    DPartition() = default;
    explicit DPartition(std::vector<Partition> c) : components(std::move(c)) {}

    int d() const { return static_cast<int>(components.size()); }
    int size() const;
    std::string to_string() const;    // e.g. "((2,1),())"

    auto operator<=>(const DPartition&) const = default;
};

// All d-tuples with total size n; component sizes are assigned from the
// first slot down (size n, n-1, ..., 0), partitions of each size in
// enumerate_partitions order.
std::vector<DPartition> enumerate_d_partitions(int d, int n);

}  // namespace ytl
