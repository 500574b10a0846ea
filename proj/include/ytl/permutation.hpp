#pragma once

#include <compare>
#include <vector>

#include "ytl/cycle_pattern.hpp"

namespace ytl {

// Permutation of {1,...,n}; composition is right-to-left function
// composition, so (a*b)(x) = a(b(x)).  A generator word g_{w1}...g_{wm}
// corresponds to s_{w1} o ... o s_{wm} (rightmost letter applied first).
struct Permutation {
    std::vector<int> img;  // img[j-1] = image of j

    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int n() const { return static_cast<int>(img.size()); }
    int apply(int j) const { return img[j - 1]; }
    Permutation inverse() const;
    Permutation compose(const Permutation& other) const;  // this o other

    auto operator<=>(const Permutation&) const = default;
};

// w o s_i: swaps the images of i and i+1.
Permutation append_transposition(const Permutation& w, int i);

// Number of inversions; word length of the reduced expression.
int length(const Permutation& w);

Permutation pattern_to_permutation(const CyclePattern& p, int n);

// Inverse bijection: strips, for t = n, n-1, ..., the cycle moving the
// largest displaced value.
CyclePattern permutation_to_pattern(const Permutation& w);

}  // namespace ytl
