#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "ytl/integers.hpp"

namespace ytl {

// Product of descending generator runs: for cycles (i_1,k_1),...,(i_p,k_p)
// the word g_{i_1}g_{i_1-1}...g_{i_1-k_1} * ... * g_{i_p}...g_{i_p-k_p}.
// Validity: 1 <= i_j - k_j, i_j <= n-1, i_1 < i_2 < ... < i_p.
// The sub-family with i_1-k_1 < i_2-k_2 < ... < i_p-k_p (strictly increasing
// run starts) indexes the reduced words surviving in the quotient.
struct CyclePattern {
    std::vector<std::pair<int, int>> cycles;  // (i, k)

    CyclePattern() = default;
    explicit CyclePattern(std::vector<std::pair<int, int>> c)
        : cycles(std::move(c)) {}

    bool empty() const { return cycles.empty(); }
    int degree() const;              // word length, sum of k_j + 1
    std::vector<int> word() const;   // generator subscripts, left to right
    std::string to_string() const;   // e.g. "(2,1)(4,2)", "1" for empty

    auto operator<=>(const CyclePattern&) const = default;
};

bool is_valid_pattern(const CyclePattern& p, int n);

// True when the run starts i_j - k_j are strictly increasing.
bool has_increasing_starts(const CyclePattern& p);

// All patterns valid for n strands (n! of them), in recursive generation
// order: cycles chosen for i = 1,...,n-1, "absent" branch first, then
// k = 0,...,i-1.
std::vector<CyclePattern> enumerate_hn(int n);

// The Catalan-many patterns with strictly increasing run starts, generated
// directly (not by filtering), same ordering convention.
std::vector<CyclePattern> enumerate_tn(int n);

// Indices covered by the runs: union of the intervals [i_j-k_j, i_j].
std::vector<int> index_set(const CyclePattern& p);

// |index_set(p)|
int weight(const CyclePattern& p);

// 1-based index of the first cycle whose interval contains j; error if
// j is not covered.
int l_index(const CyclePattern& p, int j);

// Starting from cycle l, the last cycle of the contiguous block: the least
// L >= l with i_L + 1 not covered.  Requires increasing starts.
int block_end(const CyclePattern& p, int l);

// Number of increasing-start patterns of weight m among n strands, by the
// weight recursion (base: weight n-1 count is C_{n-1}); 0 <= m <= n-1.
Integer z_count(int n, int m);

// The whole row [z_count(n,0), ..., z_count(n,n-1)].
std::vector<Integer> z_row(int n);

}  // namespace ytl
