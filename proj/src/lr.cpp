#include "ytl/lr.hpp"

#include <algorithm>
#include <stdexcept>

namespace ytl {

std::map<std::pair<int, int>, int> row_counts(const SkewTableau& t) {
    std::map<std::pair<int, int>, int> counts;
    for (int r = 1; r <= t.shape.rows(); ++r)
        for (int c = t.shape.inner.at(r) + 1; c <= t.shape.outer.at(r); ++c)
            ++counts[{t.value_at(r, c), r}];
    return counts;
}

bool is_littlewood_richardson(const SkewTableau& t) {
    if (!t.is_semistandard()) return false;
    // companion[v-1] = sorted row indices of the entries equal to v
    std::vector<std::vector<int>> companion(t.max_value());
    for (const auto& [key, count] : row_counts(t)) {
        auto [value, row] = key;
        companion[value - 1].insert(companion[value - 1].end(), count, row);
    }
    for (size_t v = 0; v + 1 < companion.size(); ++v) {
        const auto& upper = companion[v];
        const auto& lower = companion[v + 1];
        if (lower.size() > upper.size()) return false;
        for (size_t j = 0; j < lower.size(); ++j)
            if (lower[j] <= upper[j]) return false;
    }
    return true;
}

namespace {

// Backtracking count of LR fillings of nu/lambda with weight mu.  Cells are
// filled in reading order; placing value v >= 2 in row r is allowed only if
// afterwards the count of v in rows <= r stays <= the count of v-1 in rows
// <= r-1 (rows above r are already complete), which is exactly
// semistandardness of the companion tableau of the finished filling.
struct LrCounter {
    const Partition& nu;
    const Partition& lambda;
    std::vector<int> remaining;              // per value, from mu
    std::vector<std::vector<int>> cum;       // cum[v-1][r] = #v in rows 1..r
    std::vector<std::vector<int>> rows;      // partial filling
    Integer count = 0;

    LrCounter(const Partition& nu_, const Partition& lambda_,
              const std::vector<int>& mu_parts)
        : nu(nu_), lambda(lambda_), remaining(mu_parts) {
        int nrows = nu.rows();
        cum.assign(mu_parts.size(), std::vector<int>(nrows + 1, 0));
        rows.resize(nrows);
    }

    void fill(int r, int c) {
        if (r > nu.rows()) {
            ++count;
            return;
        }
        if (c > nu.at(r)) {
            fill(r + 1, lambda.at(r + 1) + 1);
            return;
        }
        int lo = 1;
        if (c - 1 > lambda.at(r))
            lo = std::max(lo, rows[r - 1][c - lambda.at(r) - 2]);
        if (r > 1 && c > lambda.at(r - 1) && c <= nu.at(r - 1))
            lo = std::max(lo, rows[r - 2][c - lambda.at(r - 1) - 1] + 1);
        for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
            if (remaining[v - 1] == 0) continue;
            if (v >= 2 && cum[v - 1][r] + 1 > cum[v - 2][r - 1]) continue;
            --remaining[v - 1];
            for (int rr = r; rr <= nu.rows(); ++rr) ++cum[v - 1][rr];
            rows[r - 1].push_back(v);
            fill(r, c + 1);
            rows[r - 1].pop_back();
            for (int rr = r; rr <= nu.rows(); ++rr) --cum[v - 1][rr];
            ++remaining[v - 1];
        }
    }
};

}  // namespace

Integer lr_coefficient(const Partition& lambda, const Partition& mu,
                       const Partition& nu) {
    if (!nu.contains(lambda)) return 0;
    if (lambda.size() + mu.size() != nu.size()) return 0;
    if (nu.rows() == 0) return 1;
    LrCounter counter(nu, lambda, mu.parts);
    counter.fill(1, lambda.at(1) + 1);
    return counter.count;
}

std::map<Partition, Integer> restriction_multiplicities(const DPartition& lambda) {
    if (lambda.d() == 0)
        throw std::invalid_argument("restriction_multiplicities: empty tuple");
    std::map<Partition, Integer> cur{{lambda.components[0], Integer(1)}};
    for (int i = 1; i < lambda.d(); ++i) {
        const Partition& mu = lambda.components[i];
        std::map<Partition, Integer> next;
        for (const auto& [sigma, mult] : cur) {
            for (const auto& kappa : enumerate_partitions(sigma.size() + mu.size())) {
                if (!kappa.contains(sigma)) continue;
                Integer c = lr_coefficient(sigma, mu, kappa);
                if (c != 0) next[kappa] += mult * c;
            }
        }
        cur = std::move(next);
    }
    return cur;
}

namespace {

// All partitions nu >= mu with nu/mu a horizontal strip of exactly `boxes`
// boxes (no two added boxes in the same column: nu_{j+1} <= mu_j).
void horizontal_strips(const Partition& mu, int boxes,
                       std::vector<Partition>& out) {
    int nrows = mu.rows() + 1;
    std::vector<int> nu(nrows, 0);
    auto rec = [&](auto&& self, int row, int left) -> void {
        if (row > nrows) {
            if (left == 0) out.push_back(Partition(nu));
            return;
        }
        int base = mu.at(row);
        int cap = base + left;
        if (row > 1) cap = std::min(cap, mu.at(row - 1));
        for (int v = cap; v >= base; --v) {
            nu[row - 1] = v;
            self(self, row + 1, left - (v - base));
            nu[row - 1] = base;
        }
    };
    rec(rec, 1, boxes);
}

}  // namespace

std::vector<DPartition> pieri_summands(const DPartition& mu, int l) {
    if (l < 0) throw std::invalid_argument("pieri_summands: negative box count");
    int d = mu.d();
    if (d == 0) throw std::invalid_argument("pieri_summands: empty tuple");
    std::vector<DPartition> out;
    std::vector<Partition> acc(d);
    auto rec = [&](auto&& self, int slot, int left) -> void {
        if (slot == d) {
            if (left == 0) out.push_back(DPartition(acc));
            return;
        }
        for (int a = (slot == d - 1) ? left : 0; a <= left; ++a) {
            std::vector<Partition> strips;
            horizontal_strips(mu.components[slot], a, strips);
            for (auto& nu : strips) {
                acc[slot] = std::move(nu);
                self(self, slot + 1, left - a);
            }
        }
    };
    rec(rec, 0, l);
    return out;
}

}  // namespace ytl
