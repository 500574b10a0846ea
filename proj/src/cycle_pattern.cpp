#include "ytl/cycle_pattern.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "ytl/rep_theory.hpp"

namespace ytl {

int CyclePattern::degree() const {
    int m = 0;
    for (const auto& [i, k] : cycles) m += k + 1;
    return m;
}

std::vector<int> CyclePattern::word() const {
    std::vector<int> w;
    for (const auto& [i, k] : cycles)
        for (int s = i; s >= i - k; --s) w.push_back(s);
    return w;
}

std::string CyclePattern::to_string() const {
    if (cycles.empty()) return "1";
    std::ostringstream os;
    for (const auto& [i, k] : cycles) os << '(' << i << ',' << k << ')';
    return os.str();
}

bool is_valid_pattern(const CyclePattern& p, int n) {
    int prev_i = 0;
    for (const auto& [i, k] : p.cycles) {
        if (k < 0 || i - k < 1 || i > n - 1) return false;
        if (i <= prev_i) return false;
        prev_i = i;
    }
    return true;
}

bool has_increasing_starts(const CyclePattern& p) {
    int prev_start = 0;
    for (const auto& [i, k] : p.cycles) {
        if (i - k <= prev_start) return false;
        prev_start = i - k;
    }
    return true;
}

namespace {

void gen_patterns(int i, int n, bool increasing_starts, int prev_start,
                  std::vector<std::pair<int, int>>& acc,
                  std::vector<CyclePattern>& out) {
    if (i == n) {
        out.push_back(CyclePattern(acc));
        return;
    }
    gen_patterns(i + 1, n, increasing_starts, prev_start, acc, out);
    for (int k = 0; k <= i - 1; ++k) {
        int start = i - k;
        if (increasing_starts && start <= prev_start) continue;
        acc.push_back({i, k});
        gen_patterns(i + 1, n, increasing_starts, start, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<CyclePattern> enumerate_hn(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_hn: n must be >= 1");
    std::vector<CyclePattern> out;
    std::vector<std::pair<int, int>> acc;
    gen_patterns(1, n, false, 0, acc, out);
    return out;
}

std::vector<CyclePattern> enumerate_tn(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_tn: n must be >= 1");
    std::vector<CyclePattern> out;
    std::vector<std::pair<int, int>> acc;
    gen_patterns(1, n, true, 0, acc, out);
    return out;
}

std::vector<int> index_set(const CyclePattern& p) {
    std::vector<bool> covered;
    for (const auto& [i, k] : p.cycles) {
        if (static_cast<size_t>(i) >= covered.size()) covered.resize(i + 1, false);
        for (int j = i - k; j <= i; ++j) covered[j] = true;
    }
    std::vector<int> out;
    for (size_t j = 1; j < covered.size(); ++j)
        if (covered[j]) out.push_back(static_cast<int>(j));
    return out;
}

int weight(const CyclePattern& p) {
    return static_cast<int>(index_set(p).size());
}

int l_index(const CyclePattern& p, int j) {
    for (size_t l = 0; l < p.cycles.size(); ++l) {
        auto [i, k] = p.cycles[l];
        if (i - k <= j && j <= i) return static_cast<int>(l) + 1;
    }
    throw std::invalid_argument("l_index: index not covered by the pattern");
}

int block_end(const CyclePattern& p, int l) {
    int np = static_cast<int>(p.cycles.size());
    if (l < 1 || l > np) throw std::invalid_argument("block_end: cycle index out of range");
    std::vector<int> covered = index_set(p);
    auto is_covered = [&](int j) {
        for (int c : covered)
            if (c == j) return true;
        return false;
    };
    for (int L = l; L <= np; ++L)
        if (!is_covered(p.cycles[L - 1].first + 1)) return L;
    throw std::logic_error("block_end: no block end found (pattern not increasing-start?)");
}

namespace {

Integer z_count_memo(int n, int m, std::map<std::pair<int, int>, Integer>& memo) {
    if (m < 0 || m > n - 1) return 0;
    if (m == n - 1) return catalan(n - 1);
    auto it = memo.find({n, m});
    if (it != memo.end()) return it->second;
    Integer total = 0;
    for (int j = n - m - 1; j <= n - 1; ++j)
        total += z_count_memo(j, m - n + j + 1, memo) *
                 z_count_memo(n - j, n - j - 1, memo);
    memo[{n, m}] = total;
    return total;
}

}  // namespace

Integer z_count(int n, int m) {
    if (n < 1) throw std::invalid_argument("z_count: n must be >= 1");
    if (m < 0 || m > n - 1)
        throw std::invalid_argument("z_count: weight out of range [0, n-1]");
    std::map<std::pair<int, int>, Integer> memo;
    return z_count_memo(n, m, memo);
}

std::vector<Integer> z_row(int n) {
    std::vector<Integer> row;
    std::map<std::pair<int, int>, Integer> memo;
    for (int m = 0; m <= n - 1; ++m) row.push_back(z_count_memo(n, m, memo));
    return row;
}

}  // namespace ytl
