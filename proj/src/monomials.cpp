#include "ytl/monomials.hpp"

#include <algorithm>
#include <stdexcept>

namespace ytl {

namespace {

// Appends, for the variable list vars (1-based positions into the exponent
// vector), all monomials vars[i]^a vars[i+1]^b prod_{j>=i+2} vars[j]^{eps},
// for i in [ilo, N-1], plus the pure powers vars[N]^b when include_tail.
void emit_family(int d, int n, const std::vector<int>& vars, int ilo,
                 std::vector<ExponentVector>& out) {
    int N = static_cast<int>(vars.size());
    for (int i = ilo; i <= N - 1; ++i) {
        int free_count = N - i - 1;  // positions i+2..N
        for (int a = 1; a < d; ++a) {
            for (int b = 0; b < d; ++b) {
                for (int mask = 0; mask < (1 << free_count); ++mask) {
                    ExponentVector v(n, 0);
                    v[vars[i - 1] - 1] = a;
                    v[vars[i] - 1] = b;
                    for (int j = 0; j < free_count; ++j)
                        if (mask & (1 << j)) v[vars[i + 1 + j] - 1] = 1;
                    out.push_back(std::move(v));
                }
            }
        }
    }
}

}  // namespace

std::vector<ExponentVector> monomial_set_identity(int d, int n) {
    if (d < 1 || n < 1)
        throw std::invalid_argument("monomial_set_identity: need d >= 1, n >= 1");
    std::vector<ExponentVector> out;
    if (d == 1) {
        out.push_back(ExponentVector(n, 0));
        return out;
    }
    std::vector<int> vars(n);
    for (int i = 0; i < n; ++i) vars[i] = i + 1;
    emit_family(d, n, vars, 1, out);
    for (int b = 0; b < d; ++b) {
        ExponentVector v(n, 0);
        v[n - 1] = b;
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<ExponentVector> monomial_set(int d, int n, const CyclePattern& pattern) {
    if (pattern.empty()) return monomial_set_identity(d, n);
    if (!is_valid_pattern(pattern, n) || !has_increasing_starts(pattern))
        throw std::invalid_argument("monomial_set: pattern must have increasing starts");
    std::vector<ExponentVector> out;
    if (d == 1) {
        out.push_back(ExponentVector(n, 0));
        return out;
    }

    std::vector<int> covered = index_set(pattern);
    int m = static_cast<int>(covered.size());
    int N = n - m + 1;
    int i1 = pattern.cycles.front().first;
    int l1_end = block_end(pattern, 1);
    int second = pattern.cycles[l1_end - 1].first + 1;

    std::vector<int> vars;
    vars.push_back(i1);
    vars.push_back(second);
    for (int s = 1; s <= n; ++s) {
        if (s == second) continue;
        if (std::binary_search(covered.begin(), covered.end(), s)) continue;
        vars.push_back(s);
    }
    if (static_cast<int>(vars.size()) != N)
        throw std::logic_error("monomial_set: relabeled variable count mismatch");

    emit_family(d, n, vars, 2, out);
    for (int b = 0; b < d; ++b) {
        ExponentVector v(n, 0);
        v[vars[N - 1] - 1] = b;
        out.push_back(std::move(v));
    }
    for (int a = 1; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            ExponentVector v(n, 0);
            v[vars[0] - 1] = a;
            v[vars[1] - 1] = b;
            out.push_back(std::move(v));
        }
    }
    return out;
}

Integer monomial_set_size(int d, int n, int m) {
    Integer dd(d);
    if (d == 1) return 1;
    if (m == 0)  // (2^{n-1}-1)d^2 - (2^{n-1}-2)d
        return (int_pow(2, n - 1) - 1) * dd * (dd - 1) + dd;
    // 2^{n-m-1}d^2 - (2^{n-m-1}-1)d
    return int_pow(2, n - m - 1) * dd * (dd - 1) + dd;
}

std::vector<QuotientBasisElement> enumerate_quotient_basis(int d, int n) {
    if (n < 3)
        throw std::invalid_argument("enumerate_quotient_basis: the quotient needs n >= 3");
    if (d < 1) throw std::invalid_argument("enumerate_quotient_basis: d must be >= 1");
    std::vector<QuotientBasisElement> out;
    for (const auto& pattern : enumerate_tn(n))
        for (auto& framing : monomial_set(d, n, pattern))
            out.push_back({std::move(framing), pattern});
    return out;
}

}  // namespace ytl
