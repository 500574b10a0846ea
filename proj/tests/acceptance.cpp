// Acceptance gate: ten end-to-end criteria, one pass/fail line each.
// Exit code 0 when every criterion passes, 1 otherwise.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "support/schur_oracle.hpp"
#include "ytl/ideal.hpp"
#include "ytl/lr.hpp"
#include "ytl/monomials.hpp"
#include "ytl/rep_theory.hpp"
#include "ytl/verify.hpp"

using namespace ytl;

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
}

std::string fmt(const char* pattern, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

bool horizontal_strip(const Partition& outer, const Partition& inner) {
    if (!outer.contains(inner)) return false;
    for (int r = 1; r < outer.rows(); ++r)
        if (outer.at(r + 1) > inner.at(r)) return false;
    return true;
}

std::vector<std::pair<Partition, Partition>> partition_pairs(int max_total) {
    std::vector<std::pair<Partition, Partition>> pairs;
    for (int a = 0; a <= max_total; ++a)
        for (const auto& lambda : enumerate_partitions(a))
            for (int b = 0; b <= max_total - a; ++b)
                for (const auto& mu : enumerate_partitions(b))
                    pairs.emplace_back(lambda, mu);
    return pairs;
}

void criterion_pattern_census() {
    for (int n = 1; n <= 12; ++n) {
        auto tn = enumerate_tn(n);
        require(Integer(tn.size()) == catalan(n),
                fmt("pattern count at n=%d is not the Catalan number", n));
        if (n <= 8) {
            std::set<CyclePattern> uniq(tn.begin(), tn.end());
            require(uniq.size() == tn.size(), fmt("duplicate patterns at n=%d", n));
            for (const auto& p : tn)
                require(is_valid_pattern(p, n) && has_increasing_starts(p),
                        fmt("malformed pattern at n=%d", n));
        }
    }
}

void criterion_weight_census() {
    for (int n = 1; n <= 12; ++n) {
        std::vector<Integer> direct(n, 0);
        for (const auto& p : enumerate_tn(n)) direct[weight(p)] += 1;
        auto recursion = z_row(n);
        require(direct == recursion,
                fmt("weight census disagrees with the recursion at n=%d", n));
        Integer total = 0, weighted = 0;
        for (int m = 0; m < n; ++m) {
            total += recursion[m];
            weighted += int_pow(2, n - m) * recursion[m];
        }
        require(recursion[n - 1] == catalan(n - 1),
                fmt("top-weight count at n=%d", n));
        require(total == catalan(n), fmt("weight totals at n=%d", n));
        require(weighted == (n + 1) * catalan(n),
                fmt("2^(n-m)-weighted total at n=%d", n));
    }
}

void criterion_dimension_formula() {
    for (int d = 1; d <= 5; ++d)
        for (int n = 3; n <= 10; ++n)
            require(ytl_dimension_formula(d, n) == ytl_dimension_sum_squares(d, n),
                    fmt("formula vs squared dimensions at d=%d n=%d", d, n));
}

void criterion_basis_size() {
    for (int d = 1; d <= 4; ++d)
        for (int n = 3; n <= 9; ++n) {
            Integer count = 0;
            for (const auto& p : enumerate_tn(n))
                count += Integer(monomial_set(d, n, p).size());
            require(count == ytl_dimension_formula(d, n),
                    fmt("enumerated basis size at d=%d n=%d", d, n));
            if (n <= 6)
                require(Integer(enumerate_quotient_basis(d, n).size()) == count,
                        fmt("materialized basis size at d=%d n=%d", d, n));
        }
}

void criterion_monomial_blocks() {
    for (int d = 1; d <= 4; ++d) {
        Integer dd(d);
        for (int n = 3; n <= 8; ++n)
            for (const auto& p : enumerate_tn(n)) {
                int m = weight(p);
                Integer expected = int_pow(2, n - m - 1) * dd * dd -
                                   (int_pow(2, n - m - 1) - 1) * dd;
                if (m == 0) expected -= dd * dd - dd;
                if (d == 1) expected = 1;
                Integer got(monomial_set(d, n, p).size());
                require(got == expected && got == monomial_set_size(d, n, m),
                        fmt("monomial block size at d=%d n=%d weight=%d", d, n, m));
            }
    }
}

void criterion_oracle_match() {
    const int vars = 8;
    for (const auto& [lambda, mu] : partition_pairs(8)) {
        auto product = oracle::multiply(oracle::schur_polynomial(lambda, vars),
                                        oracle::schur_polynomial(mu, vars));
        auto expansion = oracle::schur_expand(product, vars);
        for (const auto& nu : enumerate_partitions(lambda.size() + mu.size())) {
            auto it = expansion.find(nu);
            Integer expected = (it == expansion.end()) ? Integer(0) : it->second;
            require(lr_coefficient(lambda, mu, nu) == expected,
                    "coefficient disagrees with the oracle at " +
                        lambda.to_string() + " * " + mu.to_string() + " -> " +
                        nu.to_string());
        }
    }
}

void criterion_expansion_rules() {
    // First-row bound and attainment for pair products.
    for (const auto& [lambda, mu] : partition_pairs(8)) {
        int alpha = lambda.at(1) + mu.at(1);
        int best = -1;
        for (const auto& nu : enumerate_partitions(lambda.size() + mu.size()))
            if (lr_coefficient(lambda, mu, nu) > 0) {
                require(nu.at(1) <= alpha, "first-row bound violated at " +
                                               lambda.to_string() + " * " +
                                               mu.to_string());
                best = std::max(best, nu.at(1));
            }
        require(best == alpha, "first-row bound not attained at " +
                                   lambda.to_string() + " * " + mu.to_string());
    }
    // Single-row factors: multiplicity one exactly on horizontal strips.
    for (int a = 0; a <= 8; ++a)
        for (const auto& lambda : enumerate_partitions(a))
            for (int l = 1; a + l <= 8; ++l) {
                Partition row({l});
                for (const auto& nu : enumerate_partitions(a + l)) {
                    Integer expected = horizontal_strip(nu, lambda) ? 1 : 0;
                    require(lr_coefficient(lambda, row, nu) == expected,
                            "single-row expansion at " + lambda.to_string() +
                                " + row " + std::to_string(l));
                }
            }
    // Tuple version of the bound and attainment, via chained restriction.
    for (int d = 1; d <= 3; ++d)
        for (int k = 0; k <= 6; ++k)
            for (const auto& lambda : enumerate_d_partitions(d, k)) {
                int alpha = 0;
                for (const auto& comp : lambda.components) alpha += comp.at(1);
                auto mults = restriction_multiplicities(lambda);
                require(!mults.empty(), "empty restriction at " + lambda.to_string());
                int best = -1;
                for (const auto& [nu, c] : mults) {
                    require(c > 0, "stored zero multiplicity");
                    require(nu.at(1) <= alpha,
                            "tuple first-row bound at " + lambda.to_string());
                    best = std::max(best, nu.at(1));
                }
                require(best == alpha,
                        "tuple first-row attainment at " + lambda.to_string());
            }
}

void criterion_classification() {
    for (int d = 1; d <= 3; ++d)
        for (int n = 3; n <= 6; ++n) {
            std::set<DPartition> survivors;
            for (const auto& member : r_set(d, n).members)
                survivors.insert(member.shape);
            for (const auto& lambda : enumerate_d_partitions(d, n)) {
                bool bounded = true;
                for (const auto& [nu, c] : restriction_multiplicities(lambda))
                    if (nu.at(1) > 2) bounded = false;
                require(survivors.count(lambda) == static_cast<size_t>(bounded),
                        "classification mismatch at " + lambda.to_string());
            }
        }
}

void criterion_algebra_brute_force() {
    const std::uint64_t seed = 20260814;
    for (auto [d, n] : {std::pair{1, 3}, {1, 4}, {2, 3}, {3, 3}, {2, 4}}) {
        auto defining = verify_defining_relations(d, n);
        require(defining.pass, fmt("defining relations at d=%d n=%d", d, n));

        auto us = default_u_values(2, seed);
        QuotientWorkspace w0(d, n, us[0]), w1(d, n, us[1]);
        auto dims = verify_quotient_dimension({&w0, &w1});
        require(dims.pass, fmt("quotient dimension at d=%d n=%d", d, n));

        auto indep = verify_basis_independence(w0);
        require(indep.pass, fmt("basis independence at d=%d n=%d", d, n));

        auto ledger = verify_relation_ledger(w0);
        require(ledger.pass && !ledger.checks.empty(),
                fmt("relation ledger at d=%d n=%d", d, n));
    }
}

void criterion_bijection() {
    for (int n = 1; n <= 7; ++n) {
        auto patterns = enumerate_hn(n);
        require(Integer(patterns.size()) == factorial(n),
                fmt("pattern family size at n=%d", n));
        for (const auto& p : patterns) {
            Permutation w = pattern_to_permutation(p, n);
            require(length(w) == p.degree(), fmt("length mismatch at n=%d", n));
            require(permutation_to_pattern(w) == p,
                    fmt("pattern round-trip at n=%d", n));
        }
        std::vector<int> img(n);
        for (int j = 0; j < n; ++j) img[j] = j + 1;
        do {
            Permutation w(img);
            require(pattern_to_permutation(permutation_to_pattern(w), n) == w,
                    fmt("permutation round-trip at n=%d", n));
        } while (std::next_permutation(img.begin(), img.end()));
    }
}

struct Criterion {
    std::string name;
    double time_limit;  // seconds, 0 = unlimited
    std::function<void()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"increasing-start patterns are counted by the Catalan numbers", 10,
         criterion_pattern_census},
        {"pattern weight census matches the recursion and its identities", 30,
         criterion_weight_census},
        {"dimension formula equals the sum of squared irreducible dimensions", 60,
         criterion_dimension_formula},
        {"enumerated quotient basis sizes match the dimension formula", 60,
         criterion_basis_size},
        {"per-pattern monomial blocks have the predicted cardinality", 0,
         criterion_monomial_blocks},
        {"product coefficients match the symmetric-function oracle", 300,
         criterion_oracle_match},
        {"first-row bound, attainment, and single-row expansion rules", 0,
         criterion_expansion_rules},
        {"surviving shapes are exactly those with bounded restriction", 0,
         criterion_classification},
        {"brute-force algebra verification at small parameters", 0,
         criterion_algebra_brute_force},
        {"pattern/permutation bijection round-trips exactly", 0,
         criterion_bijection},
    };

    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (error.empty() && c.time_limit > 0 && elapsed > c.time_limit)
            error = fmt("exceeded the %.0fs budget", c.time_limit);
        if (error.empty()) {
            std::printf("PASS  [%2zu] %s (%.2fs)\n", i + 1, c.name.c_str(), elapsed);
        } else {
            std::printf("FAIL  [%2zu] %s (%.2fs): %s\n", i + 1, c.name.c_str(),
                        elapsed, error.c_str());
            ++failed;
        }
        std::fflush(stdout);
    }
    std::printf("%zu/%zu acceptance criteria passed\n", criteria.size() - failed,
                criteria.size());
    return failed == 0 ? 0 : 1;
}
