#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "ytl/monomials.hpp"
#include "ytl/rep_theory.hpp"

using namespace ytl;

namespace {

// The identity-pattern monomial family over N abstract variables, straight
// from its two-brace description: exponent vectors (r_1..r_N).
std::set<std::vector<int>> abstract_identity_set(int d, int N) {
    std::set<std::vector<int>> out;
    if (d == 1) {
        out.insert(std::vector<int>(N, 0));
        return out;
    }
    for (int b = 0; b < d; ++b) {
        std::vector<int> v(N, 0);
        v[N - 1] = b;
        out.insert(v);
    }
    for (int i = 1; i < N; ++i)
        for (int a = 1; a < d; ++a)
            for (int b = 0; b < d; ++b)
                for (int mask = 0; mask < (1 << (N - i - 1)); ++mask) {
                    std::vector<int> v(N, 0);
                    v[i - 1] = a;
                    v[i] = b;
                    for (int j = i + 2; j <= N; ++j)
                        if (mask & (1 << (j - i - 2))) v[j - 1] = 1;
                    out.insert(v);
                }
    return out;
}

// Tilde variable order for a nonempty increasing-start pattern: the head
// index, then the end-of-block follower, then the uncovered indices in
// increasing order.
std::vector<int> tilde_variables(const CyclePattern& p, int n) {
    auto covered = index_set(p);
    auto is_covered = [&](int s) {
        return std::binary_search(covered.begin(), covered.end(), s);
    };
    int head = p.cycles.front().first;
    int follower = p.cycles[block_end(p, 1) - 1].first + 1;
    std::vector<int> vars = {head, follower};
    for (int s = 1; s <= n; ++s)
        if (!is_covered(s) && s != follower) vars.push_back(s);
    return vars;
}

}  // namespace

TEST_CASE("identity monomial set matches its description and count") {
    for (int d = 1; d <= 4; ++d)
        for (int n = 2; n <= 6; ++n) {
            auto got_list = monomial_set_identity(d, n);
            std::set<ExponentVector> got(got_list.begin(), got_list.end());
            CHECK(got.size() == got_list.size());  // no duplicates
            CHECK(got == abstract_identity_set(d, n));
            CHECK(Integer(static_cast<unsigned long>(got.size())) ==
                  monomial_set_size(d, n, 0));
        }
}

TEST_CASE("pattern monomial sets match the divisibility description") {
    // The braces defining the set are equivalent to: identity-type monomials
    // in the tilde variables that no product of the first variable with a
    // later-than-second variable divides.
    for (int d = 1; d <= 3; ++d)
        for (int n = 3; n <= 6; ++n)
            for (const auto& pat : enumerate_tn(n)) {
                if (pat.empty()) continue;
                int m = weight(pat);
                int N = n - m + 1;
                auto vars = tilde_variables(pat, n);
                REQUIRE(static_cast<int>(vars.size()) == N);

                std::set<std::vector<int>> expected;
                for (const auto& r : abstract_identity_set(d, N)) {
                    bool divisible = false;
                    for (int j = 3; j <= N; ++j)
                        if (r[0] > 0 && r[j - 1] > 0) divisible = true;
                    if (divisible) continue;
                    std::vector<int> full(n, 0);
                    for (int i = 0; i < N; ++i) full[vars[i] - 1] = r[i];
                    expected.insert(full);
                }

                auto got_list = monomial_set(d, n, pat);
                std::set<ExponentVector> got(got_list.begin(), got_list.end());
                CHECK(got.size() == got_list.size());
                CHECK(got == expected);
            }
}

TEST_CASE("pattern monomial set counts") {
    for (int d = 1; d <= 4; ++d)
        for (int n = 3; n <= 7; ++n)
            for (const auto& pat : enumerate_tn(n)) {
                if (pat.empty()) continue;
                int m = weight(pat);
                Integer size(static_cast<unsigned long>(monomial_set(d, n, pat).size()));
                CHECK(size == monomial_set_size(d, n, m));
                CHECK(size == int_pow(Integer(2), n - m - 1) * d * d -
                                  (int_pow(Integer(2), n - m - 1) - 1) * d);
            }
}

TEST_CASE("monomial sets vanish off the support") {
    // Covered indices other than the head never carry exponents.
    for (int d = 2; d <= 3; ++d)
        for (const auto& pat : enumerate_tn(5)) {
            if (pat.empty()) continue;
            auto covered = index_set(pat);
            int head = pat.cycles.front().first;
            for (const auto& r : monomial_set(d, 5, pat))
                for (int s : covered)
                    if (s != head) CHECK(r[s - 1] == 0);
        }
}

TEST_CASE("monomial set rejects invalid patterns") {
    CHECK_THROWS_AS(monomial_set(2, 3, CyclePattern({{1, 0}, {2, 1}})),
                    std::invalid_argument);
}

TEST_CASE("quotient basis sizes match the dimension formula") {
    for (int d = 1; d <= 3; ++d)
        for (int n = 3; n <= 6; ++n) {
            auto basis = enumerate_quotient_basis(d, n);
            CHECK(Integer(static_cast<unsigned long>(basis.size())) ==
                  ytl_dimension_formula(d, n));
            // Per-pattern block sizes add up via the weight census.
            Integer by_weight = 0;
            for (int m = 0; m < n; ++m)
                by_weight += z_count(n, m) * monomial_set_size(d, n, m);
            CHECK(by_weight == ytl_dimension_formula(d, n));
        }
}

TEST_CASE("quotient basis block structure at (2,3)") {
    auto basis = enumerate_quotient_basis(2, 3);
    REQUIRE(basis.size() == 28);
    std::map<CyclePattern, int> block;
    for (const auto& b : basis) {
        ++block[b.pattern];
        CHECK(b.framing.size() == 3);
        for (int r : b.framing) {
            CHECK(r >= 0);
            CHECK(r < 2);
        }
    }
    CHECK(block[CyclePattern{}] == 8);
    CHECK(block[CyclePattern({{1, 0}})] == 6);
    CHECK(block[CyclePattern({{2, 0}})] == 6);
    CHECK(block[CyclePattern({{1, 0}, {2, 0}})] == 4);
    CHECK(block[CyclePattern({{2, 1}})] == 4);

    // All (framing, pattern) pairs distinct.
    std::set<std::pair<ExponentVector, CyclePattern>> uniq;
    for (const auto& b : basis) uniq.insert({b.framing, b.pattern});
    CHECK(uniq.size() == basis.size());
}

TEST_CASE("d = 1 basis is one monomial per pattern") {
    for (int n = 3; n <= 7; ++n) {
        auto basis = enumerate_quotient_basis(1, n);
        CHECK(Integer(static_cast<unsigned long>(basis.size())) == catalan(n));
        for (const auto& b : basis)
            CHECK(b.framing == ExponentVector(n, 0));
    }
}
