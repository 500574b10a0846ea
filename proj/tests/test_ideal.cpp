#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ytl/ideal.hpp"
#include "ytl/verify.hpp"

using namespace ytl;

TEST_CASE("basis indexer round-trips") {
    BasisIndexer idx(2, 3);
    CHECK(idx.size() == 48);
    CHECK(idx.patterns().size() == 6);
    for (size_t i = 0; i < idx.size(); ++i)
        CHECK(idx.index_of(idx.word_at(i)) == i);

    FramedWord w{{1, 0, 1}, CyclePattern({{2, 1}})};
    CHECK(idx.word_at(idx.index_of(w)) == w);

    BasisIndexer big(3, 4);
    CHECK(big.size() == 81 * 24);
    CHECK(big.index_of(big.word_at(1234)) == 1234);
}

TEST_CASE("row space echelon operations") {
    RowSpace<Rational> space;
    CHECK(space.rank() == 0);
    CHECK(space.contains({Rational(0), Rational(0), Rational(0)}));

    CHECK(space.insert({Rational(0), Rational(2), Rational(4)}));
    CHECK(space.rank() == 1);
    // pivot normalized to 1
    CHECK(space.rows()[0].first == 1);
    CHECK(space.rows()[0].second == std::vector<Rational>{0, 1, 2});

    CHECK(!space.insert({Rational(0), Rational(-1), Rational(-2)}));
    CHECK(space.insert({Rational(3), Rational(1), Rational(0)}));
    CHECK(space.rank() == 2);
    CHECK(space.rows()[0].first == 0);  // rows sorted by pivot

    CHECK(space.contains({Rational(3), Rational(3), Rational(4)}));
    CHECK(!space.contains({Rational(0), Rational(0), Rational(1)}));

    std::vector<Rational> v{Rational(6), Rational(2), Rational(1)};
    space.reduce(v);
    CHECK(v[0] == 0);
    CHECK(v[1] == 0);
    CHECK(v[2] == 1);
}

TEST_CASE("specialization guardrails") {
    CHECK_THROWS_AS(validate_u0(Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(validate_u0(Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(validate_u0(Rational(-1)), std::invalid_argument);
    CHECK_NOTHROW(validate_u0(Rational(2)));
    CHECK_NOTHROW(validate_u0(Rational(5, 3)));
    CHECK_NOTHROW(validate_u0(Rational(-2)));

    CHECK_THROWS_AS(QuotientWorkspace(2, 3, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(QuotientWorkspace(2, 2, Rational(2)), std::invalid_argument);
}

TEST_CASE("default specialization points") {
    auto a = default_u_values(4, 7);
    auto b = default_u_values(4, 7);
    CHECK(a == b);  // deterministic
    CHECK(a.size() == 4);
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK_NOTHROW(validate_u0(a[i]));
        for (size_t j = i + 1; j < a.size(); ++j) CHECK(a[i] != a[j]);
    }
    CHECK(default_u_values(2, 7) != default_u_values(2, 8));
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK(parse_rational("5/3") == Rational(5, 3));
    CHECK(parse_rational("4/2") == Rational(2));
    CHECK(parse_rational("-4/6") == Rational(-2, 3));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("closure rank equals the streamed all-pairs rank") {
    const std::map<std::pair<int, int>, size_t> expected = {
        {{1, 3}, 1}, {{2, 3}, 20}, {{1, 4}, 10}};
    for (const auto& [dn, rank] : expected) {
        auto [d, n] = dn;
        QuotientWorkspace ws(d, n, Rational(3));
        CHECK(ws.ideal_rank() == rank);

        BasisIndexer idx(d, n);
        IdealMatrixStream<Rational> stream(ws.ctx(), idx, ws.ctx().parabolic_sum(1));
        RowSpace<Rational> brute;
        std::vector<Rational> row;
        auto id = [](const Rational& c) { return c; };
        while (stream.next(row, id)) brute.insert(std::move(row));
        CHECK(stream.rows_emitted() == stream.row_count());
        CHECK(brute.rank() == rank);
    }
}

TEST_CASE("ideal rank at larger sizes") {
    CHECK(QuotientWorkspace(3, 3, Rational(2)).ideal_rank() == 93);
    CHECK(QuotientWorkspace(2, 4, Rational(5, 3)).ideal_rank() == 288);
}

TEST_CASE("workspace quotient membership") {
    QuotientWorkspace ws(2, 3, Rational(7, 3));
    const auto& ctx = ws.ctx();
    auto ps = ctx.parabolic_sum(1);
    CHECK(ws.zero_in_quotient(ps));
    CHECK(ws.zero_in_quotient(ctx.multiply(ctx.g(2), ps)));
    CHECK(ws.zero_in_quotient(ctx.multiply(ctx.multiply(ctx.t(1), ps), ctx.g(1))));
    CHECK(!ws.zero_in_quotient(ctx.g(1)));
    CHECK(!ws.zero_in_quotient(ctx.one()));

    // degree filtration: ideal at the bottom, everything at the top
    CHECK(ws.degree_filtered_space(0).rank() == ws.ideal_rank());
    size_t prev = 0;
    for (int bound = 0; bound <= 4; ++bound) {
        size_t r = ws.degree_filtered_space(bound).rank();
        CHECK(r >= prev);
        prev = r;
    }
    CHECK(ws.degree_filtered_space(4).rank() == ws.indexer().size());
}

TEST_CASE("quotient dimension report") {
    auto rep = verify_quotient_dimension(2, 3, {Rational(2), Rational(5, 3)});
    CHECK(rep.pass);
    CHECK(rep.algebra_dim == 48);
    CHECK(rep.expected_quotient_dim == 28);
    CHECK(rep.sum_squares == 28);
    CHECK(rep.formula_matches_sum_squares);
    REQUIRE(rep.ranks.size() == 2);
    CHECK(rep.ranks[0] == 20);
    CHECK(rep.ranks[1] == 20);
    CHECK(rep.quotient_dims[0] == 28);
    CHECK(rep.quotient_dims[1] == 28);
}

TEST_CASE("basis independence report") {
    auto rep = verify_basis_independence(2, 3, Rational(2));
    CHECK(rep.pass);
    CHECK(rep.basis_size == 28);
    CHECK(rep.independent == 28);
    CHECK(rep.dependent_positions.empty());
}

TEST_CASE("relation ledger report") {
    for (auto [d, n] : {std::pair{2, 3}, {1, 4}}) {
        auto rep = verify_relation_ledger(d, n, Rational(3));
        CHECK(rep.pass);
        CHECK(!rep.checks.empty());
        for (const auto& item : rep.checks) CHECK(item.pass);
    }
}

TEST_CASE("word spanning report") {
    QuotientWorkspace ws(2, 3, Rational(2));
    auto rep = verify_word_spanning(ws, 200, 42);
    CHECK(rep.pass);
    CHECK(rep.trials == 200);
    CHECK(rep.failures.empty());
}

TEST_CASE("symbolic ideal rank") {
    CHECK(symbolic_ideal_rank(2, 3) == 20);
    CHECK(symbolic_ideal_rank(1, 4) == 10);
}

TEST_CASE("full verification bundle") {
    auto rep = run_full_verification(2, 3, {}, true, 2024);
    CHECK(rep.pass);
    CHECK(rep.dimensions.pass);
    CHECK(rep.independence.pass);
    CHECK(rep.ledger.pass);
    CHECK(rep.defining.pass);
    CHECK(rep.spanning.pass);
    REQUIRE(rep.symbolic_rank.has_value());
    CHECK(*rep.symbolic_rank == 20);
    CHECK(rep.symbolic_rank_matches);
    CHECK(rep.dimensions.u_values.size() == 2);  // defaults drawn from the seed
}
