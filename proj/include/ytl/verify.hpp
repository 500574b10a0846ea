#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ytl/ideal.hpp"
#include "ytl/rep_theory.hpp"

namespace ytl {

// Specialization values must keep the quadratic relation nondegenerate and u
// invertible: 0 is rejected outright, 1 and -1 are excluded defensively
// (classical/degenerate specializations where ranks can drop).
void validate_u0(const Rational& u0);

// Deterministic pseudo-random specialization points avoiding the denylist,
// pairwise distinct.
std::vector<Rational> default_u_values(int count, std::uint64_t seed);

Rational parse_rational(const std::string& text);  // "p" or "p/q"

// Numeric quotient context: the framed algebra at u = u0 together with the
// row space of the two-sided ideal generated by the parabolic sum on
// strands 1,2,3.
class QuotientWorkspace {
  public:
    QuotientWorkspace(int d, int n, const Rational& u0);

    int d() const { return ctx_.d(); }
    int n() const { return ctx_.n(); }
    const Rational& u0() const { return u0_; }
    const AlgebraContext<Rational>& ctx() const { return ctx_; }
    const BasisIndexer& indexer() const { return idx_; }
    const RowSpace<Rational>& ideal() const { return ideal_; }

    size_t ideal_rank() const { return ideal_.rank(); }
    std::vector<Rational> coordinates(const AlgebraElement<Rational>& x) const;
    bool zero_in_quotient(const AlgebraElement<Rational>& x) const;

    // Row space spanned by the ideal plus every framed increasing-start
    // word of degree < bound; cached per bound.
    const RowSpace<Rational>& degree_filtered_space(int bound) const;

  private:
    Rational u0_;
    AlgebraContext<Rational> ctx_;
    BasisIndexer idx_;
    RowSpace<Rational> ideal_;
    mutable std::map<int, RowSpace<Rational>> filtered_;
};

struct CheckItem {
    std::string name;
    bool pass;
};

struct DimensionReport {
    int d = 0, n = 0;
    Integer algebra_dim;
    Integer expected_quotient_dim;  // closed formula
    Integer sum_squares;            // representation-theoretic count
    std::vector<Rational> u_values;
    std::vector<size_t> ranks;
    std::vector<Integer> quotient_dims;
    bool formula_matches_sum_squares = false;
    bool pass = false;
};

struct IndependenceReport {
    int d = 0, n = 0;
    Rational u0;
    size_t basis_size = 0;
    size_t independent = 0;
    std::vector<size_t> dependent_positions;
    bool pass = false;
};

struct LedgerReport {
    int d = 0, n = 0;
    Rational u0;
    std::vector<CheckItem> checks;
    bool pass = false;
};

struct DefiningRelationsReport {
    int d = 0, n = 0;
    std::vector<CheckItem> checks;
    bool pass = false;
};

struct SpanningReport {
    int d = 0, n = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> failures;
    bool pass = false;
};

// d^n n! - rank(ideal) must equal the closed dimension formula and the sum
// of squared irreducible dimensions, at every supplied specialization.
DimensionReport verify_quotient_dimension(int d, int n,
                                          const std::vector<Rational>& u_values);
DimensionReport verify_quotient_dimension(const std::vector<const QuotientWorkspace*>& spaces);

// Inserts every quotient-basis word on top of the ideal row space; all of
// them must be independent.
IndependenceReport verify_basis_independence(const QuotientWorkspace& ws);
IndependenceReport verify_basis_independence(int d, int n, const Rational& u0);

// The linear dependence relations used to build the quotient basis: direct
// vanishing identities and lower-degree membership statements.
LedgerReport verify_relation_ledger(const QuotientWorkspace& ws);
LedgerReport verify_relation_ledger(int d, int n, const Rational& u0);

// Defining relations of the framed algebra, checked with Laurent-polynomial
// coefficients (no specialization).
DefiningRelationsReport verify_defining_relations(int d, int n);

// Random products of generators and framings must land in the span of the
// ideal plus basis words of no larger degree.
SpanningReport verify_word_spanning(const QuotientWorkspace& ws, int trials,
                                    std::uint64_t seed);

// Ideal rank over the rational-function field (no specialization).
size_t symbolic_ideal_rank(int d, int n);

struct FullReport {
    DimensionReport dimensions;
    IndependenceReport independence;
    LedgerReport ledger;
    DefiningRelationsReport defining;
    SpanningReport spanning;
    std::optional<size_t> symbolic_rank;
    bool symbolic_rank_matches = true;
    bool pass = false;
};

FullReport run_full_verification(int d, int n, const std::vector<Rational>& u_values,
                                 bool symbolic, std::uint64_t seed);

}  // namespace ytl
