#include "ytl/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ytl {

void validate_u0(const Rational& u0) {
    if (u0 == 0 || u0 == 1 || u0 == -1)
        throw std::invalid_argument(
            "u0 must avoid {0, 1, -1}: the quadratic relation degenerates there");
}

std::vector<Rational> default_u_values(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Rational> out;
    while (static_cast<int>(out.size()) < count) {
        long num = 2 + static_cast<long>(rng() % 23);
        long den = 1 + static_cast<long>(rng() % 7);
        Rational r(num, den);
        r.canonicalize();
        if (r == 1) continue;
        if (std::find(out.begin(), out.end(), r) != out.end()) continue;
        out.push_back(r);
    }
    return out;
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        Integer num(text);
        return Rational(num);
    }
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

QuotientWorkspace::QuotientWorkspace(int d, int n, const Rational& u0)
    : u0_(u0), ctx_(make_numeric_context(d, n, u0)), idx_(d, n) {
    validate_u0(u0);
    if (n < 3)
        throw std::invalid_argument("QuotientWorkspace: the quotient needs n >= 3");
    ideal_ = ideal_row_space<Rational, Rational>(
        ctx_, idx_, ctx_.parabolic_sum(1), [](const Rational& c) { return c; });
}

std::vector<Rational> QuotientWorkspace::coordinates(
    const AlgebraElement<Rational>& x) const {
    return to_coordinates<Rational, Rational>(x, idx_,
                                              [](const Rational& c) { return c; });
}

bool QuotientWorkspace::zero_in_quotient(const AlgebraElement<Rational>& x) const {
    return ideal_.contains(coordinates(x));
}

const RowSpace<Rational>& QuotientWorkspace::degree_filtered_space(int bound) const {
    if (bound < 0) bound = 0;
    auto it = filtered_.find(bound);
    if (it != filtered_.end()) return it->second;

    int base = 0;
    const RowSpace<Rational>* src = &ideal_;
    for (const auto& [b, sp] : filtered_) {
        if (b < bound) {
            base = b;
            src = &sp;
        }
    }
    RowSpace<Rational> space = *src;
    const int n = ctx_.n(), d = ctx_.d();
    for (const auto& pat : enumerate_tn(n)) {
        int deg = pat.degree();
        if (deg < base || deg >= bound) continue;
        std::vector<int> framing(n, 0);
        while (true) {
            std::vector<Rational> row(idx_.size(), Rational(0));
            row[idx_.index_of(FramedWord{framing, pat})] = 1;
            space.insert(std::move(row));
            int pos = 0;
            while (pos < n && ++framing[pos] == d) {
                framing[pos] = 0;
                ++pos;
            }
            if (pos == n) break;
        }
    }
    auto ins = filtered_.emplace(bound, std::move(space));
    return ins.first->second;
}

DimensionReport verify_quotient_dimension(
    const std::vector<const QuotientWorkspace*>& spaces) {
    if (spaces.empty())
        throw std::invalid_argument("verify_quotient_dimension: no workspaces");
    DimensionReport rep;
    rep.d = spaces.front()->d();
    rep.n = spaces.front()->n();
    rep.algebra_dim = int_pow(Integer(rep.d), rep.n) * factorial(rep.n);
    rep.expected_quotient_dim = ytl_dimension_formula(rep.d, rep.n);
    rep.sum_squares = ytl_dimension_sum_squares(rep.d, rep.n);
    rep.formula_matches_sum_squares =
        rep.expected_quotient_dim == rep.sum_squares;
    bool ok = rep.formula_matches_sum_squares;
    for (const auto* ws : spaces) {
        rep.u_values.push_back(ws->u0());
        size_t r = ws->ideal_rank();
        rep.ranks.push_back(r);
        Integer q = rep.algebra_dim - Integer(static_cast<unsigned long>(r));
        rep.quotient_dims.push_back(q);
        ok = ok && q == rep.expected_quotient_dim;
    }
    rep.pass = ok;
    return rep;
}

DimensionReport verify_quotient_dimension(int d, int n,
                                          const std::vector<Rational>& u_values) {
    std::vector<QuotientWorkspace> spaces;
    spaces.reserve(u_values.size());
    for (const auto& u : u_values) spaces.emplace_back(d, n, u);
    std::vector<const QuotientWorkspace*> ptrs;
    for (const auto& ws : spaces) ptrs.push_back(&ws);
    return verify_quotient_dimension(ptrs);
}

IndependenceReport verify_basis_independence(const QuotientWorkspace& ws) {
    IndependenceReport rep;
    rep.d = ws.d();
    rep.n = ws.n();
    rep.u0 = ws.u0();
    auto basis = enumerate_quotient_basis(ws.d(), ws.n());
    rep.basis_size = basis.size();
    RowSpace<Rational> space = ws.ideal();
    for (size_t pos = 0; pos < basis.size(); ++pos) {
        std::vector<Rational> row(ws.indexer().size(), Rational(0));
        row[ws.indexer().index_of(FramedWord{basis[pos].framing, basis[pos].pattern})] =
            1;
        if (space.insert(std::move(row)))
            ++rep.independent;
        else
            rep.dependent_positions.push_back(pos);
    }
    rep.pass = rep.dependent_positions.empty();
    return rep;
}

IndependenceReport verify_basis_independence(int d, int n, const Rational& u0) {
    return verify_basis_independence(QuotientWorkspace(d, n, u0));
}

namespace {

std::string check_name(const std::string& base, std::initializer_list<int> args) {
    std::string s = base + "(";
    bool first = true;
    for (int a : args) {
        if (!first) s += ",";
        s += std::to_string(a);
        first = false;
    }
    return s + ")";
}

}  // namespace

LedgerReport verify_relation_ledger(const QuotientWorkspace& ws) {
    const auto& ctx = ws.ctx();
    const int n = ws.n();
    const int d = ws.d();
    LedgerReport rep;
    rep.d = d;
    rep.n = n;
    rep.u0 = ws.u0();

    using Elem = AlgebraElement<Rational>;
    auto zero_check = [&](std::string name, const Elem& x) {
        rep.checks.push_back({std::move(name), ws.zero_in_quotient(x)});
    };
    auto span_check = [&](std::string name, const Elem& x, int degree) {
        const auto& space = ws.degree_filtered_space(degree);
        rep.checks.push_back({std::move(name), space.contains(ws.coordinates(x))});
    };
    auto tdiff = [&](int a, int b) { return ctx.t(a) - ctx.t(b); };
    auto mul = [&](const Elem& a, const Elem& b) { return ctx.multiply(a, b); };
    const Elem one = ctx.one();
    auto vandermonde = [&](int a, int b, int c) {
        return mul(mul(tdiff(a, b), tdiff(a, c)), tdiff(b, c));
    };

    // Identities that vanish in the quotient (lie in the two-sided ideal).
    for (int i = 1; i <= n - 2; ++i) {
        Elem gi = ctx.g(i), gj = ctx.g(i + 1);
        zero_check(check_name("cubic_sum", {i}), ctx.parabolic_sum(i));
        zero_check(check_name("shift_left", {i}),
                   mul(tdiff(i, i + 2), one + gi) +
                       mul(tdiff(i, i + 1), gj + mul(gj, gi)));
        zero_check(check_name("shift_right", {i}),
                   mul(tdiff(i + 2, i), one + gj) +
                       mul(tdiff(i + 2, i + 1), gi + mul(gi, gj)));
        zero_check(check_name("quad_above", {i}),
                   mul(mul(tdiff(i + 2, i + 1), tdiff(i + 2, i)), gi + one));
        zero_check(check_name("triple_adjacent", {i}),
                   mul(mul(tdiff(i, i + 1), tdiff(i + 1, i + 2)), tdiff(i, i + 2)));
    }
    for (int i = 2; i <= n - 1; ++i)
        zero_check(check_name("quad_below", {i}),
                   mul(mul(tdiff(i - 1, i + 1), tdiff(i - 1, i)), ctx.g(i) + one));
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                zero_check(check_name("vandermonde_zero", {a, b, c}),
                           vandermonde(a, b, c));
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n; ++j)
            zero_check(check_name("quad_zero", {j, i}),
                       mul(mul(tdiff(j, i), tdiff(j, i + 1)), ctx.g(i) + one));

    // Memberships in the span of the ideal plus strictly lower-degree words.
    for (int i = 1; i <= n - 2; ++i) {
        span_check(check_name("collapse_cubic", {i}),
                   ctx.product_of_generators({i, i + 1, i}), 3);
        span_check(check_name("drop_descending", {i}),
                   mul(tdiff(i, i + 1), ctx.product_of_generators({i + 1, i})), 2);
        span_check(check_name("drop_ascending", {i}),
                   mul(tdiff(i + 2, i + 1), ctx.product_of_generators({i, i + 1})),
                   2);
    }
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n; ++j)
            span_check(check_name("drop_single", {j, i}),
                       mul(mul(tdiff(j, i), tdiff(j, i + 1)), ctx.g(i)), 1);
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                span_check(check_name("kernel_vandermonde", {a, b, c}),
                           vandermonde(a, b, c), 0);
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j)
            span_check(check_name("commuting_pair", {i, j}),
                       mul(ctx.t(i) + ctx.t(i + 1) - ctx.t(j) - ctx.t(j + 1),
                           ctx.product_of_generators({i, j})),
                       2);
    for (int i = 1; i <= n - 1; ++i)
        for (int k = 0; k < i; ++k) {
            Elem w = ctx.framed_unit(ctx.zero_framing(), CyclePattern({{i, k}}));
            for (int j = i - k; j <= i; ++j)
                span_check(check_name("run_head", {i, k, j}), mul(tdiff(j, i), w),
                           k + 1);
            for (int j = 1; j <= n; ++j)
                span_check(check_name("run_quad", {i, k, j}),
                           mul(mul(tdiff(j, i), tdiff(j, i + 1)), w), k + 1);
        }

    // The per-pattern relation family behind the quotient basis.
    for (const auto& pat : enumerate_tn(n)) {
        if (pat.empty()) continue;
        Elem w = ctx.framed_unit(ctx.zero_framing(), pat);
        int deg = pat.degree();
        std::string pname = pat.to_string();
        auto pat_check = [&](const std::string& which, int arg, const Elem& x) {
            span_check("pattern_" + which + "[" + pname + "](" +
                           std::to_string(arg) + ")",
                       x, deg);
        };
        int i1 = pat.cycles.front().first;
        int k1 = pat.cycles.front().second;
        for (int j = i1 - k1; j <= i1; ++j)
            pat_check("head", j, mul(tdiff(j, i1), w));
        for (int j = 1; j <= n; ++j)
            pat_check("quad", j, mul(mul(tdiff(j, i1), tdiff(j, i1 + 1)), w));
        for (size_t l = 1; l < pat.cycles.size(); ++l) {
            int il = pat.cycles[l].first;
            int kl = pat.cycles[l].second;
            int prev = pat.cycles[l - 1].first;
            int ml = std::max(il - kl, prev + 2);
            for (int j = ml; j <= il; ++j)
                pat_check("run", j, mul(tdiff(j, il), w));
            if (il > prev + 1)
                pat_check("pair_sum", static_cast<int>(l) + 1,
                          mul(ctx.t(il) + ctx.t(il + 1) - ctx.t(i1) - ctx.t(i1 + 1),
                              w));
            if (il - kl <= prev + 1)
                pat_check("chain", static_cast<int>(l) + 1,
                          mul(tdiff(il + 1, prev + 1), w));
        }
    }

    // For d = 2 the triple difference product already cancels before any
    // reduction.
    if (d == 2)
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                for (int c = b + 1; c <= n; ++c)
                    rep.checks.push_back(
                        {check_name("vanishing_product", {a, b, c}),
                         vandermonde(a, b, c) == ctx.zero()});

    rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                           [](const CheckItem& c) { return c.pass; });
    return rep;
}

LedgerReport verify_relation_ledger(int d, int n, const Rational& u0) {
    return verify_relation_ledger(QuotientWorkspace(d, n, u0));
}

DefiningRelationsReport verify_defining_relations(int d, int n) {
    auto ctx = make_symbolic_context(d, n);
    using Elem = AlgebraElement<LaurentPoly>;
    DefiningRelationsReport rep;
    rep.d = d;
    rep.n = n;

    auto mul = [&](const Elem& a, const Elem& b) { return ctx.multiply(a, b); };
    auto add_check = [&](std::string name, const Elem& lhs, const Elem& rhs) {
        rep.checks.push_back({std::move(name), lhs == rhs});
    };
    auto power = [&](const Elem& x, int e) {
        Elem acc = ctx.one();
        for (int k = 0; k < e; ++k) acc = mul(acc, x);
        return acc;
    };
    const LaurentPoly u_minus_1 = LaurentPoly::variable() - LaurentPoly(1);

    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
            add_check(check_name("t_commute", {j, k}), mul(ctx.t(j), ctx.t(k)),
                      mul(ctx.t(k), ctx.t(j)));
    for (int j = 1; j <= n; ++j)
        add_check(check_name("t_order", {j}), power(ctx.t(j), d), ctx.one());
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n; ++j) {
            int sj = j == i ? i + 1 : (j == i + 1 ? i : j);
            add_check(check_name("t_transport", {i, j}), mul(ctx.t(j), ctx.g(i)),
                      mul(ctx.g(i), ctx.t(sj)));
        }
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 2; j <= n - 1; ++j)
            add_check(check_name("distant_commute", {i, j}),
                      mul(ctx.g(i), ctx.g(j)), mul(ctx.g(j), ctx.g(i)));
    for (int i = 1; i <= n - 2; ++i)
        add_check(check_name("braid", {i}),
                  mul(mul(ctx.g(i), ctx.g(i + 1)), ctx.g(i)),
                  mul(mul(ctx.g(i + 1), ctx.g(i)), ctx.g(i + 1)));
    for (int i = 1; i <= n - 1; ++i) {
        Elem ei = ctx.e(i), gi = ctx.g(i);
        add_check(check_name("quadratic", {i}), mul(gi, gi),
                  ctx.one() + ctx.scale(ei, u_minus_1) +
                      ctx.scale(mul(ei, gi), u_minus_1));
        add_check(check_name("idempotent", {i}), mul(ei, ei), ei);
        add_check(check_name("projector_commutes", {i}), mul(ei, gi), mul(gi, ei));
        add_check(check_name("inverse_right", {i}), mul(gi, ctx.g_inverse(i)),
                  ctx.one());
        add_check(check_name("inverse_left", {i}), mul(ctx.g_inverse(i), gi),
                  ctx.one());
    }
    if (n >= 3) {
        std::vector<int> cycle_word;
        for (int l = 1; l <= n - 1; ++l) cycle_word.push_back(l);
        Elem c = ctx.product_of_generators(cycle_word);
        Elem cinv = ctx.one();
        for (int l = n - 1; l >= 1; --l) cinv = mul(cinv, ctx.g_inverse(l));
        add_check("cycle_inverse", mul(c, cinv), ctx.one());
        for (int i = 2; i <= n - 2; ++i) {
            Elem conj = ctx.parabolic_sum(1);
            for (int k = 1; k < i; ++k) conj = mul(mul(c, conj), cinv);
            add_check(check_name("parabolic_conjugate", {i}), ctx.parabolic_sum(i),
                      conj);
        }
    }

    rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                           [](const CheckItem& c) { return c.pass; });
    return rep;
}

SpanningReport verify_word_spanning(const QuotientWorkspace& ws, int trials,
                                    std::uint64_t seed) {
    SpanningReport rep;
    rep.d = ws.d();
    rep.n = ws.n();
    rep.trials = trials;
    rep.seed = seed;
    const auto& ctx = ws.ctx();
    const int n = ws.n(), d = ws.d();
    std::mt19937_64 rng(seed);

    for (int trial = 0; trial < trials; ++trial) {
        int m = static_cast<int>(rng() % (2 * (n - 1) + 1));
        std::vector<int> letters(m);
        for (int& l : letters) l = 1 + static_cast<int>(rng() % (n - 1));
        std::vector<int> framing(n);
        for (int& f : framing) f = static_cast<int>(rng() % d);

        AlgebraElement<Rational> x = ctx.framed_unit(framing, CyclePattern{});
        for (int l : letters) x = ctx.multiply(x, ctx.g(l));

        const auto& space = ws.degree_filtered_space(m + 1);
        if (!space.contains(ws.coordinates(x))) {
            std::ostringstream desc;
            desc << "trial " << trial << ": framing=[";
            for (int j = 0; j < n; ++j) desc << (j ? "," : "") << framing[j];
            desc << "] letters=[";
            for (int k = 0; k < m; ++k) desc << (k ? "," : "") << letters[k];
            desc << "]";
            rep.failures.push_back(desc.str());
        }
    }
    rep.pass = rep.failures.empty();
    return rep;
}

size_t symbolic_ideal_rank(int d, int n) {
    auto ctx = make_symbolic_context(d, n);
    BasisIndexer idx(d, n);
    auto space = ideal_row_space<LaurentPoly, FunctionField>(
        ctx, idx, ctx.parabolic_sum(1),
        [](const LaurentPoly& p) { return FunctionField::from_laurent(p); });
    return space.rank();
}

FullReport run_full_verification(int d, int n, const std::vector<Rational>& u_values,
                                 bool symbolic, std::uint64_t seed) {
    if (n < 3)
        throw std::invalid_argument("run_full_verification: the quotient needs n >= 3");
    std::vector<Rational> us = u_values.empty() ? default_u_values(2, seed) : u_values;
    for (const auto& u : us) validate_u0(u);

    std::vector<QuotientWorkspace> spaces;
    spaces.reserve(us.size());
    for (const auto& u : us) spaces.emplace_back(d, n, u);
    std::vector<const QuotientWorkspace*> ptrs;
    for (const auto& ws : spaces) ptrs.push_back(&ws);

    FullReport rep;
    rep.dimensions = verify_quotient_dimension(ptrs);
    rep.independence = verify_basis_independence(spaces.front());
    rep.ledger = verify_relation_ledger(spaces.front());
    rep.defining = verify_defining_relations(d, n);
    int trials = rep.dimensions.algebra_dim <= 100 ? 200 : 50;
    rep.spanning = verify_word_spanning(spaces.front(), trials, seed);
    if (symbolic) {
        size_t r = symbolic_ideal_rank(d, n);
        rep.symbolic_rank = r;
        rep.symbolic_rank_matches =
            rep.dimensions.algebra_dim - Integer(static_cast<unsigned long>(r)) ==
            rep.dimensions.expected_quotient_dim;
    }
    rep.pass = rep.dimensions.pass && rep.independence.pass && rep.ledger.pass &&
               rep.defining.pass && rep.spanning.pass && rep.symbolic_rank_matches;
    return rep;
}

}  // namespace ytl
