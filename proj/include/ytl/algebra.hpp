#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ytl/cycle_pattern.hpp"
#include "ytl/function_field.hpp"
#include "ytl/laurent.hpp"
#include "ytl/permutation.hpp"

namespace ytl {

inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const LaurentPoly& c) { return c.is_zero(); }
inline bool coeff_is_zero(const FunctionField& c) { return c.is_zero(); }

// Basis word t_1^{r_1}...t_n^{r_n} g_pattern: framing exponents plus a
// reduced braiding word.
struct FramedWord {
    std::vector<int> framing;
    CyclePattern pattern;

    auto operator<=>(const FramedWord&) const = default;
};

// Linear combination of basis words.  Coefficient type C is a commutative
// ring containing the rationals: exact rationals (u specialized), Laurent
// polynomials in u, or rational functions of u.
template <class C>
struct AlgebraElement {
    std::map<FramedWord, C> terms;  // zero coefficients are never stored

    bool is_zero() const { return terms.empty(); }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        for (const auto& [w, c] : o.terms) {
            auto [it, inserted] = terms.try_emplace(w, c);
            if (!inserted) {
                it->second += c;
                if (coeff_is_zero(it->second)) terms.erase(it);
            }
        }
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& o) {
        for (const auto& [w, c] : o.terms) {
            auto it = terms.find(w);
            if (it == terms.end()) {
                C neg = C(0);
                neg -= c;
                terms.emplace(w, std::move(neg));
            } else {
                it->second -= c;
                if (coeff_is_zero(it->second)) terms.erase(it);
            }
        }
        return *this;
    }
    AlgebraElement operator+(const AlgebraElement& o) const {
        AlgebraElement r = *this;
        return r += o;
    }
    AlgebraElement operator-(const AlgebraElement& o) const {
        AlgebraElement r = *this;
        return r -= o;
    }
    bool operator==(const AlgebraElement& o) const { return terms == o.terms; }

    void add_term(FramedWord w, const C& c) {
        if (coeff_is_zero(c)) return;
        auto [it, inserted] = terms.try_emplace(std::move(w), c);
        if (!inserted) {
            it->second += c;
            if (coeff_is_zero(it->second)) terms.erase(it);
        }
    }
};

// Normal-form arithmetic for the framed algebra on n strands with framings
// modulo d.  Products are rewritten into the basis {t^r g_pattern} using:
//   - framings move left through braidings by permuting positions,
//   - appending a generator to a reduced word either extends the word or
//     triggers the quadratic relation
//       g_w g_i = g_{w'} + (u-1) e_{a,b} g_{w'} + (u-1) e_{a,b} g_w
//     where w = w' s_i is the shorter word, a = w'(i), b = w'(i+1) and
//     e_{a,b} = (1/d) sum_s t_a^s t_b^{-s}.
// Expansion results are memoized per (pattern, generator) and per pattern
// pair, so a context instance is cheap to reuse and single-threaded.
template <class C>
class AlgebraContext {
  public:
    using Element = AlgebraElement<C>;

    AlgebraContext(int d, int n, C u_minus_1, C uinv_minus_1)
        : d_(d), n_(n), u_minus_1_(std::move(u_minus_1)),
          uinv_minus_1_(std::move(uinv_minus_1)),
          inv_d_(C(Rational(1, d))) {
        if (d < 1 || n < 2)
            throw std::invalid_argument("AlgebraContext: need d >= 1, n >= 2");
    }

    int d() const { return d_; }
    int n() const { return n_; }

    std::vector<int> zero_framing() const { return std::vector<int>(n_, 0); }

    Element zero() const { return Element{}; }

    Element one() const { return framed_unit(zero_framing(), CyclePattern{}); }

    Element framed_unit(std::vector<int> framing, CyclePattern pattern) const {
        if (static_cast<int>(framing.size()) != n_)
            throw std::invalid_argument("framed_unit: framing length mismatch");
        for (int& f : framing) f = ((f % d_) + d_) % d_;
        if (!is_valid_pattern(pattern, n_))
            throw std::invalid_argument("framed_unit: invalid pattern");
        Element x;
        x.terms.emplace(FramedWord{std::move(framing), std::move(pattern)}, C(1));
        return x;
    }

    Element t(int j, int power = 1) const {
        if (j < 1 || j > n_) throw std::invalid_argument("t: index out of range");
        auto f = zero_framing();
        f[j - 1] = power;
        return framed_unit(std::move(f), CyclePattern{});
    }

    Element g(int i) const {
        if (i < 1 || i > n_ - 1) throw std::invalid_argument("g: index out of range");
        return framed_unit(zero_framing(), CyclePattern({{i, 0}}));
    }

    // (1/d) sum_s t_a^s t_b^{-s}; idempotent projecting onto equal framings
    // at positions a and b.
    Element e_pair(int a, int b) const {
        if (a == b) return one();
        Element x;
        for (int s = 0; s < d_; ++s) {
            auto f = zero_framing();
            f[a - 1] = s;
            f[b - 1] = (d_ - s) % d_;
            x.add_term(FramedWord{std::move(f), CyclePattern{}}, inv_d_);
        }
        return x;
    }

    Element e(int i) const { return e_pair(i, i + 1); }

    // g_i + (u^{-1}-1) e_i + (u^{-1}-1) e_i g_i
    Element g_inverse(int i) const {
        Element x = g(i);
        CyclePattern gi({{i, 0}});
        for (const auto& [w, c] : e(i).terms) {
            C coeff = uinv_minus_1_ * c;
            x.add_term(FramedWord{w.framing, CyclePattern{}}, coeff);
            x.add_term(FramedWord{w.framing, gi}, coeff);
        }
        return x;
    }

    // g_i g_{i+1} g_i + g_i g_{i+1} + g_{i+1} g_i + g_i + g_{i+1} + 1:
    // the sum over the parabolic subgroup on strands i, i+1, i+2.  The
    // quotient ideal is generated by the i = 1 instance.
    Element parabolic_sum(int i) const {
        if (i < 1 || i > n_ - 2)
            throw std::invalid_argument("parabolic_sum: index out of range");
        Element gi = g(i), gj = g(i + 1);
        Element gij = multiply(gi, gj), gji = multiply(gj, gi);
        return multiply(gij, gi) + gij + gji + gi + gj + one();
    }

    Element scale(const Element& x, const C& c) const {
        Element r;
        if (coeff_is_zero(c)) return r;
        for (const auto& [w, wc] : x.terms) {
            C p = wc * c;
            if (!coeff_is_zero(p)) r.terms.emplace(w, std::move(p));
        }
        return r;
    }

    // Framing transport: position j carries its exponent to position w(j).
    std::vector<int> act(const Permutation& w, const std::vector<int>& r) const {
        std::vector<int> out(n_);
        for (int j = 1; j <= n_; ++j) out[w.apply(j) - 1] = r[j - 1];
        return out;
    }

    Element multiply(const Element& a, const Element& b) const {
        Element out;
        for (const auto& [wa, ca] : a.terms) {
            const Permutation& w = perm_of(wa.pattern);
            for (const auto& [wb, cb] : b.terms) {
                C c = ca * cb;
                std::vector<int> framing = wa.framing;
                std::vector<int> moved = act(w, wb.framing);
                for (int j = 0; j < n_; ++j) framing[j] = (framing[j] + moved[j]) % d_;
                for (const auto& [pw, pc] : pattern_product(wa.pattern, wb.pattern).terms) {
                    std::vector<int> f = framing;
                    for (int j = 0; j < n_; ++j) f[j] = (f[j] + pw.framing[j]) % d_;
                    out.add_term(FramedWord{std::move(f), pw.pattern}, c * pc);
                }
            }
        }
        return out;
    }

    Element product_of_generators(const std::vector<int>& letters) const {
        Element x = one();
        for (int l : letters) x = multiply(x, g(l));
        return x;
    }

    const Permutation& perm_of(const CyclePattern& p) const {
        auto it = perm_memo_.find(p);
        if (it == perm_memo_.end())
            it = perm_memo_.emplace(p, pattern_to_permutation(p, n_)).first;
        return it->second;
    }

  private:
    int d_, n_;
    C u_minus_1_, uinv_minus_1_, inv_d_;
    mutable std::map<CyclePattern, Permutation> perm_memo_;
    mutable std::map<std::pair<CyclePattern, int>, Element> gen_memo_;
    mutable std::map<std::pair<CyclePattern, CyclePattern>, Element> product_memo_;

    // Expansion of (basis braiding word) * g_i.
    const Element& pattern_times_generator(const CyclePattern& x, int i) const {
        auto key = std::make_pair(x, i);
        auto it = gen_memo_.find(key);
        if (it != gen_memo_.end()) return it->second;

        const Permutation& wx = perm_of(x);
        Element r;
        if (wx.apply(i) < wx.apply(i + 1)) {
            r = framed_unit(zero_framing(),
                            permutation_to_pattern(append_transposition(wx, i)));
        } else {
            Permutation shorter = append_transposition(wx, i);
            CyclePattern px = permutation_to_pattern(shorter);
            int a = shorter.apply(i), b = shorter.apply(i + 1);
            r = framed_unit(zero_framing(), px);
            for (const auto& [w, c] : e_pair(a, b).terms) {
                C coeff = u_minus_1_ * c;
                r.add_term(FramedWord{w.framing, px}, coeff);
                r.add_term(FramedWord{w.framing, x}, coeff);
            }
        }
        return gen_memo_.emplace(std::move(key), std::move(r)).first->second;
    }

    // Expansion of g_w * g_v into basis words (with framings produced by the
    // quadratic relation).
    const Element& pattern_product(const CyclePattern& w, const CyclePattern& v) const {
        auto key = std::make_pair(w, v);
        auto it = product_memo_.find(key);
        if (it != product_memo_.end()) return it->second;

        Element cur = framed_unit(zero_framing(), w);
        for (int letter : v.word()) {
            Element next;
            for (const auto& [fw, c] : cur.terms) {
                for (const auto& [ew, ec] : pattern_times_generator(fw.pattern, letter).terms) {
                    std::vector<int> f = fw.framing;
                    for (int j = 0; j < n_; ++j) f[j] = (f[j] + ew.framing[j]) % d_;
                    next.add_term(FramedWord{std::move(f), ew.pattern}, c * ec);
                }
            }
            cur = std::move(next);
        }
        return product_memo_.emplace(std::move(key), std::move(cur)).first->second;
    }
};

inline AlgebraContext<LaurentPoly> make_symbolic_context(int d, int n) {
    LaurentPoly u = LaurentPoly::variable();
    LaurentPoly uinv = LaurentPoly::monomial(1, -1);
    return AlgebraContext<LaurentPoly>(d, n, u - LaurentPoly(1), uinv - LaurentPoly(1));
}

inline AlgebraContext<Rational> make_numeric_context(int d, int n, const Rational& u0) {
    if (u0 == 0)
        throw std::invalid_argument("make_numeric_context: u must be invertible");
    return AlgebraContext<Rational>(d, n, u0 - 1, Rational(1) / u0 - 1);
}

}  // namespace ytl
