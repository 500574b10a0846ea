#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "ytl/algebra.hpp"
#include "ytl/monomials.hpp"

namespace ytl {

// Indexes the d^n n! basis words of the framed algebra: index =
// pattern_position * d^n + mixed-radix framing code (position 1 least
// significant).
class BasisIndexer {
  public:
    BasisIndexer(int d, int n);

    int d() const { return d_; }
    int n() const { return n_; }
    size_t size() const { return total_; }
    size_t index_of(const FramedWord& w) const;
    FramedWord word_at(size_t index) const;
    const std::vector<CyclePattern>& patterns() const { return patterns_; }

  private:
    int d_, n_;
    size_t framings_, total_;
    std::vector<CyclePattern> patterns_;
    std::map<CyclePattern, size_t> pattern_index_;
};

template <class C, class F, class Conv>
std::vector<F> to_coordinates(const AlgebraElement<C>& x, const BasisIndexer& idx,
                              Conv conv) {
    std::vector<F> v(idx.size(), F(0));
    for (const auto& [w, c] : x.terms) v[idx.index_of(w)] = conv(c);
    return v;
}

// Row echelon space over an exact field F: rows are kept pivot-normalized
// (leading coefficient 1) and sorted by pivot column.
template <class F>
class RowSpace {
  public:
    size_t rank() const { return rows_.size(); }
    const std::vector<std::pair<size_t, std::vector<F>>>& rows() const { return rows_; }

    void reduce(std::vector<F>& v) const {
        for (const auto& [pivot, row] : rows_) {
            if (coeff_is_zero(v[pivot])) continue;
            F factor = v[pivot];
            v[pivot] = F(0);
            for (size_t j = pivot + 1; j < v.size(); ++j) {
                if (coeff_is_zero(row[j])) continue;
                v[j] -= factor * row[j];
            }
        }
    }

    // Reduces v and inserts the residue when nonzero.  Returns true when the
    // rank grew.
    bool insert(std::vector<F> v) {
        reduce(v);
        size_t pivot = v.size();
        for (size_t j = 0; j < v.size(); ++j) {
            if (!coeff_is_zero(v[j])) {
                pivot = j;
                break;
            }
        }
        if (pivot == v.size()) return false;
        F lead = v[pivot];
        v[pivot] = F(1);
        for (size_t j = pivot + 1; j < v.size(); ++j) {
            if (coeff_is_zero(v[j])) continue;
            v[j] = v[j] / lead;
        }
        auto pos = rows_.begin();
        while (pos != rows_.end() && pos->first < pivot) ++pos;
        rows_.insert(pos, {pivot, std::move(v)});
        return true;
    }

    bool contains(std::vector<F> v) const {
        reduce(v);
        for (const auto& c : v)
            if (!coeff_is_zero(c)) return false;
        return true;
    }

  private:
    std::vector<std::pair<size_t, std::vector<F>>> rows_;
};

// Row space of the two-sided ideal generated by `seed`, computed as the
// closure of the seed's line under left and right multiplication by all
// algebra generators (g_i, and t_j when d > 1).  Every independent image is
// kept as an element and its images are explored in turn; when no image
// escapes the span, the span is multiplication-closed and hence equals the
// ideal.
template <class C, class F, class Conv>
RowSpace<F> ideal_row_space(const AlgebraContext<C>& ctx, const BasisIndexer& idx,
                            const AlgebraElement<C>& seed, Conv conv) {
    RowSpace<F> space;
    std::vector<AlgebraElement<C>> worklist;
    auto offer = [&](const AlgebraElement<C>& x) {
        if (x.is_zero()) return;
        if (space.insert(to_coordinates<C, F, Conv>(x, idx, conv)))
            worklist.push_back(x);
    };
    offer(seed);
    std::vector<AlgebraElement<C>> gens;
    for (int i = 1; i <= ctx.n() - 1; ++i) gens.push_back(ctx.g(i));
    if (ctx.d() > 1)
        for (int j = 1; j <= ctx.n(); ++j) gens.push_back(ctx.t(j));
    for (size_t k = 0; k < worklist.size(); ++k) {
        AlgebraElement<C> x = worklist[k];  // copy: worklist may reallocate
        for (const auto& gen : gens) {
            offer(ctx.multiply(gen, x));
            offer(ctx.multiply(x, gen));
        }
    }
    return space;
}

// Streams the rows b1 * seed * b2 over all basis-word pairs (b1, b2) in
// index order.  The literal all-pairs matrix of the ideal; rank-equivalent
// to ideal_row_space but quadratically more rows, so only suitable for
// small (d, n).
template <class C>
class IdealMatrixStream {
  public:
    IdealMatrixStream(const AlgebraContext<C>& ctx, const BasisIndexer& idx,
                      AlgebraElement<C> seed)
        : ctx_(ctx), idx_(idx), seed_(std::move(seed)) {}

    size_t row_count() const { return idx_.size() * idx_.size(); }
    size_t rows_emitted() const { return emitted_; }

    // Returns false when all rows have been produced.
    template <class F, class Conv>
    bool next(std::vector<F>& row, Conv conv) {
        if (emitted_ >= row_count()) return false;
        size_t i1 = emitted_ / idx_.size();
        size_t i2 = emitted_ % idx_.size();
        if (i2 == 0) {
            FramedWord b1 = idx_.word_at(i1);
            left_ = ctx_.multiply(ctx_.framed_unit(b1.framing, b1.pattern), seed_);
        }
        FramedWord b2 = idx_.word_at(i2);
        row = to_coordinates<C, F, Conv>(
            ctx_.multiply(left_, ctx_.framed_unit(b2.framing, b2.pattern)), idx_, conv);
        ++emitted_;
        return true;
    }

  private:
    const AlgebraContext<C>& ctx_;
    const BasisIndexer& idx_;
    AlgebraElement<C> seed_;
    AlgebraElement<C> left_;
    size_t emitted_ = 0;
};

}  // namespace ytl
