#include "ytl/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ytl {

SkewShape::SkewShape(Partition out, Partition in)
    : outer(std::move(out)), inner(std::move(in)) {
    if (!outer.contains(inner))
        throw std::invalid_argument("SkewShape: inner partition not contained in outer");
}

bool SkewShape::contains_cell(int r, int c) const {
    if (r < 1 || r > rows()) return false;
    return c > inner.at(r) && c <= outer.at(r);
}

SkewTableau::SkewTableau(SkewShape s, std::vector<std::vector<int>> e)
    : shape(std::move(s)), entries(std::move(e)) {
    if (static_cast<int>(entries.size()) != shape.rows())
        throw std::invalid_argument("SkewTableau: wrong number of rows");
    for (int r = 1; r <= shape.rows(); ++r)
        if (static_cast<int>(entries[r - 1].size()) !=
            shape.outer.at(r) - shape.inner.at(r))
            throw std::invalid_argument("SkewTableau: wrong row length");
}

int SkewTableau::value_at(int r, int c) const {
    if (!shape.contains_cell(r, c))
        throw std::out_of_range("SkewTableau::value_at: cell not in shape");
    return entries[r - 1][c - shape.inner.at(r) - 1];
}

int SkewTableau::max_value() const {
    int m = 0;
    for (const auto& row : entries)
        for (int v : row) m = std::max(m, v);
    return m;
}

std::vector<int> SkewTableau::weight() const {
    std::vector<int> w(max_value(), 0);
    for (const auto& row : entries)
        for (int v : row) ++w[v - 1];
    return w;
}

bool SkewTableau::is_semistandard() const {
    for (int r = 1; r <= shape.rows(); ++r) {
        for (int c = shape.inner.at(r) + 1; c <= shape.outer.at(r); ++c) {
            int v = value_at(r, c);
            if (v < 1) return false;
            if (shape.contains_cell(r, c - 1) && value_at(r, c - 1) > v)
                return false;
            if (shape.contains_cell(r - 1, c) && value_at(r - 1, c) >= v)
                return false;
        }
    }
    return true;
}

namespace {

struct FillState {
    const SkewShape& shape;
    std::vector<int> remaining;            // per value
    std::vector<std::vector<int>> rows;    // partial filling
    std::vector<SkewTableau>& out;

    void fill(int r, int c) {
        if (r > shape.rows()) {
            out.push_back(SkewTableau(shape, rows));
            return;
        }
        if (c > shape.outer.at(r)) {
            fill(r + 1, shape.inner.at(r + 1) + 1);
            return;
        }
        int lo = 1;
        if (shape.contains_cell(r, c - 1))
            lo = std::max(lo, rows[r - 1][c - shape.inner.at(r) - 2]);
        if (r > 1 && shape.contains_cell(r - 1, c))
            lo = std::max(lo, value_above(r, c) + 1);
        for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
            if (remaining[v - 1] == 0) continue;
            --remaining[v - 1];
            rows[r - 1].push_back(v);
            fill(r, c + 1);
            rows[r - 1].pop_back();
            ++remaining[v - 1];
        }
    }

    int value_above(int r, int c) const {
        return rows[r - 2][c - shape.inner.at(r - 1) - 1];
    }
};

}  // namespace

std::vector<SkewTableau> enumerate_skew_semistandard(const SkewShape& shape,
                                                     const std::vector<int>& weight) {
    for (int w : weight)
        if (w < 0) throw std::invalid_argument("enumerate_skew_semistandard: negative weight");
    std::vector<SkewTableau> out;
    if (std::accumulate(weight.begin(), weight.end(), 0) != shape.cells())
        return out;
    FillState st{shape, weight, {}, out};
    st.rows.resize(shape.rows());
    if (shape.rows() == 0) {
        out.push_back(SkewTableau(shape, {}));
        return out;
    }
    st.fill(1, shape.inner.at(1) + 1);
    return out;
}

Integer standard_tableaux_count(const Partition& shape) {
    Integer denom = 1;
    Partition conj = shape.conjugate();
    for (int r = 1; r <= shape.rows(); ++r)
        for (int c = 1; c <= shape.at(r); ++c)
            denom *= (shape.at(r) - c) + (conj.at(c) - r) + 1;
    return factorial(shape.size()) / denom;
}

Integer standard_d_tableaux_count(const DPartition& shape) {
    std::vector<int> sizes;
    Integer r = 1;
    for (const auto& comp : shape.components) {
        sizes.push_back(comp.size());
        r *= standard_tableaux_count(comp);
    }
    return r * multinomial(sizes);
}

}  // namespace ytl
