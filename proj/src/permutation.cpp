#include "ytl/permutation.hpp"

#include <algorithm>
#include <stdexcept>

namespace ytl {

Permutation::Permutation(std::vector<int> images) : img(std::move(images)) {
    std::vector<bool> seen(img.size(), false);
    for (int v : img) {
        if (v < 1 || v > n() || seen[v - 1])
            throw std::invalid_argument("Permutation: not a permutation of 1..n");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    for (int j = 1; j <= n; ++j) img[j - 1] = j;
    Permutation p;
    p.img = std::move(img);
    return p;
}

Permutation Permutation::inverse() const {
    Permutation p = identity(n());
    for (int j = 1; j <= n(); ++j) p.img[img[j - 1] - 1] = j;
    return p;
}

Permutation Permutation::compose(const Permutation& other) const {
    if (n() != other.n())
        throw std::invalid_argument("Permutation::compose: size mismatch");
    Permutation p = identity(n());
    for (int j = 1; j <= n(); ++j) p.img[j - 1] = apply(other.apply(j));
    return p;
}

Permutation append_transposition(const Permutation& w, int i) {
    if (i < 1 || i >= w.n())
        throw std::invalid_argument("append_transposition: generator out of range");
    Permutation p = w;
    std::swap(p.img[i - 1], p.img[i]);
    return p;
}

int length(const Permutation& w) {
    int inv = 0;
    for (int a = 1; a <= w.n(); ++a)
        for (int b = a + 1; b <= w.n(); ++b)
            if (w.apply(a) > w.apply(b)) ++inv;
    return inv;
}

Permutation pattern_to_permutation(const CyclePattern& p, int n) {
    if (!is_valid_pattern(p, n))
        throw std::invalid_argument("pattern_to_permutation: invalid pattern");
    Permutation w = Permutation::identity(n);
    for (int letter : p.word()) w = append_transposition(w, letter);
    return w;
}

CyclePattern permutation_to_pattern(const Permutation& w0) {
    Permutation w = w0;
    std::vector<std::pair<int, int>> cycles;
    for (int t = w.n(); t >= 2; --t) {
        int j = w.inverse().apply(t);
        if (j == t) continue;
        cycles.push_back({t - 1, t - 1 - j});
        // strip the run: replace w by w o c^{-1} where c maps j up to t and
        // shifts (j, t] down by one
        std::vector<int> img(w.n());
        for (int x = 1; x <= w.n(); ++x) {
            int cx = (x == t) ? j : (x >= j && x < t ? x + 1 : x);
            img[x - 1] = w.apply(cx);
        }
        w = Permutation(std::move(img));
    }
    std::reverse(cycles.begin(), cycles.end());
    return CyclePattern(std::move(cycles));
}

}  // namespace ytl
