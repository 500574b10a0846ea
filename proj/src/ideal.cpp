#include "ytl/ideal.hpp"

namespace ytl {

BasisIndexer::BasisIndexer(int d, int n) : d_(d), n_(n) {
    if (d < 1 || n < 1) throw std::invalid_argument("BasisIndexer: need d >= 1, n >= 1");
    patterns_ = enumerate_hn(n);
    for (size_t i = 0; i < patterns_.size(); ++i) pattern_index_[patterns_[i]] = i;
    framings_ = 1;
    for (int j = 0; j < n; ++j) framings_ *= static_cast<size_t>(d);
    total_ = framings_ * patterns_.size();
}

size_t BasisIndexer::index_of(const FramedWord& w) const {
    auto it = pattern_index_.find(w.pattern);
    if (it == pattern_index_.end())
        throw std::invalid_argument("BasisIndexer: unknown pattern");
    size_t code = 0;
    for (int j = n_ - 1; j >= 0; --j) {
        int f = w.framing[j];
        if (f < 0 || f >= d_)
            throw std::invalid_argument("BasisIndexer: framing out of range");
        code = code * d_ + static_cast<size_t>(f);
    }
    return it->second * framings_ + code;
}

FramedWord BasisIndexer::word_at(size_t index) const {
    if (index >= total_) throw std::out_of_range("BasisIndexer: index out of range");
    size_t code = index % framings_;
    size_t p = index / framings_;
    std::vector<int> framing(n_);
    for (int j = 0; j < n_; ++j) {
        framing[j] = static_cast<int>(code % d_);
        code /= d_;
    }
    return FramedWord{std::move(framing), patterns_[p]};
}

}  // namespace ytl
