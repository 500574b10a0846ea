#include "ytl/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ytl {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::size() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

int Partition::at(int i) const {
    if (i < 1) throw std::out_of_range("Partition::at: rows are 1-based");
    return i <= rows() ? parts[i - 1] : 0;
}

bool Partition::contains(const Partition& inner) const {
    if (inner.rows() > rows()) return false;
    for (int i = 1; i <= inner.rows(); ++i)
        if (inner.at(i) > at(i)) return false;
    return true;
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    for (int col = 1; col <= (parts.empty() ? 0 : parts[0]); ++col) {
        int len = 0;
        while (len < rows() && parts[len] >= col) ++len;
        c.push_back(len);
    }
    return Partition(std::move(c));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ',';
        os << parts[i];
    }
    os << ')';
    return os.str();
}

namespace {

void gen_partitions(int n, int maxpart, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int first = std::min(n, maxpart); first >= 1; --first) {
        acc.push_back(first);
        gen_partitions(n - first, first, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: negative n");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_partitions(n, n, acc, out);
    return out;
}

int DPartition::size() const {
    int s = 0;
    for (const auto& c : components) s += c.size();
    return s;
}

std::string DPartition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < components.size(); ++i) {
        if (i) os << ',';
        os << components[i].to_string();
    }
    os << ')';
    return os.str();
}

namespace {

void gen_d_partitions(int slot, int d, int remaining,
                      std::vector<Partition>& acc, std::vector<DPartition>& out) {
    if (slot == d) {
        if (remaining == 0) out.push_back(DPartition(acc));
        return;
    }
    int lo = (slot == d - 1) ? remaining : 0;
    for (int sz = remaining; sz >= lo; --sz) {
        for (const auto& p : enumerate_partitions(sz)) {
            acc.push_back(p);
            gen_d_partitions(slot + 1, d, remaining - sz, acc, out);
            acc.pop_back();
        }
    }
}

}  // namespace

std::vector<DPartition> enumerate_d_partitions(int d, int n) {
    if (d < 1) throw std::invalid_argument("enumerate_d_partitions: d must be >= 1");
    if (n < 0) throw std::invalid_argument("enumerate_d_partitions: negative n");
    std::vector<DPartition> out;
    std::vector<Partition> acc;
    gen_d_partitions(0, d, n, acc, out);
    return out;
}

}  // namespace ytl
