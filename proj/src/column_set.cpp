#include "kmodenum/column_set.hpp"

#include <algorithm>
#include <iterator>

namespace kmodenum {

ColumnSet::ColumnSet(std::initializer_list<std::size_t> indices)
    : ColumnSet(std::vector<std::size_t>(indices)) {}

ColumnSet::ColumnSet(std::vector<std::size_t> indices) : idx_(std::move(indices)) {
    std::sort(idx_.begin(), idx_.end());
    idx_.erase(std::unique(idx_.begin(), idx_.end()), idx_.end());
}

ColumnSet ColumnSet::range(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    ColumnSet s;
    s.idx_ = std::move(v);
    return s;
}

ColumnSet ColumnSet::from_mask(unsigned long long mask) {
    ColumnSet s;
    for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
        if (mask & 1ULL) s.idx_.push_back(i);
    }
    return s;
}

bool ColumnSet::contains(std::size_t i) const {
    return std::binary_search(idx_.begin(), idx_.end(), i);
}

bool ColumnSet::is_subset_of(const ColumnSet& other) const {
    return std::includes(other.idx_.begin(), other.idx_.end(), idx_.begin(), idx_.end());
}

bool ColumnSet::intersects(const ColumnSet& other) const {
    auto a = idx_.begin();
    auto b = other.idx_.begin();
    while (a != idx_.end() && b != other.idx_.end()) {
        if (*a == *b) return true;
        if (*a < *b) ++a; else ++b;
    }
    return false;
}

ColumnSet ColumnSet::unite(const ColumnSet& other) const {
    ColumnSet out;
    std::set_union(idx_.begin(), idx_.end(), other.idx_.begin(), other.idx_.end(),
                   std::back_inserter(out.idx_));
    return out;
}

ColumnSet ColumnSet::intersect(const ColumnSet& other) const {
    ColumnSet out;
    std::set_intersection(idx_.begin(), idx_.end(), other.idx_.begin(), other.idx_.end(),
                          std::back_inserter(out.idx_));
    return out;
}

ColumnSet ColumnSet::minus(const ColumnSet& other) const {
    ColumnSet out;
    std::set_difference(idx_.begin(), idx_.end(), other.idx_.begin(), other.idx_.end(),
                        std::back_inserter(out.idx_));
    return out;
}

ColumnSet ColumnSet::complement(std::size_t n) const { return range(n).minus(*this); }

std::size_t ColumnSetHash::operator()(const ColumnSet& s) const noexcept {
    std::size_t h = s.size();
    for (std::size_t i : s) h ^= std::hash<std::size_t>{}(i) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

}  // namespace kmodenum
