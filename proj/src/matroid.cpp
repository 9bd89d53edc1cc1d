#include "kmodenum/matroid.hpp"

#include <stdexcept>

namespace kmodenum {

LinearMatroid::LinearMatroid(RationalMatrix matrix) : matrix_(std::move(matrix)) {}

std::size_t LinearMatroid::rank_of(const ColumnSet& cols) const {
    if (cols.empty()) return 0;
    if (cols.indices().back() >= ground_size()) throw std::out_of_range("column outside the ground set");
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(cols); it != cache_.end()) return it->second;
    }
    // Computed outside the lock; a racing duplicate computes the same value.
    const std::size_t r = rank(matrix_.select_columns(cols));
    std::lock_guard lock(mutex_);
    cache_.emplace(cols, r);
    return r;
}

std::size_t LinearMatroid::connectivity(const ColumnSet& cols) const {
    const std::size_t inside = rank_of(cols);
    const std::size_t outside = rank_of(cols.complement(ground_size()));
    return inside + outside - full_rank() + 1;
}

bool LinearMatroid::is_k_separator(const ColumnSet& cols, std::size_t k) const {
    return connectivity(cols) <= k;
}

std::size_t LinearMatroid::cache_size() const {
    std::lock_guard lock(mutex_);
    return cache_.size();
}

}  // namespace kmodenum
