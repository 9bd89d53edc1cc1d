#ifndef KMODENUM_MATROID_HPP
#define KMODENUM_MATROID_HPP

#include <cstddef>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "kmodenum/column_set.hpp"
#include "kmodenum/ratmat.hpp"

namespace kmodenum {

/**
 * The linear matroid on the columns of a matrix, with a memoized rank
 * oracle. The cache is keyed by the sorted column-index tuple (column
 * names are unique, so this is the same key as the sorted name tuple) and
 * guarded by a mutex; everything else is immutable.
 */
class LinearMatroid {
public:
    explicit LinearMatroid(RationalMatrix matrix);

    const RationalMatrix& matrix() const { return matrix_; }
    std::size_t ground_size() const { return matrix_.cols(); }
    ColumnSet ground_set() const { return ColumnSet::range(ground_size()); }

    std::size_t rank_of(const ColumnSet& cols) const;
    std::size_t full_rank() const { return rank_of(ground_set()); }

    /// rho(A) = rank(A) + rank(R \ A) - rank(R) + 1; symmetric in A <-> R \ A.
    std::size_t connectivity(const ColumnSet& cols) const;

    /// rank(A) + rank(R \ A) - rank(R) < k, i.e. rho(A) <= k.
    bool is_k_separator(const ColumnSet& cols, std::size_t k) const;

    std::size_t cache_size() const;

private:
    RationalMatrix matrix_;
    mutable std::mutex mutex_;
    mutable std::unordered_map<ColumnSet, std::size_t, ColumnSetHash> cache_;
};

}  // namespace kmodenum

#endif  // KMODENUM_MATROID_HPP
