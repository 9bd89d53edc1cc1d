#ifndef KMODENUM_COLUMN_SET_HPP
#define KMODENUM_COLUMN_SET_HPP

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <vector>

namespace kmodenum {

/// A set of column indices, kept sorted and duplicate-free. This is the
/// canonical key used for rank caching and face deduplication.
class ColumnSet {
public:
    ColumnSet() = default;
    ColumnSet(std::initializer_list<std::size_t> indices);
    explicit ColumnSet(std::vector<std::size_t> indices);

    static ColumnSet range(std::size_t n);
    /// Bit i of `mask` selects column i.
    static ColumnSet from_mask(unsigned long long mask);

    std::size_t size() const { return idx_.size(); }
    bool empty() const { return idx_.empty(); }
    bool contains(std::size_t i) const;
    bool is_subset_of(const ColumnSet& other) const;
    bool intersects(const ColumnSet& other) const;

    const std::vector<std::size_t>& indices() const { return idx_; }
    auto begin() const { return idx_.begin(); }
    auto end() const { return idx_.end(); }
    std::size_t operator[](std::size_t pos) const { return idx_[pos]; }

    ColumnSet unite(const ColumnSet& other) const;
    ColumnSet intersect(const ColumnSet& other) const;
    ColumnSet minus(const ColumnSet& other) const;
    /// {0..n-1} minus this set.
    ColumnSet complement(std::size_t n) const;

    auto operator<=>(const ColumnSet& other) const = default;
    bool operator==(const ColumnSet& other) const = default;

private:
    std::vector<std::size_t> idx_;
};

struct ColumnSetHash {
    std::size_t operator()(const ColumnSet& s) const noexcept;
};

}  // namespace kmodenum

#endif  // KMODENUM_COLUMN_SET_HPP
