#ifndef KMODENUM_POLYHEDRON_HPP
#define KMODENUM_POLYHEDRON_HPP

#include <memory>
#include <vector>

#include "kmodenum/lpexact.hpp"
#include "kmodenum/ratmat.hpp"

namespace kmodenum {

/**
 * P = {x : Sx = b, x >= 0}. The matrix and right-hand side are immutable;
 * the feasibility point and per-coordinate ranges are computed on first
 * use and then frozen. Copies share those caches.
 */
class PolyhedronSpec {
public:
    PolyhedronSpec(RationalMatrix matrix, RationalVector rhs);

    const RationalMatrix& matrix() const { return matrix_; }
    const RationalVector& rhs() const { return rhs_; }
    std::size_t num_columns() const { return matrix_.cols(); }
    std::size_t num_rows() const { return matrix_.rows(); }
    const std::vector<std::string>& column_names() const { return matrix_.col_names(); }

    /// The constraints Sx = b, x >= 0 without objective.
    lp::LpProblem constraints() const;

    bool is_empty() const;
    /// A point of P from phase one; throws EmptyPolyhedron.
    const RationalVector& feasible_point() const;
    /// (x_i^min, x_i^max) for every column; throws EmptyPolyhedron.
    const std::vector<lp::CoordinateRange>& ranges() const;
    /// True iff every coordinate has a finite upper bound; throws EmptyPolyhedron.
    bool is_bounded() const;

private:
    struct Cache;
    RationalMatrix matrix_;
    RationalVector rhs_;
    std::shared_ptr<Cache> cache_;
};

}  // namespace kmodenum

#endif  // KMODENUM_POLYHEDRON_HPP
