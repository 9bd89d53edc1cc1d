#ifndef KMODENUM_LPEXACT_HPP
#define KMODENUM_LPEXACT_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "kmodenum/column_set.hpp"
#include "kmodenum/ratmat.hpp"

namespace kmodenum {

class PolyhedronSpec;

namespace lp {

enum class VarKind { NonNegative, Free };

/// maximize objective . x  s.t.  eq_matrix x = eq_rhs, x_j >= 0 for
/// nonnegative variables. An empty objective means "no objective".
struct LpProblem {
    RationalVector objective;
    RationalMatrix eq_matrix;
    RationalVector eq_rhs;
    std::vector<VarKind> var_kinds;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
    LpStatus status = LpStatus::Infeasible;
    RationalVector point;  // when Optimal
    Rational value;        // when Optimal
};

/// Interval [lower, upper] of one coordinate; nullopt is -inf / +inf.
struct CoordinateRange {
    std::optional<Rational> lower;
    std::optional<Rational> upper;

    bool constant() const { return lower && upper && *lower == *upper; }
};

/// True iff x satisfies every equality and sign constraint exactly.
bool satisfies(const LpProblem& problem, const RationalVector& x);

/// Counters over every Optimal solution produced in this process; each one
/// is checked with `satisfies` before it is returned.
struct VerificationStats {
    std::size_t optimal_checked = 0;
    std::size_t violations = 0;
};
VerificationStats verification_stats();

/**
 * The feasible region of an LpProblem, prepared once by phase one of the
 * simplex method. Later objectives reuse the feasible basis, so repeated
 * optimizations over one region (coordinate ranges) skip phase one.
 *
 * Bland's rule is used for both entering and leaving variables, which
 * guarantees termination. Free variables are split into x+ - x-.
 */
class FeasibleRegion {
public:
    explicit FeasibleRegion(const LpProblem& constraints);
    ~FeasibleRegion();
    FeasibleRegion(FeasibleRegion&&) noexcept;
    FeasibleRegion& operator=(FeasibleRegion&&) noexcept;

    bool empty() const;
    /// The basic feasible point found by phase one; requires !empty().
    const RationalVector& point() const;

    LpOutcome maximize(const RationalVector& objective) const;
    /// Exact inf/sup of x_column; throws EmptyPolyhedron when empty().
    CoordinateRange range(std::size_t column) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

LpOutcome solve(const LpProblem& problem);

/// Exact inf/sup of x_column over the constraints (objective ignored);
/// throws EmptyPolyhedron when the region is empty.
CoordinateRange coordinate_range(const LpProblem& constraints, std::size_t column);

/**
 * Is F a feasible A-face, i.e. is there x in P with x_F = 0 and
 * x_{A \ F} > 0? Decided by the LP
 *
 *     max z  s.t.  Sx = b, x_F = 0, x_i - z >= 0 (i in A \ F), x >= 0,
 *
 * which certifies the strict inequalities: F is feasible iff the LP is
 * unbounded or its optimum is positive.
 */
bool face_feasible(const PolyhedronSpec& poly, const ColumnSet& module, const ColumnSet& zeros);

}  // namespace lp
}  // namespace kmodenum

#endif  // KMODENUM_LPEXACT_HPP
