#include "kmodenum/lpexact.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#include "kmodenum/errors.hpp"
#include "kmodenum/polyhedron.hpp"

namespace kmodenum::lp {

namespace {

std::atomic<std::size_t> g_optimal_checked{0};
std::atomic<std::size_t> g_violations{0};

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

/// Dense simplex tableau over standard-form columns. Row i reads
/// basis[i] + sum_j rows[i][j] x_j = rows[i].back() over nonbasic x_j.
struct Tableau {
    std::vector<RationalVector> rows;
    std::vector<std::size_t> basis;
    std::size_t ncols = 0;

    void pivot(std::size_t r, std::size_t col, RationalVector& reduced) {
        RationalVector& prow = rows[r];
        const Rational inv = 1 / prow[col];
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j <= ncols; ++j) {
            if (sgn(prow[j]) != 0) {
                prow[j] *= inv;
                nz.push_back(j);
            }
        }
        auto eliminate = [&](RationalVector& target) {
            if (sgn(target[col]) == 0) return;
            const Rational factor = target[col];
            for (std::size_t j : nz) target[j] -= factor * prow[j];
        };
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r) eliminate(rows[i]);
        }
        eliminate(reduced);
        basis[r] = col;
    }

    /// Maximizes cost . x with Bland's rule; returns false when unbounded.
    bool optimize(const RationalVector& cost) {
        // reduced[j] = cost_j - sum_i cost_{basis[i]} rows[i][j]
        RationalVector reduced(ncols + 1);
        for (std::size_t j = 0; j < ncols; ++j) reduced[j] = cost[j];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Rational& cb = cost[basis[i]];
            if (sgn(cb) == 0) continue;
            for (std::size_t j = 0; j <= ncols; ++j) {
                if (sgn(rows[i][j]) != 0) reduced[j] -= cb * rows[i][j];
            }
        }
        for (;;) {
            std::size_t entering = kNone;
            for (std::size_t j = 0; j < ncols; ++j) {
                if (sgn(reduced[j]) > 0) {
                    entering = j;
                    break;
                }
            }
            if (entering == kNone) return true;

            std::size_t leaving = kNone;
            Rational best_ratio;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (sgn(rows[i][entering]) <= 0) continue;
                Rational ratio = rows[i][ncols] / rows[i][entering];
                if (leaving == kNone || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leaving])) {
                    leaving = i;
                    best_ratio = std::move(ratio);
                }
            }
            if (leaving == kNone) return false;
            pivot(leaving, entering, reduced);
        }
    }

    RationalVector basic_solution() const {
        RationalVector x(ncols);
        for (std::size_t i = 0; i < rows.size(); ++i) x[basis[i]] = rows[i][ncols];
        return x;
    }
};

}  // namespace

bool satisfies(const LpProblem& problem, const RationalVector& x) {
    const RationalMatrix& a = problem.eq_matrix;
    if (x.size() != a.cols()) return false;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (problem.var_kinds[j] == VarKind::NonNegative && sgn(x[j]) < 0) return false;
    }
    const RationalVector lhs = a.multiply(x);
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (lhs[i] != problem.eq_rhs[i]) return false;
    }
    return true;
}

VerificationStats verification_stats() {
    return VerificationStats{g_optimal_checked.load(), g_violations.load()};
}

struct FeasibleRegion::Impl {
    LpProblem problem;
    // Standard-form column of each original variable, and of its negative
    // part for free variables (kNone otherwise).
    std::vector<std::size_t> pos_col;
    std::vector<std::size_t> neg_col;
    std::size_t std_cols = 0;
    bool empty = true;
    Tableau tableau;
    RationalVector point;

    RationalVector to_original(const RationalVector& std_x) const {
        RationalVector x(pos_col.size());
        for (std::size_t j = 0; j < pos_col.size(); ++j) {
            x[j] = std_x[pos_col[j]];
            if (neg_col[j] != kNone) x[j] -= std_x[neg_col[j]];
        }
        return x;
    }

    void phase_one() {
        const RationalMatrix& a = problem.eq_matrix;
        const std::size_t m = a.rows();
        const std::size_t n = a.cols();
        pos_col.assign(n, kNone);
        neg_col.assign(n, kNone);
        std_cols = 0;
        for (std::size_t j = 0; j < n; ++j) {
            pos_col[j] = std_cols++;
            if (problem.var_kinds[j] == VarKind::Free) neg_col[j] = std_cols++;
        }

        Tableau& t = tableau;
        t.ncols = std_cols + m;
        t.rows.assign(m, RationalVector(t.ncols + 1));
        t.basis.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            const bool flip = sgn(problem.eq_rhs[i]) < 0;
            RationalVector& row = t.rows[i];
            for (std::size_t j = 0; j < n; ++j) {
                const Rational& v = a(i, j);
                if (sgn(v) == 0) continue;
                row[pos_col[j]] = flip ? Rational(-v) : v;
                if (neg_col[j] != kNone) row[neg_col[j]] = flip ? v : Rational(-v);
            }
            row[std_cols + i] = 1;
            row[t.ncols] = flip ? Rational(-problem.eq_rhs[i]) : problem.eq_rhs[i];
            t.basis[i] = std_cols + i;
        }

        RationalVector cost(t.ncols);
        for (std::size_t i = 0; i < m; ++i) cost[std_cols + i] = -1;
        t.optimize(cost);  // bounded above by zero

        for (std::size_t i = 0; i < m; ++i) {
            if (t.basis[i] >= std_cols && sgn(t.rows[i][t.ncols]) != 0) {
                empty = true;
                return;
            }
        }
        empty = false;

        // Drive zero-level artificials out of the basis; rows where that is
        // impossible are redundant and dropped.
        RationalVector scratch(t.ncols + 1);
        std::vector<bool> keep(m, true);
        for (std::size_t i = 0; i < m; ++i) {
            if (t.basis[i] < std_cols) continue;
            std::size_t col = kNone;
            for (std::size_t j = 0; j < std_cols; ++j) {
                if (sgn(t.rows[i][j]) != 0) {
                    col = j;
                    break;
                }
            }
            if (col == kNone) keep[i] = false;
            else t.pivot(i, col, scratch);
        }
        Tableau reduced;
        reduced.ncols = std_cols;
        for (std::size_t i = 0; i < m; ++i) {
            if (!keep[i]) continue;
            RationalVector row(t.rows[i].begin(), t.rows[i].begin() + static_cast<std::ptrdiff_t>(std_cols));
            row.push_back(t.rows[i][t.ncols]);
            reduced.rows.push_back(std::move(row));
            reduced.basis.push_back(t.basis[i]);
        }
        tableau = std::move(reduced);
        point = to_original(tableau.basic_solution());
    }
};

FeasibleRegion::FeasibleRegion(const LpProblem& constraints) : impl_(std::make_unique<Impl>()) {
    const RationalMatrix& a = constraints.eq_matrix;
    if (constraints.eq_rhs.size() != a.rows() || constraints.var_kinds.size() != a.cols()) {
        throw std::invalid_argument("malformed LP: dimension mismatch");
    }
    impl_->problem = constraints;
    impl_->problem.objective.clear();
    impl_->phase_one();
}

FeasibleRegion::~FeasibleRegion() = default;
FeasibleRegion::FeasibleRegion(FeasibleRegion&&) noexcept = default;
FeasibleRegion& FeasibleRegion::operator=(FeasibleRegion&&) noexcept = default;

bool FeasibleRegion::empty() const { return impl_->empty; }

const RationalVector& FeasibleRegion::point() const {
    if (impl_->empty) throw EmptyPolyhedron();
    return impl_->point;
}

LpOutcome FeasibleRegion::maximize(const RationalVector& objective) const {
    LpOutcome out;
    if (impl_->empty) {
        out.status = LpStatus::Infeasible;
        return out;
    }
    if (objective.size() != impl_->pos_col.size()) throw std::invalid_argument("objective has wrong length");
    RationalVector cost(impl_->std_cols);
    for (std::size_t j = 0; j < objective.size(); ++j) {
        cost[impl_->pos_col[j]] = objective[j];
        if (impl_->neg_col[j] != kNone) cost[impl_->neg_col[j]] = -objective[j];
    }
    Tableau t = impl_->tableau;
    if (!t.optimize(cost)) {
        out.status = LpStatus::Unbounded;
        return out;
    }
    out.status = LpStatus::Optimal;
    out.point = impl_->to_original(t.basic_solution());
    out.value = 0;
    for (std::size_t j = 0; j < objective.size(); ++j) out.value += objective[j] * out.point[j];

    ++g_optimal_checked;
    if (!satisfies(impl_->problem, out.point)) {
        ++g_violations;
        throw std::logic_error("simplex returned a point violating its constraints");
    }
    return out;
}

CoordinateRange FeasibleRegion::range(std::size_t column) const {
    if (impl_->empty) throw EmptyPolyhedron();
    RationalVector objective(impl_->pos_col.size());
    CoordinateRange r;
    objective[column] = 1;
    if (auto hi = maximize(objective); hi.status == LpStatus::Optimal) r.upper = hi.value;
    objective[column] = -1;
    if (auto lo = maximize(objective); lo.status == LpStatus::Optimal) r.lower = Rational(-lo.value);
    return r;
}

LpOutcome solve(const LpProblem& problem) {
    FeasibleRegion region(problem);
    RationalVector objective = problem.objective;
    if (objective.empty()) objective.assign(problem.eq_matrix.cols(), Rational(0));
    return region.maximize(objective);
}

CoordinateRange coordinate_range(const LpProblem& constraints, std::size_t column) {
    if (column >= constraints.eq_matrix.cols()) throw std::out_of_range("coordinate out of range");
    return FeasibleRegion(constraints).range(column);
}

bool face_feasible(const PolyhedronSpec& poly, const ColumnSet& module, const ColumnSet& zeros) {
    if (!zeros.is_subset_of(module)) throw std::invalid_argument("face zeros must lie inside the module");
    const RationalMatrix& s = poly.matrix();
    const ColumnSet free_cols = zeros.complement(s.cols());
    const ColumnSet positive = module.minus(zeros);

    // Columns: x_j (j not in F), z, one slack per i in A \ F.
    std::vector<std::string> names;
    for (std::size_t j : free_cols) names.push_back("x" + std::to_string(j));
    names.push_back("z");
    for (std::size_t i : positive) names.push_back("s" + std::to_string(i));
    std::vector<std::string> row_names = s.row_names();
    for (std::size_t i : positive) row_names.push_back("pos" + std::to_string(i));

    LpProblem problem;
    problem.eq_matrix = RationalMatrix(row_names, names);
    problem.eq_rhs.assign(row_names.size(), Rational(0));
    problem.var_kinds.assign(names.size(), VarKind::NonNegative);
    const std::size_t z = free_cols.size();
    problem.var_kinds[z] = VarKind::Free;

    for (std::size_t r = 0; r < s.rows(); ++r) {
        for (std::size_t k = 0; k < free_cols.size(); ++k) problem.eq_matrix(r, k) = s(r, free_cols[k]);
        problem.eq_rhs[r] = poly.rhs()[r];
    }
    for (std::size_t p = 0; p < positive.size(); ++p) {
        const std::size_t row = s.rows() + p;
        const auto col = static_cast<std::size_t>(
            std::lower_bound(free_cols.begin(), free_cols.end(), positive[p]) - free_cols.begin());
        problem.eq_matrix(row, col) = 1;
        problem.eq_matrix(row, z) = -1;
        problem.eq_matrix(row, z + 1 + p) = -1;
    }
    problem.objective.assign(names.size(), Rational(0));
    problem.objective[z] = 1;

    const LpOutcome out = solve(problem);
    switch (out.status) {
        case LpStatus::Infeasible: return false;
        case LpStatus::Unbounded: return true;
        case LpStatus::Optimal: return sgn(out.value) > 0;
    }
    return false;
}

}  // namespace kmodenum::lp
