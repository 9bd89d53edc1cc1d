#include <doctest.h>

#include "kmodenum/errors.hpp"
#include "kmodenum/lpexact.hpp"
#include "kmodenum/oracle.hpp"
#include "kmodenum/polyhedron.hpp"
#include "support/instances.hpp"

using namespace kmodenum;
using namespace kmodenum::lp;
using kmodenum::testing::matrix;
using kmodenum::testing::vec;

namespace {

LpProblem problem(const std::vector<std::vector<long>>& rows, const std::vector<long>& rhs,
                  const std::vector<long>& objective) {
    LpProblem p;
    p.eq_matrix = matrix(rows);
    p.eq_rhs = vec(rhs);
    p.objective = vec(objective);
    p.var_kinds.assign(p.eq_matrix.cols(), VarKind::NonNegative);
    return p;
}

}  // namespace

TEST_CASE("solve: optimal, infeasible, unbounded") {
    const LpOutcome opt = solve(problem({{1, 1}}, {1}, {1, 0}));
    REQUIRE(opt.status == LpStatus::Optimal);
    CHECK(opt.value == 1);
    CHECK(opt.point == vec({1, 0}));

    CHECK(solve(problem({{1}}, {-1}, {1})).status == LpStatus::Infeasible);
    CHECK(solve(problem({{1, -1}}, {0}, {1, 0})).status == LpStatus::Unbounded);
}

TEST_CASE("free variables take negative values when that is optimal") {
    // max -y s.t. x - y = 3 with x >= 0 and y free; x >= 0 forces y >= -3.
    LpProblem p = problem({{1, -1}}, {3}, {0, -1});
    p.var_kinds[1] = VarKind::Free;
    const LpOutcome out = solve(p);
    REQUIRE(out.status == LpStatus::Optimal);
    CHECK(out.point == vec({0, -3}));
    CHECK(out.value == 3);
}

TEST_CASE("redundant and degenerate rows") {
    // Duplicate rows and a zero row with zero right-hand side.
    const LpOutcome out = solve(problem({{1, 1, 0}, {2, 2, 0}, {0, 0, 0}, {0, 1, 1}}, {2, 4, 0, 1}, {1, 1, 1}));
    REQUIRE(out.status == LpStatus::Optimal);
    CHECK(out.value == 3);
    CHECK(out.point == vec({2, 0, 1}));
    CHECK(solve(problem({{1, 1}, {1, 1}}, {1, 2}, {1, 1})).status == LpStatus::Infeasible);
}

TEST_CASE("coordinate ranges") {
    const LpProblem simplex = problem({{1, 1}}, {1}, {});
    const CoordinateRange r = coordinate_range(simplex, 0);
    CHECK(*r.lower == 0);
    CHECK(*r.upper == 1);
    CHECK_FALSE(r.constant());

    const CoordinateRange fixed = coordinate_range(problem({{1}}, {2}, {}), 0);
    CHECK(fixed.constant());
    CHECK(*fixed.upper == 2);

    const CoordinateRange ray = coordinate_range(problem({{1, -1}}, {0}, {}), 0);
    CHECK(*ray.lower == 0);
    CHECK_FALSE(ray.upper.has_value());

    CHECK_THROWS_AS(coordinate_range(problem({{1}}, {-1}, {}), 0), EmptyPolyhedron);
}

TEST_CASE("face feasibility on small examples") {
    const PolyhedronSpec p = kmodenum::testing::poly({{1, 1}}, {1});
    CHECK(face_feasible(p, ColumnSet{0, 1}, ColumnSet{0}));
    CHECK_FALSE(face_feasible(p, ColumnSet{0, 1}, ColumnSet{0, 1}));
    CHECK(face_feasible(p, ColumnSet{0, 1}, ColumnSet{}));
    CHECK_FALSE(face_feasible(kmodenum::testing::poly({{1}}, {-1}), ColumnSet{0}, ColumnSet{}));
    // Unbounded LP counts as feasible.
    CHECK(face_feasible(kmodenum::testing::poly({{1, -1}}, {0}), ColumnSet{0, 1}, ColumnSet{}));
}

TEST_CASE("the normalized example network has a strictly positive point") {
    const PolyhedronSpec p = kmodenum::testing::example_network_normalized();
    const ColumnSet all = ColumnSet::range(9);
    const VertexSet v = oracle::brute_force_vertices(p);
    CHECK(oracle::face_feasible_by_vertices(v, all, ColumnSet{}));
    CHECK(face_feasible(p, all, ColumnSet{}));
}

TEST_CASE("face feasibility agrees with the vertex witness on random polytopes") {
    std::size_t compared = 0;
    for (unsigned seed = 1; seed <= 40; ++seed) {
        const PolyhedronSpec p = kmodenum::testing::random_bounded_instance(seed, 4, 7);
        const VertexSet v = oracle::brute_force_vertices(p);
        const std::size_t n = p.num_columns();
        const ColumnSet all = ColumnSet::range(n);
        for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
            const ColumnSet f = ColumnSet::from_mask(mask);
            // Module: all columns, and the first half of the columns.
            CHECK(face_feasible(p, all, f) == oracle::face_feasible_by_vertices(v, all, f));
            const ColumnSet half = ColumnSet::from_mask((1ULL << (n / 2 + 1)) - 1).intersect(all);
            const ColumnSet fh = f.intersect(half);
            CHECK(face_feasible(p, half, fh) == oracle::face_feasible_by_vertices(v, half, fh));
            compared += 2;
        }
    }
    CHECK(compared > 1000);
}

TEST_CASE("every optimal point produced so far satisfied its constraints") {
    const VerificationStats stats = verification_stats();
    CHECK(stats.optimal_checked > 0);
    CHECK(stats.violations == 0);
}
