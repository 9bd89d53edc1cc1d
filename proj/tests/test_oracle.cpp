#include <doctest.h>

#include "kmodenum/errors.hpp"
#include "kmodenum/oracle.hpp"
#include "support/instances.hpp"

using namespace kmodenum;
using kmodenum::testing::matrix;
using kmodenum::testing::poly;
using kmodenum::testing::vec;

TEST_CASE("brute force on tiny polytopes") {
    CHECK(oracle::brute_force_vertices(poly({{1, 1}}, {1})).points() ==
          std::set<RationalVector>{vec({1, 0}), vec({0, 1})});
    CHECK(oracle::brute_force_vertices(poly({{1, 0}, {0, 1}}, {1, 1})).points() ==
          std::set<RationalVector>{vec({1, 1})});
    const VertexSet blocks = oracle::brute_force_vertices(poly({{1, 1, 0, 0}, {0, 0, 1, 1}}, {1, 1}));
    CHECK(blocks.points() == std::set<RationalVector>{vec({1, 0, 1, 0}), vec({1, 0, 0, 1}), vec({0, 1, 1, 0}),
                                                      vec({0, 1, 0, 1})});
    CHECK(oracle::brute_force_vertices(poly({{1}}, {-1})).size() == 0);
}

TEST_CASE("brute force respects its cap") {
    std::mt19937 rng(3);
    const PolyhedronSpec wide(kmodenum::testing::random_matrix(rng, 1, 17), RationalVector(1, Rational(0)));
    CHECK_THROWS_AS(oracle::brute_force_vertices(wide), CapExceeded);
    CHECK_THROWS_AS(oracle::brute_force_vertices(poly({{1, 1, 1}}, {1}), 2), CapExceeded);
}

TEST_CASE("brute force points are basic feasible solutions") {
    for (unsigned seed = 1; seed <= 30; ++seed) {
        const PolyhedronSpec p = kmodenum::testing::random_bounded_instance(seed);
        CHECK_NOTHROW(oracle::brute_force_vertices(p).verify(p));
    }
}

TEST_CASE("definitional module check") {
    const RationalMatrix s = matrix({{1, 0, 1}, {0, 1, 1}});
    for (std::size_t k = 0; k <= 3; ++k) CHECK(oracle::definitional_k_module_check(s, ColumnSet{}, k));
    CHECK_FALSE(oracle::definitional_k_module_check(s, ColumnSet{0}, 0));
    CHECK(oracle::definitional_k_module_check(s, ColumnSet{0}, 1));
    std::mt19937 rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        const RationalMatrix r = kmodenum::testing::random_matrix(rng, 3, 6);
        for (unsigned long long mask = 0; mask < 64; ++mask) {
            for (std::size_t k = 0; k < 4; ++k) {
                if (oracle::definitional_k_module_check(r, ColumnSet::from_mask(mask), k)) {
                    CHECK(oracle::definitional_k_module_check(r, ColumnSet::from_mask(mask), k + 1));
                }
            }
        }
    }
}
