#include <doctest.h>

#include "kmodenum/errors.hpp"
#include "kmodenum/faceenum.hpp"
#include "kmodenum/oracle.hpp"
#include "support/instances.hpp"

using namespace kmodenum;
using kmodenum::testing::poly;
using kmodenum::testing::vec;

namespace {

ModTree auto_tree(const PolyhedronSpec& p) {
    if (p.num_columns() == 1) return single_column_tree(p);
    const LinearMatroid m(p.matrix());
    const auto strategy = p.num_columns() <= 8 ? DecompositionStrategy::Exhaustive : DecompositionStrategy::Greedy;
    return to_mod_family(p, decompose(m, strategy));
}

std::set<ColumnSet> zero_sets(const std::vector<Face>& faces) {
    std::set<ColumnSet> out;
    for (const Face& f : faces) out.insert(f.zeros);
    return out;
}

}  // namespace

TEST_CASE("leaf faces") {
    SUBCASE("x1 + x2 = 1 has both faces at a leaf") {
        const PolyhedronSpec p = poly({{1, 1}}, {1});
        const auto faces = leaf_faces(p, interface(p, ColumnSet{0}));
        CHECK(zero_sets(faces) == std::set<ColumnSet>{ColumnSet{}, ColumnSet{0}});
    }
    SUBCASE("x1 = 1 cannot vanish") {
        const PolyhedronSpec p = poly({{1}}, {1});
        const auto faces = leaf_faces(p, interface(p, ColumnSet{0}));
        CHECK(zero_sets(faces) == std::set<ColumnSet>{ColumnSet{}});
    }
    SUBCASE("x1 = 0 must vanish") {
        const PolyhedronSpec p = poly({{1}}, {0});
        const auto faces = leaf_faces(p, interface(p, ColumnSet{0}));
        CHECK(zero_sets(faces) == std::set<ColumnSet>{ColumnSet{0}});
    }
}

TEST_CASE("minimality") {
    const PolyhedronSpec p = poly({{1, 1}}, {1});
    const ModuleInterface root = interface(p, ColumnSet{0, 1});
    CHECK(varying_coordinates(p, root, ColumnSet{}) == ColumnSet{0, 1});
    CHECK_FALSE(is_minimal(p, root, ColumnSet{}));
    CHECK(varying_coordinates(p, root, ColumnSet{0}).empty());
    CHECK(is_minimal(p, root, ColumnSet{0}));
    CHECK_THROWS_AS(is_minimal(p, root, ColumnSet{0, 1}), EmptyPolyhedron);
    CHECK(face_dimension(p, root, ColumnSet{}) == 1);
    CHECK(face_dimension(p, root, ColumnSet{1}) == 0);
}

TEST_CASE("merge keeps exactly the feasible minimal unions") {
    const PolyhedronSpec p = poly({{1, 1}}, {1});
    const ModuleInterface left = interface(p, ColumnSet{0});
    const ModuleInterface right = interface(p, ColumnSet{1});
    const ModuleInterface root = interface(p, ColumnSet{0, 1});
    std::size_t candidates = 0;
    const auto merged = merge(p, root, leaf_faces(p, left), leaf_faces(p, right), &candidates);
    CHECK(candidates == 4);
    CHECK(zero_sets(merged) == std::set<ColumnSet>{ColumnSet{0}, ColumnSet{1}});
    CHECK(merge(p, root, {}, leaf_faces(p, right)).empty());
}

TEST_CASE("block diagonal root merge yields the four product vertices") {
    const PolyhedronSpec p = poly({{1, 1, 0, 0}, {0, 0, 1, 1}}, {1, 1});
    const ModuleInterface a = interface(p, ColumnSet{0, 1});
    const ModuleInterface b = interface(p, ColumnSet{2, 3});
    const std::vector<Face> fa{{a.module, ColumnSet{0}}, {a.module, ColumnSet{1}}};
    const std::vector<Face> fb{{b.module, ColumnSet{2}}, {b.module, ColumnSet{3}}};
    CHECK(merge(p, interface(p, ColumnSet::range(4)), fa, fb).size() == 4);
    const VertexSet v = enumerate_vertices(p, auto_tree(p));
    CHECK(v.size() == 4);
    CHECK(v == oracle::brute_force_vertices(p));
}

TEST_CASE("simplex edge and the example network") {
    const PolyhedronSpec edge = poly({{1, 1}}, {1});
    const VertexSet v = enumerate_vertices(edge, auto_tree(edge));
    CHECK(v.points() == std::set<RationalVector>{vec({0, 1}), vec({1, 0})});

    const PolyhedronSpec net = kmodenum::testing::example_network_normalized();
    const VertexSet golden_oracle = oracle::brute_force_vertices(net);
    const VertexSet got = enumerate_vertices(net, auto_tree(net));
    CHECK(got == golden_oracle);
    CHECK(got.size() == 3);
    for (const auto& g : kmodenum::testing::example_network_vertices()) CHECK(got.contains(g));
}

TEST_CASE("enumeration refuses invalid inputs") {
    const PolyhedronSpec ray = poly({{1, -1}}, {0});
    const LinearMatroid m(ray.matrix());
    const ModTree t = to_mod_family(ray, decompose(m, DecompositionStrategy::Exhaustive));
    CHECK_THROWS_AS(enumerate_vertices(ray, t), UnboundedPolyhedron);
    CHECK_NOTHROW(enumerate_vertices(ray, t, nullptr, EnumerateOptions{true}));
    CHECK(enumerate_vertices(ray, t, nullptr, EnumerateOptions{true}).points() ==
          std::set<RationalVector>{vec({0, 0})});
}

TEST_CASE("random polytopes: oracle equality, coverage, bounds and dimensions") {
    for (unsigned seed = 500; seed < 540; ++seed) {
        const PolyhedronSpec p = reduce(kmodenum::testing::random_bounded_instance(seed, 5, 9)).reduced;
        if (p.num_columns() == 0) continue;
        const ModTree t = auto_tree(p);
        EnumerationTrace trace;
        const VertexSet v = enumerate_vertices(p, t, &trace);
        CHECK_NOTHROW(v.verify(p));
        const VertexSet expected = oracle::brute_force_vertices(p);
        CHECK(v == expected);
        const BoundReport bounds = check_enumeration_bounds(p, t, trace, expected);
        CHECK(bounds.nodes_checked == t.nodes().size());
        CHECK(bounds.coverage_misses == 0);
        CHECK(bounds.minimal_bound_violations == 0);
        CHECK(bounds.vertex_bound_violations == 0);
        CHECK(bounds.dimension_violations == 0);
    }
}

TEST_CASE("basic feasible solution check") {
    const PolyhedronSpec p = poly({{1, 1, 1}}, {2});
    CHECK(is_basic_feasible(p, vec({2, 0, 0})));
    CHECK_FALSE(is_basic_feasible(p, vec({1, 1, 0})));
    CHECK_FALSE(is_basic_feasible(p, vec({3, -1, 0})));
    CHECK_FALSE(is_basic_feasible(p, vec({1, 0, 0})));
}
