#ifndef KMODENUM_FACEENUM_HPP
#define KMODENUM_FACEENUM_HPP

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "kmodenum/branchdec.hpp"
#include "kmodenum/column_set.hpp"
#include "kmodenum/kmodule.hpp"
#include "kmodenum/polyhedron.hpp"

namespace kmodenum {

/// A candidate face of module A, named by its zero set F ⊆ A.
struct Face {
    ColumnSet module;
    ColumnSet zeros;

    auto operator<=>(const Face&) const = default;
};

/// v satisfies Sv = b and v >= 0 exactly, and its support columns are
/// linearly independent.
bool is_basic_feasible(const PolyhedronSpec& poly, const RationalVector& v);

/// Exact points, deduplicated and kept in lexicographic order.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<std::string> column_names);

    const std::vector<std::string>& column_names() const { return names_; }
    const std::set<RationalVector>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool contains(const RationalVector& p) const { return points_.contains(p); }

    /// Returns false for a duplicate.
    bool insert(RationalVector p);

    /// Throws std::logic_error if some point is not a basic feasible solution.
    void verify(const PolyhedronSpec& poly) const;

    bool operator==(const VertexSet& other) const { return points_ == other.points_; }

private:
    std::vector<std::string> names_;
    std::set<RationalVector> points_;
};

/**
 * G = {i in A : x_i is not constant on {x in P^A : x_F = 0}}, where
 * P^A = {x in R^A : S_A x = D alpha + d, x >= 0, some alpha}. Throws
 * EmptyPolyhedron when that set is empty.
 */
ColumnSet varying_coordinates(const PolyhedronSpec& poly, const ModuleInterface& iface, const ColumnSet& zeros);

/// F is minimal iff S_G is injective (rank(S_G) = |G|).
bool is_minimal(const PolyhedronSpec& poly, const ModuleInterface& iface, const ColumnSet& zeros);

/// dim {x in P^A : x_F = 0} = |G| + dim D - rank[S_G | D].
std::size_t face_dimension(const PolyhedronSpec& poly, const ModuleInterface& iface, const ColumnSet& zeros);

/// Minimal feasible faces of a singleton module: a subset of {∅, A}.
std::vector<Face> leaf_faces(const PolyhedronSpec& poly, const ModuleInterface& leaf);

/// Unions F^A ∪ F^B that are feasible and minimal for the parent module.
/// `candidates` receives the number of distinct unions tested.
std::vector<Face> merge(const PolyhedronSpec& poly, const ModuleInterface& parent, const std::vector<Face>& left,
                        const std::vector<Face>& right, std::size_t* candidates = nullptr);

struct NodeReport {
    std::size_t node = 0;
    ColumnSet module;
    std::size_t interface_dim = 0;
    std::size_t candidates = 0;
    std::vector<ColumnSet> faces;  // zero sets of the minimal feasible faces
};

struct EnumerationTrace {
    std::size_t k = 0;
    std::vector<NodeReport> nodes;
};

struct EnumerateOptions {
    bool allow_unbounded = false;
};

/**
 * Minimal feasible faces bottom-up over the tree; at the root every face
 * F is a vertex, recovered by solving S_{R\F} x = b with x_F = 0.
 * Requires Q = R. Throws EmptyPolyhedron, and UnboundedPolyhedron unless
 * options.allow_unbounded.
 */
VertexSet enumerate_vertices(const PolyhedronSpec& poly, const ModTree& tree, EnumerationTrace* trace = nullptr,
                             EnumerateOptions options = {});

struct BoundReport {
    std::size_t nodes_checked = 0;
    std::size_t minimal_bound_violations = 0;  // |faces| > |V|^(k_A + 1)
    std::size_t vertex_bound_violations = 0;   // |vertex feasible faces| > |V|
    std::size_t coverage_misses = 0;           // vertex feasible face not computed
    std::size_t dimension_violations = 0;      // stored face of dimension > k_A

    bool ok() const {
        return minimal_bound_violations == 0 && vertex_bound_violations == 0 && coverage_misses == 0 &&
               dimension_violations == 0;
    }
};

/// Checks the per-node counting bounds of a finished run against its
/// vertices (in the same coordinates as the trace). k_A is each node's own
/// interface dimension, which never exceeds the tree's k.
BoundReport check_enumeration_bounds(const PolyhedronSpec& poly, const ModTree& tree,
                                     const EnumerationTrace& trace, const VertexSet& vertices);

}  // namespace kmodenum

#endif  // KMODENUM_FACEENUM_HPP
