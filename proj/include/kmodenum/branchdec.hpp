#ifndef KMODENUM_BRANCHDEC_HPP
#define KMODENUM_BRANCHDEC_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kmodenum/column_set.hpp"
#include "kmodenum/kmodule.hpp"
#include "kmodenum/matroid.hpp"
#include "kmodenum/polyhedron.hpp"

namespace kmodenum {

class MalformedDecomposition : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * Branch decomposition (T, tau): an unrooted tree whose internal nodes have
 * degree 3 and whose leaves map bijectively onto the columns 0..n-1. The
 * constructor validates all of this. A single column is represented by a
 * lone leaf without edges.
 */
class BranchDecomposition {
public:
    using Edge = std::pair<std::size_t, std::size_t>;

    BranchDecomposition(std::size_t ground_size, std::vector<Edge> edges,
                        std::vector<std::optional<std::size_t>> leaf_column);

    std::size_t ground_size() const { return ground_size_; }
    std::size_t num_nodes() const { return leaf_column_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::size_t>& neighbors(std::size_t node) const { return adj_.at(node); }
    std::optional<std::size_t> leaf_column(std::size_t node) const { return leaf_column_.at(node); }

    /// Columns of the leaves on `from`'s side once edge {from, to} is deleted.
    ColumnSet side(std::size_t from, std::size_t to) const;

    /// Edge to subdivide when rooting; set when a decomposition was read
    /// from a rooted description. Without it the lowest-width edge is used.
    std::optional<std::size_t> root_edge_hint() const { return root_hint_; }
    void set_root_edge_hint(std::size_t edge);

private:
    std::size_t ground_size_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<std::optional<std::size_t>> leaf_column_;
    std::optional<std::size_t> root_hint_;
};

/// Max over edges of the connectivity of the edge's leaf partition; 1 for a
/// decomposition without edges.
std::size_t width_of(const LinearMatroid& matroid, const BranchDecomposition& decomposition);

enum class DecompositionStrategy { Exhaustive, Greedy };

/**
 * Exhaustive: a minimum-width decomposition, by dynamic programming over
 * all column subsets (every binary leaf tree is covered); throws
 * CapExceeded above `limit` columns. Greedy: agglomerative merging of the
 * pair of clusters whose union has least connectivity, ties broken by the
 * lexicographically smallest sorted column-name list; no optimality claim.
 * Requires at least two columns.
 */
BranchDecomposition decompose(const LinearMatroid& matroid, DecompositionStrategy strategy,
                              std::size_t limit = 8);

struct ModNode {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    ColumnSet columns;
    std::size_t parent = npos;
    std::size_t left = npos;
    std::size_t right = npos;
    ModuleInterface interface;

    bool is_leaf() const { return left == npos; }
};

/**
 * Binary rooted family of k-modules: root R, singleton leaves, every inner
 * node the disjoint union of its two children. Nodes are stored children
 * before parents, so index order is a valid bottom-up schedule.
 */
class ModTree {
public:
    ModTree(std::vector<ModNode> nodes, std::size_t width);

    const std::vector<ModNode>& nodes() const { return nodes_; }
    const ModNode& node(std::size_t i) const { return nodes_.at(i); }
    std::size_t root() const { return nodes_.size() - 1; }
    std::size_t width() const { return width_; }
    std::size_t k() const { return width_ - 1; }

    std::vector<ColumnSet> family() const;

private:
    std::vector<ModNode> nodes_;
    std::size_t width_;
};

/// Properties P1 and P2 of a binary rooted family over columns 0..n-1,
/// checked literally on the set family.
bool is_binary_rooted_family(const std::vector<ColumnSet>& family, std::size_t ground_size);

/// Roots the decomposition (hint edge, else the edge of least connectivity
/// with ties broken lexicographically) and attaches interfaces. Requires
/// Q = R; throws std::invalid_argument otherwise.
ModTree to_mod_family(const PolyhedronSpec& poly, const BranchDecomposition& decomposition);

/// Tree for a one-column polyhedron: the root is its only leaf.
ModTree single_column_tree(const PolyhedronSpec& poly);

/// Text form: "merge <id> = <child> <child>" per internal node, children
/// before parents, then "root = <id>". Lines starting with '#' are comments.
void write_decomposition(std::ostream& out, const BranchDecomposition& decomposition,
                         const LinearMatroid& matroid);

/// Strict parser for the text form; column names resolve against `names`.
/// Throws MalformedDecomposition.
BranchDecomposition read_decomposition(std::istream& in, const std::vector<std::string>& names);

}  // namespace kmodenum

#endif  // KMODENUM_BRANCHDEC_HPP
