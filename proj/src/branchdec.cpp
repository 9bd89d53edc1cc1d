#include "kmodenum/branchdec.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "kmodenum/errors.hpp"

namespace kmodenum {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);
constexpr std::size_t kMaxExhaustiveColumns = 24;

/// Rooted binary tree under construction; leaves carry a column.
struct RootedNode {
    std::optional<std::size_t> column;
    std::size_t left = kNone;
    std::size_t right = kNone;
};

/// Drops the root and joins its two children by an edge.
BranchDecomposition unroot(std::size_t ground_size, const std::vector<RootedNode>& nodes, std::size_t root,
                           bool keep_root_as_hint) {
    if (nodes[root].column) {
        return BranchDecomposition(ground_size, {}, {nodes[root].column});
    }
    std::vector<std::size_t> id(nodes.size(), kNone);
    std::vector<std::optional<std::size_t>> leaf_column;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (i == root) continue;
        id[i] = leaf_column.size();
        leaf_column.push_back(nodes[i].column);
    }
    std::vector<BranchDecomposition::Edge> edges;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (i == root || nodes[i].column) continue;
        edges.emplace_back(id[i], id[nodes[i].left]);
        edges.emplace_back(id[i], id[nodes[i].right]);
    }
    const std::size_t hint = edges.size();
    edges.emplace_back(id[nodes[root].left], id[nodes[root].right]);
    BranchDecomposition out(ground_size, std::move(edges), std::move(leaf_column));
    if (keep_root_as_hint) out.set_root_edge_hint(hint);
    return out;
}

std::vector<std::string> sorted_names(const RationalMatrix& m, const ColumnSet& cols) {
    std::vector<std::string> names = m.names_of(cols);
    std::sort(names.begin(), names.end());
    return names;
}

std::size_t choose_root_edge(const LinearMatroid& matroid, const BranchDecomposition& d) {
    if (d.root_edge_hint()) return *d.root_edge_hint();
    std::size_t best = kNone;
    std::size_t best_rho = 0;
    std::vector<std::string> best_key;
    for (std::size_t e = 0; e < d.edges().size(); ++e) {
        const auto [a, b] = d.edges()[e];
        const ColumnSet side = d.side(a, b);
        const std::size_t rho = matroid.connectivity(side);
        std::vector<std::string> key = std::min(sorted_names(matroid.matrix(), side),
                                                sorted_names(matroid.matrix(), side.complement(d.ground_size())));
        if (best == kNone || rho < best_rho || (rho == best_rho && key < best_key)) {
            best = e;
            best_rho = rho;
            best_key = std::move(key);
        }
    }
    return best;
}

/// Rooted view of an unrooted decomposition, children listed before parents.
struct RootedView {
    std::vector<std::size_t> order;  // unrooted node ids; kNone marks the root
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
};

RootedView root_at(const BranchDecomposition& d, std::size_t edge) {
    RootedView view;
    const std::size_t n = d.num_nodes();
    view.left.assign(n + 1, kNone);
    view.right.assign(n + 1, kNone);
    std::function<void(std::size_t, std::size_t)> visit = [&](std::size_t node, std::size_t parent) {
        std::vector<std::size_t> kids;
        for (std::size_t nb : d.neighbors(node)) {
            if (nb != parent) kids.push_back(nb);
        }
        if (kids.size() == 2) {
            visit(kids[0], node);
            visit(kids[1], node);
            view.left[node] = kids[0];
            view.right[node] = kids[1];
        }
        view.order.push_back(node);
    };
    const auto [a, b] = d.edges().at(edge);
    visit(a, b);
    visit(b, a);
    view.left[n] = a;
    view.right[n] = b;
    view.order.push_back(n);
    return view;
}

BranchDecomposition decompose_exhaustive(const LinearMatroid& matroid) {
    const std::size_t n = matroid.ground_size();
    // Trees are rooted at the edge of column 0; every edge then corresponds
    // to a cluster of columns 1..n-1, and the width is the maximum
    // connectivity over the clusters.
    const std::size_t universe = ((std::size_t{1} << n) - 1) & ~std::size_t{1};
    std::vector<std::size_t> rho(universe + 1, 0);
    std::vector<std::size_t> best(universe + 1, 0);
    std::vector<std::size_t> split(universe + 1, 0);
    for (std::size_t mask = 2; mask <= universe; mask += 2) {
        rho[mask] = matroid.connectivity(ColumnSet::from_mask(mask));
    }
    for (std::size_t mask = 2; mask <= universe; mask += 2) {
        if (std::popcount(mask) < 2) continue;
        const std::size_t low = mask & (~mask + 1);
        const std::size_t rest = mask ^ low;
        std::size_t best_value = kNone;
        for (std::size_t sub = (rest - 1) & rest;; sub = (sub - 1) & rest) {
            const std::size_t a = sub | low;
            const std::size_t b = mask ^ a;
            const std::size_t value = std::max({rho[a], rho[b], best[a], best[b]});
            if (value < best_value) {
                best_value = value;
                split[mask] = a;
            }
            if (sub == 0) break;
        }
        best[mask] = best_value;
    }

    std::vector<RootedNode> nodes;
    std::function<std::size_t(std::size_t)> build = [&](std::size_t mask) -> std::size_t {
        if (std::popcount(mask) == 1) {
            nodes.push_back({static_cast<std::size_t>(std::countr_zero(mask)), kNone, kNone});
            return nodes.size() - 1;
        }
        const std::size_t l = build(split[mask]);
        const std::size_t r = build(mask ^ split[mask]);
        nodes.push_back({std::nullopt, l, r});
        return nodes.size() - 1;
    };
    nodes.push_back({0, kNone, kNone});
    const std::size_t other = build(universe);
    nodes.push_back({std::nullopt, 0, other});
    return unroot(n, nodes, nodes.size() - 1, false);
}

BranchDecomposition decompose_greedy(const LinearMatroid& matroid) {
    const std::size_t n = matroid.ground_size();
    std::vector<RootedNode> nodes;
    struct Cluster {
        ColumnSet cols;
        std::size_t node;
    };
    std::vector<Cluster> clusters;
    for (std::size_t i = 0; i < n; ++i) {
        nodes.push_back({i, kNone, kNone});
        clusters.push_back({ColumnSet{i}, i});
    }
    while (clusters.size() > 1) {
        std::size_t bi = 0;
        std::size_t bj = 0;
        std::size_t best_rho = kNone;
        std::vector<std::string> best_key;
        for (std::size_t i = 0; i < clusters.size(); ++i) {
            for (std::size_t j = i + 1; j < clusters.size(); ++j) {
                const ColumnSet joined = clusters[i].cols.unite(clusters[j].cols);
                const std::size_t rho = matroid.connectivity(joined);
                if (rho > best_rho) continue;
                std::vector<std::string> key = sorted_names(matroid.matrix(), joined);
                if (rho < best_rho || key < best_key) {
                    bi = i;
                    bj = j;
                    best_rho = rho;
                    best_key = std::move(key);
                }
            }
        }
        nodes.push_back({std::nullopt, clusters[bi].node, clusters[bj].node});
        clusters[bi] = {clusters[bi].cols.unite(clusters[bj].cols), nodes.size() - 1};
        clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(bj));
    }
    return unroot(n, nodes, clusters.front().node, false);
}

}  // namespace

BranchDecomposition::BranchDecomposition(std::size_t ground_size, std::vector<Edge> edges,
                                         std::vector<std::optional<std::size_t>> leaf_column)
    : ground_size_(ground_size), edges_(std::move(edges)), leaf_column_(std::move(leaf_column)) {
    const std::size_t nodes = leaf_column_.size();
    if (ground_size_ == 0 || nodes == 0) throw MalformedDecomposition("decomposition of an empty ground set");
    if (edges_.size() + 1 != nodes) throw MalformedDecomposition("edge count does not form a tree");
    adj_.assign(nodes, {});
    for (const auto& [a, b] : edges_) {
        if (a >= nodes || b >= nodes || a == b) throw MalformedDecomposition("edge with invalid endpoint");
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    std::vector<bool> seen(nodes, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : adj_[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    if (reached != nodes) throw MalformedDecomposition("decomposition tree is not connected");

    std::vector<bool> used(ground_size_, false);
    for (std::size_t v = 0; v < nodes; ++v) {
        const std::size_t degree = adj_[v].size();
        if (leaf_column_[v]) {
            const std::size_t c = *leaf_column_[v];
            if (c >= ground_size_ || used[c]) throw MalformedDecomposition("leaf map is not a bijection");
            used[c] = true;
            if (degree != 1 && nodes > 1) throw MalformedDecomposition("leaf node with degree other than 1");
        } else if (degree != 3) {
            throw MalformedDecomposition("internal node with degree other than 3");
        }
    }
    if (std::find(used.begin(), used.end(), false) != used.end()) {
        throw MalformedDecomposition("leaf map does not cover every column");
    }
}

void BranchDecomposition::set_root_edge_hint(std::size_t edge) {
    if (edge >= edges_.size()) throw std::out_of_range("root edge hint out of range");
    root_hint_ = edge;
}

ColumnSet BranchDecomposition::side(std::size_t from, std::size_t to) const {
    const auto& nb = adj_.at(from);
    if (std::find(nb.begin(), nb.end(), to) == nb.end()) throw std::invalid_argument("not an edge");
    std::vector<std::size_t> cols;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{from, to}};
    while (!stack.empty()) {
        const auto [v, parent] = stack.back();
        stack.pop_back();
        if (leaf_column_[v]) cols.push_back(*leaf_column_[v]);
        for (std::size_t w : adj_[v]) {
            if (w != parent) stack.emplace_back(w, v);
        }
    }
    return ColumnSet(std::move(cols));
}

std::size_t width_of(const LinearMatroid& matroid, const BranchDecomposition& d) {
    if (d.ground_size() != matroid.ground_size()) {
        throw MalformedDecomposition("decomposition and matroid have different ground sets");
    }
    std::size_t width = 1;
    for (const auto& [a, b] : d.edges()) width = std::max(width, matroid.connectivity(d.side(a, b)));
    return width;
}

BranchDecomposition decompose(const LinearMatroid& matroid, DecompositionStrategy strategy, std::size_t limit) {
    const std::size_t n = matroid.ground_size();
    if (n < 2) throw std::invalid_argument("a branch decomposition needs at least two columns");
    if (strategy == DecompositionStrategy::Greedy) return decompose_greedy(matroid);
    if (n > limit || n > kMaxExhaustiveColumns) {
        throw CapExceeded("exhaustive decomposition requested for " + std::to_string(n) +
                          " columns (limit " + std::to_string(std::min(limit, kMaxExhaustiveColumns)) + ")");
    }
    return decompose_exhaustive(matroid);
}

ModTree::ModTree(std::vector<ModNode> nodes, std::size_t width) : nodes_(std::move(nodes)), width_(width) {
    if (nodes_.empty()) throw std::invalid_argument("empty module tree");
    if (width_ == 0) throw std::invalid_argument("module tree width must be positive");
}

std::vector<ColumnSet> ModTree::family() const {
    std::vector<ColumnSet> out;
    out.reserve(nodes_.size());
    for (const auto& n : nodes_) out.push_back(n.columns);
    return out;
}

bool is_binary_rooted_family(const std::vector<ColumnSet>& family, std::size_t ground_size) {
    const std::set<ColumnSet> members(family.begin(), family.end());
    if (members.size() != family.size()) return false;
    const ColumnSet whole = ColumnSet::range(ground_size);
    if (!members.contains(whole)) return false;
    for (const ColumnSet& a : members) {
        if (a == whole) continue;
        std::size_t partners = 0;
        for (const ColumnSet& b : members) {
            if (!a.intersects(b) && members.contains(a.unite(b))) ++partners;
        }
        if (partners != 1) return false;  // P1
    }
    for (const ColumnSet& c : members) {
        if (c.size() < 2) continue;
        bool splits = false;
        for (const ColumnSet& a : members) {
            if (a.empty() || a == c || !a.is_subset_of(c)) continue;
            if (members.contains(c.minus(a))) {
                splits = true;
                break;
            }
        }
        if (!splits) return false;  // P2
    }
    return true;
}

ModTree to_mod_family(const PolyhedronSpec& poly, const BranchDecomposition& d) {
    if (variable_set(poly).size() != poly.num_columns()) {
        throw std::invalid_argument("to_mod_family requires every column to be variable (reduce first)");
    }
    const LinearMatroid matroid(poly.matrix());
    const std::size_t width = width_of(matroid, d);
    if (d.edges().empty()) {
        return single_column_tree(poly);
    }
    const RootedView view = root_at(d, choose_root_edge(matroid, d));

    std::vector<ModNode> nodes;
    std::unordered_map<std::size_t, std::size_t> index;
    for (std::size_t v : view.order) {
        ModNode node;
        if (view.left[v] == kNone) {
            node.columns = ColumnSet{*d.leaf_column(v)};
        } else {
            node.left = index.at(view.left[v]);
            node.right = index.at(view.right[v]);
            node.columns = nodes[node.left].columns.unite(nodes[node.right].columns);
            nodes[node.left].parent = nodes.size();
            nodes[node.right].parent = nodes.size();
        }
        node.interface = interface(poly, node.columns);
        if (node.interface.dim > width - 1) {
            throw std::logic_error("module interface exceeds the decomposition width bound");
        }
        index.emplace(v, nodes.size());
        nodes.push_back(std::move(node));
    }
    return ModTree(std::move(nodes), width);
}

ModTree single_column_tree(const PolyhedronSpec& poly) {
    if (poly.num_columns() != 1) throw std::invalid_argument("single_column_tree needs exactly one column");
    ModNode node;
    node.columns = ColumnSet{0};
    node.interface = interface(poly, node.columns);
    return ModTree({std::move(node)}, 1);
}

void write_decomposition(std::ostream& out, const BranchDecomposition& d, const LinearMatroid& matroid) {
    const auto& names = matroid.matrix().col_names();
    const std::size_t width = width_of(matroid, d);
    out << "# width: " << width << "\n# k: " << width - 1 << "\n";
    if (d.edges().empty()) {
        out << "root = " << names.at(*d.leaf_column(0)) << "\n";
        return;
    }
    std::string prefix = "m";
    auto collides = [&](const std::string& p) {
        return std::any_of(names.begin(), names.end(), [&](const std::string& name) {
            return name.size() > p.size() && name.compare(0, p.size(), p) == 0 &&
                   std::all_of(name.begin() + static_cast<std::ptrdiff_t>(p.size()), name.end(),
                               [](char c) { return c >= '0' && c <= '9'; });
        });
    };
    while (collides(prefix)) prefix += "m";

    const RootedView view = root_at(d, choose_root_edge(matroid, d));
    std::unordered_map<std::size_t, std::string> label;
    std::size_t next = 1;
    for (std::size_t v : view.order) {
        if (view.left[v] == kNone) {
            label[v] = names.at(*d.leaf_column(v));
            continue;
        }
        label[v] = prefix + std::to_string(next++);
        out << "merge " << label[v] << " = " << label.at(view.left[v]) << " " << label.at(view.right[v]) << "\n";
    }
    out << "root = " << label.at(view.order.back()) << "\n";
}

BranchDecomposition read_decomposition(std::istream& in, const std::vector<std::string>& names) {
    std::unordered_map<std::string, std::size_t> column;
    for (std::size_t i = 0; i < names.size(); ++i) column.emplace(names[i], i);

    std::vector<RootedNode> nodes;
    std::unordered_map<std::string, std::size_t> merge_id;
    std::vector<bool> column_used(names.size(), false);
    std::vector<bool> merge_used;
    std::optional<std::size_t> root;

    std::string line;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& what) {
        throw MalformedDecomposition("decomposition line " + std::to_string(line_no) + ": " + what);
    };
    auto resolve = [&](const std::string& token) -> std::size_t {
        if (auto it = merge_id.find(token); it != merge_id.end()) {
            if (merge_used[it->second]) fail("merge '" + token + "' used twice");
            merge_used[it->second] = true;
            return it->second;
        }
        if (auto it = column.find(token); it != column.end()) {
            if (column_used[it->second]) fail("column '" + token + "' used twice");
            column_used[it->second] = true;
            nodes.push_back({it->second, kNone, kNone});
            merge_used.push_back(true);
            return nodes.size() - 1;
        }
        fail("unknown name '" + token + "'");
        return kNone;
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::vector<std::string> t;
        for (std::string tok; tokens >> tok;) t.push_back(tok);
        if (t.empty() || t.front().front() == '#') continue;
        if (root) fail("content after the root line");
        if (t[0] == "merge") {
            if (t.size() != 5 || t[2] != "=") fail("expected 'merge <id> = <child> <child>'");
            if (merge_id.contains(t[1]) || column.contains(t[1])) fail("id '" + t[1] + "' already names a node");
            const std::size_t l = resolve(t[3]);
            const std::size_t r = resolve(t[4]);
            nodes.push_back({std::nullopt, l, r});
            merge_used.push_back(false);
            merge_id.emplace(t[1], nodes.size() - 1);
        } else if (t[0] == "root") {
            if (t.size() != 3 || t[1] != "=") fail("expected 'root = <id>'");
            if (merge_id.empty() && names.size() == 1 && t[2] == names[0]) {
                root = resolve(t[2]);
            } else {
                auto it = merge_id.find(t[2]);
                if (it == merge_id.end()) fail("root '" + t[2] + "' is not a merge id");
                if (merge_used[it->second]) fail("root '" + t[2] + "' is used as a child");
                root = it->second;
                merge_used[it->second] = true;
            }
        } else {
            fail("unexpected '" + t[0] + "'");
        }
    }
    if (!root) throw MalformedDecomposition("decomposition has no root line");
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!column_used[i]) throw MalformedDecomposition("column '" + names[i] + "' missing from decomposition");
    }
    for (const auto& [id, idx] : merge_id) {
        if (!merge_used[idx]) throw MalformedDecomposition("merge '" + id + "' is not reachable from the root");
    }
    return unroot(names.size(), nodes, *root, true);
}

}  // namespace kmodenum
