#include "kmodenum/faceenum.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "kmodenum/errors.hpp"
#include "kmodenum/lpexact.hpp"

namespace kmodenum {

namespace {

std::size_t saturating_pow(std::size_t base, std::size_t exp) {
    std::size_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && out > std::numeric_limits<std::size_t>::max() / base) {
            return std::numeric_limits<std::size_t>::max();
        }
        out *= base;
    }
    return out;
}

}  // namespace

bool is_basic_feasible(const PolyhedronSpec& poly, const RationalVector& v) {
    if (v.size() != poly.num_columns()) return false;
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) < 0) return false;
        if (sgn(v[i]) > 0) support.push_back(i);
    }
    if (poly.matrix().multiply(v) != poly.rhs()) return false;
    const ColumnSet cols(std::move(support));
    return rank(poly.matrix().select_columns(cols)) == cols.size();
}

VertexSet::VertexSet(std::vector<std::string> column_names) : names_(std::move(column_names)) {}

bool VertexSet::insert(RationalVector p) {
    if (!names_.empty() && p.size() != names_.size()) throw std::invalid_argument("point has wrong dimension");
    return points_.insert(std::move(p)).second;
}

void VertexSet::verify(const PolyhedronSpec& poly) const {
    for (const auto& p : points_) {
        if (!is_basic_feasible(poly, p)) throw std::logic_error("point is not a basic feasible solution");
    }
}

ColumnSet varying_coordinates(const PolyhedronSpec& poly, const ModuleInterface& iface, const ColumnSet& zeros) {
    const ColumnSet& module = iface.module;
    if (!zeros.is_subset_of(module)) throw std::invalid_argument("face zeros must lie inside the module");
    const RationalMatrix& s = poly.matrix();
    const ColumnSet open = module.minus(zeros);
    const std::size_t k = iface.dim;

    // Variables: x_i for i in A \ F (nonnegative), then alpha (free).
    std::vector<std::string> names;
    for (std::size_t i : open) names.push_back("x" + std::to_string(i));
    for (std::size_t j = 0; j < k; ++j) names.push_back("alpha" + std::to_string(j + 1));
    lp::LpProblem problem;
    problem.eq_matrix = RationalMatrix(s.row_names(), names);
    problem.eq_rhs = iface.constant;
    problem.var_kinds.assign(names.size(), lp::VarKind::NonNegative);
    for (std::size_t j = 0; j < k; ++j) problem.var_kinds[open.size() + j] = lp::VarKind::Free;
    for (std::size_t r = 0; r < s.rows(); ++r) {
        for (std::size_t c = 0; c < open.size(); ++c) problem.eq_matrix(r, c) = s(r, open[c]);
        for (std::size_t j = 0; j < k; ++j) problem.eq_matrix(r, open.size() + j) = -iface.variable_basis(r, j);
    }

    const lp::FeasibleRegion region(problem);
    if (region.empty()) throw EmptyPolyhedron();
    const RationalVector& base = region.point();

    // A coordinate is varying once two feasible points disagree on it; if
    // neither its max nor its min moves away from the base point, it is
    // constant.
    std::vector<bool> varying(open.size(), false);
    RationalVector objective(names.size());
    auto probe = [&](std::size_t c, int direction) {
        objective.assign(names.size(), Rational(0));
        objective[c] = direction;
        const lp::LpOutcome out = region.maximize(objective);
        if (out.status == lp::LpStatus::Unbounded) {
            varying[c] = true;
            return;
        }
        for (std::size_t j = 0; j < open.size(); ++j) {
            if (out.point[j] != base[j]) varying[j] = true;
        }
    };
    for (std::size_t c = 0; c < open.size(); ++c) {
        if (!varying[c]) probe(c, 1);
        if (!varying[c]) probe(c, -1);
    }
    std::vector<std::size_t> g;
    for (std::size_t c = 0; c < open.size(); ++c) {
        if (varying[c]) g.push_back(open[c]);
    }
    return ColumnSet(std::move(g));
}

bool is_minimal(const PolyhedronSpec& poly, const ModuleInterface& iface, const ColumnSet& zeros) {
    const ColumnSet g = varying_coordinates(poly, iface, zeros);
    return rank(poly.matrix().select_columns(g)) == g.size();
}

std::size_t face_dimension(const PolyhedronSpec& poly, const ModuleInterface& iface, const ColumnSet& zeros) {
    const ColumnSet g = varying_coordinates(poly, iface, zeros);
    const RationalMatrix s_g = poly.matrix().select_columns(g);
    RationalMatrix joined(s_g.row_names(), [&] {
        std::vector<std::string> names = s_g.col_names();
        for (const auto& n : iface.variable_basis.col_names()) names.push_back("__" + n);
        return names;
    }());
    for (std::size_t r = 0; r < joined.rows(); ++r) {
        for (std::size_t c = 0; c < s_g.cols(); ++c) joined(r, c) = s_g(r, c);
        for (std::size_t j = 0; j < iface.dim; ++j) joined(r, s_g.cols() + j) = iface.variable_basis(r, j);
    }
    return g.size() + iface.dim - rank(joined);
}

std::vector<Face> leaf_faces(const PolyhedronSpec& poly, const ModuleInterface& leaf) {
    if (leaf.module.size() != 1) throw std::invalid_argument("leaf_faces needs a singleton module");
    std::vector<Face> out;
    if (lp::face_feasible(poly, leaf.module, ColumnSet{})) out.push_back({leaf.module, ColumnSet{}});
    if (lp::face_feasible(poly, leaf.module, leaf.module) && is_minimal(poly, leaf, leaf.module)) {
        out.push_back({leaf.module, leaf.module});
    }
    return out;
}

std::vector<Face> merge(const PolyhedronSpec& poly, const ModuleInterface& parent, const std::vector<Face>& left,
                        const std::vector<Face>& right, std::size_t* candidates) {
    std::set<ColumnSet> unions;
    for (const Face& a : left) {
        for (const Face& b : right) unions.insert(a.zeros.unite(b.zeros));
    }
    if (candidates) *candidates = unions.size();
    std::vector<Face> out;
    for (const ColumnSet& f : unions) {
        if (!f.is_subset_of(parent.module)) throw std::invalid_argument("child face outside the parent module");
        if (lp::face_feasible(poly, parent.module, f) && is_minimal(poly, parent, f)) {
            out.push_back({parent.module, f});
        }
    }
    return out;
}

VertexSet enumerate_vertices(const PolyhedronSpec& poly, const ModTree& tree, EnumerationTrace* trace,
                             EnumerateOptions options) {
    if (poly.is_empty()) throw EmptyPolyhedron();
    const auto& ranges = poly.ranges();
    for (std::size_t i = 0; i < ranges.size(); ++i) {
        if (ranges[i].constant()) {
            throw std::invalid_argument("enumerate_vertices requires every column to be variable (reduce first)");
        }
        if (!ranges[i].upper && !options.allow_unbounded) throw UnboundedPolyhedron(poly.column_names()[i]);
    }
    const ColumnSet whole = ColumnSet::range(poly.num_columns());
    if (tree.node(tree.root()).columns != whole) throw std::invalid_argument("tree root is not the full column set");

    std::vector<std::vector<Face>> faces(tree.nodes().size());
    if (trace) {
        trace->k = tree.k();
        trace->nodes.clear();
    }
    for (std::size_t i = 0; i < tree.nodes().size(); ++i) {
        const ModNode& node = tree.node(i);
        std::size_t candidates = 2;
        if (node.is_leaf()) {
            faces[i] = leaf_faces(poly, node.interface);
        } else {
            faces[i] = merge(poly, node.interface, faces[node.left], faces[node.right], &candidates);
        }
        if (trace) {
            NodeReport report{i, node.columns, node.interface.dim, candidates, {}};
            for (const Face& f : faces[i]) report.faces.push_back(f.zeros);
            trace->nodes.push_back(std::move(report));
        }
    }

    VertexSet vertices(poly.column_names());
    const RationalMatrix& s = poly.matrix();
    for (const Face& f : faces[tree.root()]) {
        const ColumnSet support = whole.minus(f.zeros);
        const auto solution = solve_exact(s.select_columns(support), poly.rhs());
        if (!solution) throw std::logic_error("minimal feasible root face without a solution");
        RationalVector x(poly.num_columns());
        for (std::size_t j = 0; j < support.size(); ++j) x[support[j]] = (*solution)[j];
        if (!is_basic_feasible(poly, x)) throw std::logic_error("reconstructed point is not a vertex");
        vertices.insert(std::move(x));
    }
    return vertices;
}

BoundReport check_enumeration_bounds(const PolyhedronSpec& poly, const ModTree& tree,
                                     const EnumerationTrace& trace, const VertexSet& vertices) {
    BoundReport report;
    const std::size_t v = vertices.size();
    for (const NodeReport& node : trace.nodes) {
        ++report.nodes_checked;
        std::set<ColumnSet> vertex_faces;
        for (const auto& p : vertices.points()) {
            std::vector<std::size_t> z;
            for (std::size_t i : node.module) {
                if (sgn(p[i]) == 0) z.push_back(i);
            }
            vertex_faces.insert(ColumnSet(std::move(z)));
        }
        if (vertex_faces.size() > v) ++report.vertex_bound_violations;
        if (node.faces.size() > saturating_pow(v, node.interface_dim + 1)) ++report.minimal_bound_violations;
        const std::set<ColumnSet> computed(node.faces.begin(), node.faces.end());
        for (const auto& f : vertex_faces) {
            if (!computed.contains(f)) ++report.coverage_misses;
        }
        const ModuleInterface& iface = tree.node(node.node).interface;
        for (const auto& f : node.faces) {
            if (face_dimension(poly, iface, f) > iface.dim) ++report.dimension_violations;
        }
    }
    return report;
}

}  // namespace kmodenum
