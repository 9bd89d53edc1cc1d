#include "kmodenum/kmodule.hpp"

#include <algorithm>
#include <stdexcept>

#include "kmodenum/matroid.hpp"

namespace kmodenum {

namespace {

/// Positions of `subset` (original indices) inside the sorted set `within`.
ColumnSet positions_in(const ColumnSet& subset, const ColumnSet& within) {
    std::vector<std::size_t> pos;
    pos.reserve(subset.size());
    for (std::size_t i : subset) {
        auto it = std::lower_bound(within.begin(), within.end(), i);
        if (it == within.end() || *it != i) throw std::logic_error("column not in the enclosing set");
        pos.push_back(static_cast<std::size_t>(it - within.begin()));
    }
    return ColumnSet(std::move(pos));
}

/// The m x dim(ker S_Q) matrix whose columns are S_{A∩Q} w_{A∩Q} for the
/// kernel basis vectors w of S_Q.
RationalMatrix module_image(const PolyhedronSpec& poly, const ColumnSet& module) {
    const ColumnSet q = variable_set(poly);
    const RationalMatrix s_q = poly.matrix().select_columns(q);
    const RationalMatrix kernel = kernel_basis(s_q);
    const ColumnSet local = positions_in(module.intersect(q), q);

    RationalMatrix image(poly.matrix().row_names(), kernel.col_names());
    for (std::size_t r = 0; r < s_q.rows(); ++r) {
        for (std::size_t j = 0; j < kernel.cols(); ++j) {
            Rational acc = 0;
            for (std::size_t i : local) {
                if (sgn(s_q(r, i)) != 0 && sgn(kernel(i, j)) != 0) acc += s_q(r, i) * kernel(i, j);
            }
            image(r, j) = acc;
        }
    }
    return image;
}

void check_columns(const PolyhedronSpec& poly, const ColumnSet& module) {
    if (!module.empty() && module.indices().back() >= poly.num_columns()) {
        throw std::out_of_range("module references a column outside the polyhedron");
    }
}

}  // namespace

ColumnSet variable_set(const PolyhedronSpec& poly) {
    const auto& ranges = poly.ranges();
    std::vector<std::size_t> q;
    for (std::size_t i = 0; i < ranges.size(); ++i) {
        if (!ranges[i].constant()) q.push_back(i);
    }
    return ColumnSet(std::move(q));
}

RationalVector Reduction::lift(const RationalVector& reduced_point) const {
    if (reduced_point.size() != kept.size()) throw std::invalid_argument("reduced point has wrong length");
    RationalVector x(kept.size() + fixed.size());
    for (std::size_t j = 0; j < kept.size(); ++j) x[kept[j]] = reduced_point[j];
    for (const auto& f : fixed) x[f.column] = f.value;
    return x;
}

Reduction reduce(const PolyhedronSpec& poly) {
    const ColumnSet q = variable_set(poly);
    const auto& ranges = poly.ranges();
    const RationalMatrix& s = poly.matrix();

    std::vector<FixedValue> fixed;
    RationalVector rhs = poly.rhs();
    for (std::size_t i : q.complement(poly.num_columns())) {
        const Rational& value = *ranges[i].upper;
        fixed.push_back({i, s.col_names()[i], value});
        if (sgn(value) == 0) continue;
        for (std::size_t r = 0; r < s.rows(); ++r) rhs[r] -= s(r, i) * value;
    }
    return Reduction{PolyhedronSpec(s.select_columns(q), std::move(rhs)), q, std::move(fixed)};
}

bool is_k_module(const PolyhedronSpec& poly, const ColumnSet& module, std::size_t k) {
    check_columns(poly, module);
    const ColumnSet q = variable_set(poly);
    const LinearMatroid matroid(poly.matrix().select_columns(q));
    return matroid.is_k_separator(positions_in(module.intersect(q), q), k + 1);
}

std::size_t interface_dim(const PolyhedronSpec& poly, const ColumnSet& module) {
    check_columns(poly, module);
    return rank(module_image(poly, module));
}

ModuleInterface interface(const PolyhedronSpec& poly, const ColumnSet& module) {
    check_columns(poly, module);
    ModuleInterface out;
    out.module = module;
    const RationalVector& y = poly.feasible_point();
    const RationalMatrix& s = poly.matrix();
    out.constant.assign(s.rows(), Rational(0));
    for (std::size_t r = 0; r < s.rows(); ++r) {
        for (std::size_t i : module) {
            if (sgn(y[i]) != 0) out.constant[r] += s(r, i) * y[i];
        }
    }
    RationalMatrix basis = column_space_basis(module_image(poly, module));
    std::vector<std::string> names;
    for (std::size_t j = 0; j < basis.cols(); ++j) names.push_back("alpha" + std::to_string(j + 1));
    RationalMatrix renamed(s.row_names(), std::move(names));
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        for (std::size_t j = 0; j < basis.cols(); ++j) renamed(r, j) = basis(r, j);
    }
    out.dim = renamed.cols();
    out.variable_basis = std::move(renamed);
    return out;
}

}  // namespace kmodenum
