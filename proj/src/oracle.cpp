#include "kmodenum/oracle.hpp"

#include <string>

#include "kmodenum/errors.hpp"

namespace kmodenum::oracle {

namespace {

struct SupportSearch {
    const PolyhedronSpec& poly;
    std::size_t max_size;
    VertexSet& out;
    std::vector<std::size_t> chosen;

    void consider() {
        const ColumnSet b(chosen);
        const auto x_b = solve_exact(poly.matrix().select_columns(b), poly.rhs());
        if (!x_b) return;
        RationalVector x(poly.num_columns());
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (sgn((*x_b)[j]) < 0) return;
            x[b[j]] = (*x_b)[j];
        }
        if (poly.matrix().multiply(x) != poly.rhs()) return;
        out.insert(std::move(x));
    }

    // Depth-first over increasing index tuples; a dependent prefix cannot
    // grow into an independent set, so that branch is cut.
    void extend(std::size_t next) {
        consider();
        if (chosen.size() == max_size) return;
        for (std::size_t c = next; c < poly.num_columns(); ++c) {
            chosen.push_back(c);
            if (rank(poly.matrix().select_columns(ColumnSet(chosen))) == chosen.size()) extend(c + 1);
            chosen.pop_back();
        }
    }
};

RationalMatrix stacked_with_unit_rows(const RationalMatrix& s, const ColumnSet& pinned) {
    RationalMatrix out = s;
    std::size_t serial = 0;
    for (std::size_t i : pinned) {
        RationalVector row(s.cols());
        row[i] = 1;
        out.append_row("__pin" + std::to_string(serial++), row);
    }
    return out;
}

}  // namespace

VertexSet brute_force_vertices(const PolyhedronSpec& poly, std::size_t cap) {
    if (poly.num_columns() > cap) {
        throw CapExceeded("brute force limited to " + std::to_string(cap) + " columns, got " +
                          std::to_string(poly.num_columns()));
    }
    VertexSet out(poly.column_names());
    SupportSearch search{poly, rank(poly.matrix()), out, {}};
    search.extend(0);
    return out;
}

std::size_t definitional_interface_dim(const RationalMatrix& s, const ColumnSet& module) {
    const RationalMatrix kernel = kernel_basis(s);
    RationalMatrix image(s.rows(), kernel.cols());
    for (std::size_t r = 0; r < s.rows(); ++r) {
        for (std::size_t j = 0; j < kernel.cols(); ++j) {
            Rational acc = 0;
            for (std::size_t i : module) acc += s(r, i) * kernel(i, j);
            image(r, j) = acc;
        }
    }
    return rank(image);
}

bool definitional_k_module_check(const RationalMatrix& s, const ColumnSet& module, std::size_t k) {
    return definitional_interface_dim(s, module) <= k;
}

std::size_t projection_dim_by_intersections(const RationalMatrix& s, const ColumnSet& module) {
    const std::size_t n = s.cols();
    const std::size_t ker = kernel_basis(s).cols();
    // X = {x : x_i = 0 outside A}; X^perp = {x : x_i = 0 inside A}.
    const std::size_t ker_and_x = kernel_basis(stacked_with_unit_rows(s, module.complement(n))).cols();
    const std::size_t ker_and_x_perp = kernel_basis(stacked_with_unit_rows(s, module)).cols();
    return ker - ker_and_x_perp - ker_and_x;
}

bool face_feasible_by_vertices(const VertexSet& vertices, const ColumnSet& module, const ColumnSet& zeros) {
    std::size_t count = 0;
    RationalVector sum;
    for (const auto& v : vertices.points()) {
        bool on_face = true;
        for (std::size_t i : zeros) {
            if (sgn(v[i]) != 0) on_face = false;
        }
        if (!on_face) continue;
        if (sum.empty()) sum.assign(v.size(), Rational(0));
        for (std::size_t i = 0; i < v.size(); ++i) sum[i] += v[i];
        ++count;
    }
    if (count == 0) return false;
    for (std::size_t i : module.minus(zeros)) {
        if (sgn(sum[i]) <= 0) return false;
    }
    return true;
}

}  // namespace kmodenum::oracle
