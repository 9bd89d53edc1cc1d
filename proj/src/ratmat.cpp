#include "kmodenum/ratmat.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace kmodenum {

namespace {

std::vector<std::string> default_names(const char* prefix, std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i + 1));
    return names;
}

void require_unique(const std::vector<std::string>& names, const char* axis) {
    std::unordered_set<std::string> seen;
    for (const auto& n : names) {
        if (!seen.insert(n).second) {
            throw std::invalid_argument(std::string("duplicate ") + axis + " name '" + n + "'");
        }
    }
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

std::string to_string(const Rational& value) { return value.get_str(10); }

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && body.front() == '-') body.remove_prefix(1);
    const auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    }
    Rational q;
    if (q.set_str(std::string(text), 10) != 0) {
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    }
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

std::size_t bit_size(const Rational& value) {
    return mpz_sizeinbase(value.get_num_mpz_t(), 2) + mpz_sizeinbase(value.get_den_mpz_t(), 2);
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : RationalMatrix(default_names("r", rows), default_names("c", cols)) {}

RationalMatrix::RationalMatrix(std::vector<std::string> row_names, std::vector<std::string> col_names)
    : row_names_(std::move(row_names)), col_names_(std::move(col_names)),
      data_(row_names_.size() * col_names_.size()) {
    require_unique(row_names_, "row");
    require_unique(col_names_, "column");
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
    return from_rows(rows, default_names("r", rows.size()), default_names("c", cols));
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows,
                                         std::vector<std::string> row_names,
                                         std::vector<std::string> col_names) {
    if (rows.size() != row_names.size()) throw std::invalid_argument("row count does not match row names");
    RationalMatrix m(std::move(row_names), std::move(col_names));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols()) throw std::invalid_argument("ragged row in matrix literal");
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
    }
    return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::size_t RationalMatrix::col_index(std::string_view name) const {
    for (std::size_t i = 0; i < col_names_.size(); ++i) {
        if (col_names_[i] == name) return i;
    }
    throw std::out_of_range("unknown column '" + std::string(name) + "'");
}

std::size_t RationalMatrix::row_index(std::string_view name) const {
    for (std::size_t i = 0; i < row_names_.size(); ++i) {
        if (row_names_[i] == name) return i;
    }
    throw std::out_of_range("unknown row '" + std::string(name) + "'");
}

ColumnSet RationalMatrix::columns_named(const std::vector<std::string>& names) const {
    std::vector<std::size_t> idx;
    idx.reserve(names.size());
    for (const auto& n : names) idx.push_back(col_index(n));
    return ColumnSet(std::move(idx));
}

std::vector<std::string> RationalMatrix::names_of(const ColumnSet& cols) const {
    std::vector<std::string> out;
    out.reserve(cols.size());
    for (std::size_t c : cols) out.push_back(col_names_.at(c));
    return out;
}

RationalVector RationalMatrix::column(std::size_t c) const {
    RationalVector v(rows());
    for (std::size_t r = 0; r < rows(); ++r) v[r] = (*this)(r, c);
    return v;
}

RationalVector RationalMatrix::row(std::size_t r) const {
    return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols()),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols()));
}

RationalMatrix RationalMatrix::select_columns(const ColumnSet& sel) const {
    std::vector<std::string> names;
    names.reserve(sel.size());
    for (std::size_t c : sel) names.push_back(col_names_.at(c));
    RationalMatrix out(row_names_, std::move(names));
    for (std::size_t r = 0; r < rows(); ++r) {
        for (std::size_t j = 0; j < sel.size(); ++j) out(r, j) = (*this)(r, sel[j]);
    }
    return out;
}

RationalMatrix RationalMatrix::select_rows(const std::vector<std::size_t>& sel) const {
    std::vector<std::string> names;
    names.reserve(sel.size());
    for (std::size_t r : sel) names.push_back(row_names_.at(r));
    RationalMatrix out(std::move(names), col_names_);
    for (std::size_t i = 0; i < sel.size(); ++i) {
        for (std::size_t c = 0; c < cols(); ++c) out(i, c) = (*this)(sel[i], c);
    }
    return out;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix out(col_names_, row_names_);
    for (std::size_t r = 0; r < rows(); ++r) {
        for (std::size_t c = 0; c < cols(); ++c) out(c, r) = (*this)(r, c);
    }
    return out;
}

void RationalMatrix::append_row(std::string name, const RationalVector& values) {
    if (values.size() != cols()) throw std::invalid_argument("appended row has wrong length");
    if (std::find(row_names_.begin(), row_names_.end(), name) != row_names_.end()) {
        throw std::invalid_argument("duplicate row name '" + name + "'");
    }
    row_names_.push_back(std::move(name));
    data_.insert(data_.end(), values.begin(), values.end());
}

RationalVector RationalMatrix::multiply(std::span<const Rational> x) const {
    if (x.size() != cols()) throw std::invalid_argument("matrix-vector size mismatch");
    RationalVector out(rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        Rational acc = 0;
        for (std::size_t c = 0; c < cols(); ++c) {
            if (sgn((*this)(r, c)) != 0 && sgn(x[c]) != 0) acc += (*this)(r, c) * x[c];
        }
        out[r] = acc;
    }
    return out;
}

RationalMatrix RationalMatrix::multiply(const RationalMatrix& rhs) const {
    if (rhs.rows() != cols()) throw std::invalid_argument("matrix-matrix size mismatch");
    RationalMatrix out(row_names_, rhs.col_names_);
    for (std::size_t r = 0; r < rows(); ++r) {
        for (std::size_t k = 0; k < cols(); ++k) {
            const Rational& a = (*this)(r, k);
            if (sgn(a) == 0) continue;
            for (std::size_t c = 0; c < rhs.cols(); ++c) {
                if (sgn(rhs(k, c)) != 0) out(r, c) += a * rhs(k, c);
            }
        }
    }
    return out;
}

Echelon row_echelon(const RationalMatrix& m) {
    Echelon e{m, {}};
    RationalMatrix& a = e.reduced;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t best = rows;
        std::size_t best_bits = 0;
        for (std::size_t r = lead; r < rows; ++r) {
            if (sgn(a(r, c)) == 0) continue;
            const std::size_t bits = bit_size(a(r, c));
            if (best == rows || bits < best_bits) {
                best = r;
                best_bits = bits;
            }
        }
        if (best == rows) continue;
        if (best != lead) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(best, j), a(lead, j));
        }
        const Rational inv = 1 / a(lead, c);
        for (std::size_t j = c; j < cols; ++j) a(lead, j) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || sgn(a(r, c)) == 0) continue;
            const Rational factor = a(r, c);
            for (std::size_t j = c; j < cols; ++j) {
                if (sgn(a(lead, j)) != 0) a(r, j) -= factor * a(lead, j);
            }
        }
        e.pivot_cols.push_back(c);
        ++lead;
    }
    return e;
}

std::size_t rank(const RationalMatrix& m) {
    if (m.empty()) return 0;
    return row_echelon(m).pivot_cols.size();
}

RationalMatrix kernel_basis(const RationalMatrix& m) {
    const std::size_t n = m.cols();
    std::vector<std::size_t> pivots;
    RationalMatrix reduced;
    if (m.rows() > 0) {
        Echelon e = row_echelon(m);
        pivots = std::move(e.pivot_cols);
        reduced = std::move(e.reduced);
    }
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c) {
        if (!is_pivot[c]) free_cols.push_back(c);
    }
    std::vector<std::string> names;
    for (std::size_t j = 0; j < free_cols.size(); ++j) names.push_back("k" + std::to_string(j + 1));
    RationalMatrix basis(m.col_names(), std::move(names));
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        const std::size_t f = free_cols[j];
        basis(f, j) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], j) = -reduced(i, f);
    }
    return basis;
}

RationalMatrix column_space_basis(const RationalMatrix& m) {
    if (m.empty()) return RationalMatrix(m.row_names(), {});
    const Echelon e = row_echelon(m);
    return m.select_columns(ColumnSet(e.pivot_cols));
}

std::optional<RationalVector> solve_exact(const RationalMatrix& m, std::span<const Rational> rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("right-hand side has wrong length");
    std::vector<std::string> names = m.col_names();
    std::string rhs_name = "rhs";
    while (std::find(names.begin(), names.end(), rhs_name) != names.end()) rhs_name += "_";
    names.push_back(rhs_name);
    RationalMatrix aug(m.row_names(), std::move(names));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = rhs[r];
    }
    const Echelon e = row_echelon(aug);
    RationalVector x(m.cols());
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
        const std::size_t p = e.pivot_cols[i];
        if (p == m.cols()) return std::nullopt;
        x[p] = e.reduced(i, m.cols());
    }
    return x;
}

RationalMatrix span_canonical_form(const RationalMatrix& columns) {
    // Row space of the transpose equals the column span; its RREF (zero rows
    // dropped) is unique.
    if (columns.empty()) return RationalMatrix(std::vector<std::string>{}, columns.row_names());
    const Echelon e = row_echelon(columns.transpose());
    std::vector<RationalVector> rows;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
        rows.push_back(e.reduced.row(i));
        names.push_back("s" + std::to_string(i + 1));
    }
    return RationalMatrix::from_rows(rows, std::move(names), columns.row_names());
}

}  // namespace kmodenum
