#ifndef KMODENUM_RATMAT_HPP
#define KMODENUM_RATMAT_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kmodenum/column_set.hpp"

namespace kmodenum {

/// Exact rational scalar. GMP keeps every value in canonical form
/// (gcd(|p|, q) = 1, q > 0) after each arithmetic operation.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& value);

/// Parses "p/q" or "p" (optional leading '-'); throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Bits needed for numerator plus denominator; used as the pivot cost.
std::size_t bit_size(const Rational& value);

/**
 * Dense rational matrix whose rows and columns carry unique names.
 *
 * Names play the role of index sets: a submatrix selected by a column set
 * keeps the original column names, so entry (m, i) of S_A equals entry
 * (m, i) of S for every i in A.
 */
class RationalMatrix {
public:
    RationalMatrix() = default;

    /// Zero matrix with default names "r1".."rm" and "c1".."cn".
    RationalMatrix(std::size_t rows, std::size_t cols);

    /// Zero matrix with the given names; throws on duplicate names.
    RationalMatrix(std::vector<std::string> row_names, std::vector<std::string> col_names);

    static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);
    static RationalMatrix from_rows(const std::vector<RationalVector>& rows,
                                    std::vector<std::string> row_names,
                                    std::vector<std::string> col_names);
    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return row_names_.size(); }
    std::size_t cols() const { return col_names_.size(); }
    bool empty() const { return rows() == 0 || cols() == 0; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols() + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols() + c]; }

    const std::vector<std::string>& row_names() const { return row_names_; }
    const std::vector<std::string>& col_names() const { return col_names_; }

    /// Throws std::out_of_range for unknown names.
    std::size_t col_index(std::string_view name) const;
    std::size_t row_index(std::string_view name) const;
    ColumnSet columns_named(const std::vector<std::string>& names) const;
    std::vector<std::string> names_of(const ColumnSet& cols) const;

    RationalVector column(std::size_t c) const;
    RationalVector row(std::size_t r) const;

    /// S_A: the columns in `cols`, in increasing index order, names kept.
    RationalMatrix select_columns(const ColumnSet& cols) const;
    RationalMatrix select_rows(const std::vector<std::size_t>& rows) const;
    RationalMatrix transpose() const;

    /// Appends a row; `values` must have cols() entries.
    void append_row(std::string name, const RationalVector& values);

    RationalVector multiply(std::span<const Rational> x) const;
    RationalMatrix multiply(const RationalMatrix& rhs) const;

    bool operator==(const RationalMatrix& other) const = default;

private:
    std::vector<std::string> row_names_;
    std::vector<std::string> col_names_;
    std::vector<Rational> data_;
};

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
    RationalMatrix reduced;
    std::vector<std::size_t> pivot_cols;
};

/// Gauss-Jordan elimination; among candidate pivots the entry with the
/// smallest bit size is chosen.
Echelon row_echelon(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Columns form a basis of ker m; rows are named after m's columns.
RationalMatrix kernel_basis(const RationalMatrix& m);

/// Columns of m (original values) that form a basis of its column space.
RationalMatrix column_space_basis(const RationalMatrix& m);

/// One exact solution of m x = rhs (free variables set to zero), or
/// nullopt when the system is inconsistent.
std::optional<RationalVector> solve_exact(const RationalMatrix& m, std::span<const Rational> rhs);

/// Canonical RREF of the column span; equal spans give equal results.
RationalMatrix span_canonical_form(const RationalMatrix& columns);

}  // namespace kmodenum

#endif  // KMODENUM_RATMAT_HPP
