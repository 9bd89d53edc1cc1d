#ifndef KMODENUM_KMODULE_HPP
#define KMODENUM_KMODULE_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "kmodenum/column_set.hpp"
#include "kmodenum/polyhedron.hpp"
#include "kmodenum/ratmat.hpp"

namespace kmodenum {

/**
 * Interface of a module A: for every feasible x, S_A x_A lies in
 * constant + span(variable_basis). The basis has minimal size, so
 * dim == variable_basis.cols() and the span is unique (the constant is
 * only unique modulo that span).
 */
struct ModuleInterface {
    ColumnSet module;
    RationalVector constant;
    RationalMatrix variable_basis;
    std::size_t dim = 0;
};

/// Columns of P whose value is not constant over P (unbounded counts as
/// not constant). Throws EmptyPolyhedron.
ColumnSet variable_set(const PolyhedronSpec& poly);

struct FixedValue {
    std::size_t column;  // index in the original polyhedron
    std::string name;
    Rational value;
};

struct Reduction {
    PolyhedronSpec reduced;         // over the columns in `kept`
    ColumnSet kept;                 // Q, as indices of the original columns
    std::vector<FixedValue> fixed;  // every column outside Q

    /// Re-inserts the fixed coordinates into a point of the reduced polyhedron.
    RationalVector lift(const RationalVector& reduced_point) const;
};

/// {x : S_Q x = b - S_{R\Q} x_fixed, x >= 0}; throws EmptyPolyhedron.
Reduction reduce(const PolyhedronSpec& poly);

/// True iff A∩Q is a (k+1)-separator of the column matroid of S_Q.
bool is_k_module(const PolyhedronSpec& poly, const ColumnSet& module, std::size_t k);

/// dim span{ S_A w_A : w in ker S_Q }, the least k for which A is a k-module.
std::size_t interface_dim(const PolyhedronSpec& poly, const ColumnSet& module);

/// d = S_A y_A for the phase-one point y; D a basis of the span above.
ModuleInterface interface(const PolyhedronSpec& poly, const ColumnSet& module);

}  // namespace kmodenum

#endif  // KMODENUM_KMODULE_HPP
