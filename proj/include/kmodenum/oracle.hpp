#ifndef KMODENUM_ORACLE_HPP
#define KMODENUM_ORACLE_HPP

#include <cstddef>

#include "kmodenum/column_set.hpp"
#include "kmodenum/faceenum.hpp"
#include "kmodenum/polyhedron.hpp"
#include "kmodenum/ratmat.hpp"

// Brute-force ground truth. Only the ratmat primitives are shared with the
// rest of the library, so a bug elsewhere cannot hide itself here.
namespace kmodenum::oracle {

/// Every basic feasible solution: for each column set B with independent
/// columns, solve S_B x_B = b and keep nonnegative solutions. Throws
/// CapExceeded when P has more than `cap` columns.
VertexSet brute_force_vertices(const PolyhedronSpec& poly, std::size_t cap = 16);

/// dim span{ S_A w_A : w in a basis of ker S } <= k, straight from the
/// definition of a k-module of the kernel.
bool definitional_k_module_check(const RationalMatrix& s, const ColumnSet& module, std::size_t k);

/// The same dimension as an integer.
std::size_t definitional_interface_dim(const RationalMatrix& s, const ColumnSet& module);

/// dim ker S - dim(ker S ∩ X^perp) - dim(ker S ∩ X) with X = {x : x_i = 0
/// for i outside A}; both intersections are computed as kernels of S stacked
/// on coordinate rows.
std::size_t projection_dim_by_intersections(const RationalMatrix& s, const ColumnSet& module);

/// Feasible A-face test from a vertex list of a polytope: the barycenter of
/// the vertices with v_F = 0 lies in the relative interior of {x in P :
/// x_F = 0}, so F is feasible iff that barycenter is positive on A \ F.
bool face_feasible_by_vertices(const VertexSet& vertices, const ColumnSet& module, const ColumnSet& zeros);

}  // namespace kmodenum::oracle

#endif  // KMODENUM_ORACLE_HPP
