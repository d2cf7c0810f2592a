#pragma once

#include "sphersing/numeric.hpp"

#include <optional>
#include <vector>

namespace sphersing {

/// Rank of the row family over Q.
std::size_t rank_of(const std::vector<QVec>& rows);
std::size_t rank_of(const std::vector<IVec>& rows);

/// One solution x of rows[i] . x = rhs[i] (free coordinates set to 0),
/// or nullopt when inconsistent.
std::optional<QVec> solve_linear(const std::vector<QVec>& rows, const std::vector<Rat>& rhs,
                                 std::size_t nvars);
std::optional<QVec> solve_linear(const std::vector<IVec>& rows, const std::vector<Rat>& rhs,
                                 std::size_t nvars);

/// Integral solution x in Z^n of rows[i] . x = rhs[i], or nullopt.
std::optional<IVec> solve_linear_integral(const std::vector<IVec>& rows,
                                          const std::vector<Rat>& rhs, std::size_t nvars);

/// Basis of the null space {x : rows[i] . x = 0}.
std::vector<QVec> kernel_basis(const std::vector<QVec>& rows, std::size_t nvars);
std::vector<QVec> kernel_basis(const std::vector<IVec>& rows, std::size_t nvars);

/// Scale a rational vector to its primitive integer multiple (same direction).
IVec scale_to_primitive(const QVec& v);

/// Reduced row echelon form, in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<QVec>& rows);

/// Canonical representative of v modulo the row space of `subspace`:
/// eliminates the pivot coordinates of the subspace's RREF from v.
QVec reduce_mod_span(const QVec& v, const std::vector<QVec>& subspace_rref,
                     const std::vector<std::size_t>& pivots);

}  // namespace sphersing
