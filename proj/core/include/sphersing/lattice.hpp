#pragma once

#include "sphersing/numeric.hpp"

#include <cstddef>
#include <vector>

namespace sphersing {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IVec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IVec row(std::size_t i) const;
  IntMatrix multiplied(const IntMatrix& other) const;
  IntMatrix transposed() const;

  /// Determinant by fraction-free (Bareiss) elimination; square matrices only.
  Int determinant() const;

  bool operator==(const IntMatrix& other) const = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

struct SmithResult {
  IntMatrix u;  // unimodular, rows x rows
  IntMatrix s;  // diagonal with d1 | d2 | ..., all di >= 0
  IntMatrix v;  // unimodular, cols x cols
};

/// U*A*V = S.  Pivoting on the smallest nonzero |entry| in deterministic
/// row-major order, so results are reproducible.
SmithResult smith_normal_form(const IntMatrix& a);

/// v / gcd(coords), keeping direction.  Throws "ZeroVector".
IVec primitive_of(const IVec& v);

/// Index [sat(L') : L'] of the sublattice spanned by the family inside its
/// rational span.  Throws "DependentFamily".
Int saturation_index(const std::vector<IVec>& family);

/// Vectors completing the family to a basis of Z^r.
/// Throws "DependentFamily" / "NotSaturated".
std::vector<IVec> extend_to_basis(const std::vector<IVec>& family);

}  // namespace sphersing
