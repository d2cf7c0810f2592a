#pragma once

#include "sphersing/numeric.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace sphersing {

/// coeffs . x <= rhs, or strictly < when strict is set.
struct LinearConstraint {
  QVec coeffs;
  Rat rhs;
  bool strict = false;
};

struct LinearSystem {
  std::vector<std::pair<QVec, Rat>> equalities;  // coeffs . x = rhs
  std::vector<LinearConstraint> inequalities;
};

/// Exact rational feasibility by Gaussian elimination on the equalities
/// followed by Fourier-Motzkin on the remaining variables.  Strict
/// inequalities are carried through combination, so the returned point (when
/// one exists) satisfies every constraint exactly as stated.
std::optional<QVec> solve_feasibility(const LinearSystem& system, std::size_t nvars);

}  // namespace sphersing
