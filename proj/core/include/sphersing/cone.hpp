#pragma once

#include "sphersing/numeric.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace sphersing {

/// Rational polyhedral cone in N_Q, kept in canonical double description:
/// extreme rays (primitive, reduced modulo the lineality space, sorted) plus
/// facet inequalities and span equations.  Immutable after construction.
class Cone {
 public:
  Cone() = default;

  static Cone from_generators(std::size_t ambient_dim, const std::vector<IVec>& generators);
  static Cone from_inequalities(std::size_t ambient_dim, const std::vector<IVec>& inequalities,
                                const std::vector<IVec>& equations);
  static Cone full_space(std::size_t ambient_dim);
  static Cone zero(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return ambient_dim_ - equations_.size(); }

  const std::vector<IVec>& rays() const { return rays_; }
  const std::vector<IVec>& lineality() const { return lineality_; }
  const std::vector<IVec>& facet_normals() const { return facets_; }
  const std::vector<IVec>& span_equations() const { return equations_; }

  bool contains(const QVec& x) const;
  bool contains(const IVec& x) const { return contains(to_qvec(x)); }
  bool relint_contains(const QVec& x) const;
  bool relint_contains(const IVec& x) const { return relint_contains(to_qvec(x)); }
  bool contains_cone(const Cone& other) const;
  bool contains_line() const { return !lineality_.empty(); }
  bool is_pointed() const { return lineality_.empty(); }

  /// All faces, including {0} and the cone itself.  Throws "NotPointed".
  std::vector<Cone> faces() const;
  std::vector<Cone> facets() const;

  Cone dual() const;
  Cone intersect(const Cone& other) const;
  /// Intersection with {x : normal.x >= 0}.
  Cone intersect_halfspace(const IVec& normal) const;
  /// Intersection with {x : normal.x = 0}.
  Cone intersect_hyperplane(const IVec& normal) const;

  /// A point of the relative interior (sum of extreme rays; a lineality
  /// direction for a subspace; zero only for the zero cone).
  QVec relint_point() const;

  std::string canonical_key() const;
  bool operator==(const Cone& other) const { return canonical_key() == other.canonical_key(); }

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<IVec> rays_;       // extreme rays mod lineality, primitive, sorted
  std::vector<IVec> lineality_;  // canonical basis of the lineality space
  std::vector<IVec> facets_;     // inequalities f.x >= 0, canonical mod equations
  std::vector<IVec> equations_;  // canonical basis of span(C)^perp
};

/// Exact coverage test: V subset of the union of the cones.  On failure the
/// witness (a rational point of V outside every cone) is stored when asked
/// for.  Throws "CoverageUndecided" past the recursion cap (default 24,
/// overridable via SPHERSING_MAX_DEPTH).
bool covers(const std::vector<Cone>& cones, const Cone& v, QVec* witness = nullptr,
            int max_depth = -1);

/// {x in C cap N : 0 < h(x) <= 1}.  Requires h > 0 on C \ {0}; otherwise
/// throws "UnboundedTruncation".  Deterministic lex order.
std::vector<IVec> truncated_lattice_points(const Cone& c, const QVec& h);

}  // namespace sphersing
