#pragma once

#include "sphersing/cone.hpp"
#include "sphersing/homspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sphersing {

struct ColoredCone {
  Cone cone;
  std::vector<std::string> colors;  // sorted, unique names into space.colors

  bool operator==(const ColoredCone& other) const {
    return cone == other.cone && colors == other.colors;
  }
};

/// A colored fan is stored by its maximal colored cones; faces are derived.
struct ColoredFan {
  const SphericalSpace* space = nullptr;
  std::vector<ColoredCone> maximal_cones;
};

/// True iff the relative interior of c meets V.
bool relint_meets(const Cone& c, const Cone& v);

/// All colored faces of cc whose relative interior meets V, cc included.
std::vector<ColoredCone> colored_faces(const ColoredCone& cc, const SphericalSpace& space);

std::vector<std::string> validate_fan(const ColoredFan& fan);

bool is_complete(const ColoredFan& fan);

/// Primitive generators of the fan edges not generated by any color image.
/// These index the G-stable divisors X_i.  Sorted lexicographically.
std::vector<IVec> colorless_rays(const ColoredFan& fan);

/// Primitive generators of all fan edges, sorted lexicographically.
std::vector<IVec> fan_rays(const ColoredFan& fan);

/// F_X: union of the color sets, sorted by name.
std::vector<std::string> fan_colors(const ColoredFan& fan);

/// Index of a maximal cone containing x, preferring cones whose relative
/// interior contains x; nullopt when x is outside the support.
std::optional<std::size_t> find_containing_cone(const ColoredFan& fan, const QVec& x);

struct MorphismWitness {
  std::vector<std::size_t> assignment;  // src maximal cone -> dst maximal cone
};

std::optional<MorphismWitness> exists_morphism(const ColoredFan& src, const ColoredFan& dst);

/// Erase all colors, intersect with V, and refine to a fan whose cones are
/// generated by parts of lattice bases.  Deterministic.
ColoredFan decolor_and_resolve(const ColoredFan& fan);

}  // namespace sphersing
