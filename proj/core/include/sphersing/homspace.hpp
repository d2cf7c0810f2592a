#pragma once

#include "sphersing/cone.hpp"
#include "sphersing/lattice.hpp"
#include "sphersing/numeric.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace sphersing {

/// Restricted root datum of the acting group, in the basis chosen for N.
/// Positive roots are stored as coefficient vectors over the simple roots.
struct RootData {
  std::vector<IVec> simple_root_restrictions;  // covector on N per simple root
  IntMatrix cartan;                            // cartan(i, j) = <alpha_i, alpha_j^vee>
  std::vector<IVec> positive_roots;            // coefficients over simple roots
  std::vector<std::size_t> parabolic_set;      // S_P, indices of simple roots
  std::vector<IVec> coroot_restrictions;       // alpha^vee restricted to N, per simple root

  bool operator==(const RootData& other) const = default;
};

enum class ColorType { A, TwoA, B };

std::string to_string(ColorType t);
std::optional<ColorType> color_type_from_string(const std::string& s);

struct Color {
  std::string name;
  IVec sigma;  // image in N, nonzero
  ColorType ctype = ColorType::B;
  Int a_d = 1;
  std::optional<std::size_t> moving_root;

  bool operator==(const Color& other) const = default;
};

/// Combinatorial datum of a spherical homogeneous space: rank, valuation
/// cone, spherical roots (covectors spanning -dual(V)), colors, and optional
/// root data for deriving color types and coefficients.
struct SphericalSpace {
  std::size_t rank = 0;
  Cone valuation_cone;
  std::vector<IVec> spherical_roots;  // covectors, primitive
  std::vector<Color> colors;
  std::optional<RootData> root_data;

  bool horospherical() const { return spherical_roots.empty(); }
  const Color* find_color(const std::string& name) const;

  bool operator==(const SphericalSpace& other) const = default;
};

ColorType classify_color_type(std::size_t alpha, const SphericalSpace& space);

Int color_coefficient(ColorType ctype, std::size_t alpha, const RootData& rd);

std::vector<std::string> validate_space(const SphericalSpace& space);

}  // namespace sphersing
