#pragma once

#include "sphersing/colored_fan.hpp"

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace sphersing {

/// B-stable Weil divisor: one coefficient per colorless fan ray (the
/// G-stable divisors X_i) and one per color of the space, including colors
/// outside F_X.
struct BWeilDivisor {
  std::map<IVec, Rat> stable;
  std::map<std::string, Rat> colors;

  bool operator==(const BWeilDivisor& other) const = default;
};

BWeilDivisor operator+(const BWeilDivisor& a, const BWeilDivisor& b);
BWeilDivisor operator-(const BWeilDivisor& a);
BWeilDivisor scaled(const BWeilDivisor& d, const Rat& factor);

/// Support function data of a (Q-)Cartier divisor: one covector per maximal
/// colored cone of the fan.
struct PiecewiseLinearFn {
  std::vector<QVec> chi;  // aligned with fan.maximal_cones
  BWeilDivisor divisor;
};

struct CartierFailure {
  std::size_t cone_index = 0;
  std::string reason;
};

std::variant<PiecewiseLinearFn, CartierFailure> cartier_data(const ColoredFan& fan,
                                                             const BWeilDivisor& delta,
                                                             bool integral);

/// Evaluate the support function at x using any maximal cone containing x.
/// Throws "RayNotInSupport" when x is outside the fan support.
Rat evaluate_pl(const ColoredFan& fan, const PiecewiseLinearFn& pl, const QVec& x);

bool is_globally_generated(const ColoredFan& fan, const BWeilDivisor& delta);
bool is_ample(const ColoredFan& fan, const BWeilDivisor& delta);

/// Coefficient 1 on every colorless ray, a_D on every color of the space.
BWeilDivisor anticanonical(const ColoredFan& fan);

Rat pullback_coefficient(const ColoredFan& src, const ColoredFan& dst, const BWeilDivisor& delta,
                         const IVec& ray);

}  // namespace sphersing
