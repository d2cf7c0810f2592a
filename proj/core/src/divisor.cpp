#include "sphersing/divisor.hpp"

#include "sphersing/lattice.hpp"
#include "sphersing/linalg.hpp"

#include <algorithm>
#include <set>

namespace sphersing {

BWeilDivisor operator+(const BWeilDivisor& a, const BWeilDivisor& b) {
  BWeilDivisor out = a;
  for (const auto& [ray, c] : b.stable) out.stable[ray] += c;
  for (const auto& [name, c] : b.colors) out.colors[name] += c;
  return out;
}

BWeilDivisor operator-(const BWeilDivisor& a) { return scaled(a, -1); }

BWeilDivisor scaled(const BWeilDivisor& d, const Rat& factor) {
  BWeilDivisor out = d;
  for (auto& [ray, c] : out.stable) c *= factor;
  for (auto& [name, c] : out.colors) c *= factor;
  return out;
}

std::variant<PiecewiseLinearFn, CartierFailure> cartier_data(const ColoredFan& fan,
                                                             const BWeilDivisor& delta,
                                                             bool integral) {
  const SphericalSpace& sp = *fan.space;
  std::vector<IVec> cls = colorless_rays(fan);
  std::set<IVec> colorless(cls.begin(), cls.end());

  PiecewiseLinearFn pl;
  pl.divisor = delta;
  for (std::size_t k = 0; k < fan.maximal_cones.size(); ++k) {
    const ColoredCone& cc = fan.maximal_cones[k];
    std::vector<IVec> rows;
    std::vector<Rat> rhs;
    for (const IVec& r : cc.cone.rays()) {
      if (!colorless.count(r)) continue;
      auto it = delta.stable.find(r);
      if (it == delta.stable.end())
        throw Error("BadDivisor", "missing coefficient for colorless ray " + to_string(r));
      rows.push_back(r);
      rhs.push_back(it->second);
    }
    for (const std::string& name : cc.colors) {
      const Color* d = sp.find_color(name);
      if (!d) throw Error("UnknownColor", "color " + name + " is not declared on the space");
      auto it = delta.colors.find(name);
      if (it == delta.colors.end())
        throw Error("BadDivisor", "missing coefficient for color " + name);
      rows.push_back(d->sigma);
      rhs.push_back(it->second);
    }
    if (integral) {
      std::optional<IVec> chi = solve_linear_integral(rows, rhs, sp.rank);
      if (!chi) return CartierFailure{k, "no integral support covector on this cone"};
      pl.chi.push_back(to_qvec(*chi));
    } else {
      std::optional<QVec> chi = solve_linear(rows, rhs, sp.rank);
      if (!chi) return CartierFailure{k, "inconsistent support system on this cone"};
      pl.chi.push_back(std::move(*chi));
    }
  }
  return pl;
}

Rat evaluate_pl(const ColoredFan& fan, const PiecewiseLinearFn& pl, const QVec& x) {
  std::optional<std::size_t> k = find_containing_cone(fan, x);
  if (!k) throw Error("RayNotInSupport", "point " + to_string(x) + " is outside the fan support");
  return dot(pl.chi[*k], x);
}

namespace {

bool convexity(const ColoredFan& fan, const BWeilDivisor& delta, bool strict) {
  if (!is_complete(fan)) throw Error("NotComplete", "ampleness criteria need a complete fan");
  auto data = cartier_data(fan, delta, true);
  if (std::holds_alternative<CartierFailure>(data))
    throw Error("NotCartier", "divisor is not Cartier");
  const PiecewiseLinearFn& pl = std::get<PiecewiseLinearFn>(data);
  const SphericalSpace& sp = *fan.space;

  std::vector<QVec> probes;
  for (const IVec& r : fan_rays(fan)) probes.push_back(to_qvec(r));
  for (const Color& d : sp.colors) probes.push_back(to_qvec(d.sigma));

  for (std::size_t k = 0; k < fan.maximal_cones.size(); ++k) {
    const Cone& c = fan.maximal_cones[k].cone;
    for (const QVec& x : probes) {
      if (c.contains(x)) continue;
      if (!find_containing_cone(fan, x)) continue;
      Rat h = evaluate_pl(fan, pl, x);
      Rat lin = dot(pl.chi[k], x);
      if (strict ? !(h > lin) : !(h >= lin)) return false;
    }
  }

  std::vector<std::string> fx = fan_colors(fan);
  for (const Color& d : sp.colors) {
    if (std::binary_search(fx.begin(), fx.end(), d.name)) continue;
    if (!find_containing_cone(fan, to_qvec(d.sigma))) continue;
    auto it = delta.colors.find(d.name);
    if (it == delta.colors.end())
      throw Error("BadDivisor", "missing coefficient for color " + d.name);
    Rat h = evaluate_pl(fan, pl, to_qvec(d.sigma));
    if (strict ? !(h < it->second) : !(h <= it->second)) return false;
  }
  return true;
}

}  // namespace

bool is_globally_generated(const ColoredFan& fan, const BWeilDivisor& delta) {
  return convexity(fan, delta, false);
}

bool is_ample(const ColoredFan& fan, const BWeilDivisor& delta) {
  return convexity(fan, delta, true);
}

BWeilDivisor anticanonical(const ColoredFan& fan) {
  BWeilDivisor out;
  for (const IVec& r : colorless_rays(fan)) out.stable[r] = 1;
  for (const Color& d : fan.space->colors) out.colors[d.name] = Rat(d.a_d);
  return out;
}

Rat pullback_coefficient(const ColoredFan& src, const ColoredFan& dst, const BWeilDivisor& delta,
                         const IVec& ray) {
  if (!exists_morphism(src, dst))
    throw Error("NoMorphism", "source fan does not dominate the target fan");
  auto data = cartier_data(dst, delta, false);
  if (std::holds_alternative<CartierFailure>(data))
    throw Error("NotQCartier", "divisor has no support function on the target fan");
  return evaluate_pl(dst, std::get<PiecewiseLinearFn>(data), to_qvec(primitive_of(ray)));
}

}  // namespace sphersing
