#include "sphersing/homspace.hpp"

#include "sphersing/linalg.hpp"

#include <algorithm>

namespace sphersing {

std::string to_string(ColorType t) {
  switch (t) {
    case ColorType::A:
      return "a";
    case ColorType::TwoA:
      return "2a";
    case ColorType::B:
      return "b";
  }
  return "?";
}

std::optional<ColorType> color_type_from_string(const std::string& s) {
  if (s == "a") return ColorType::A;
  if (s == "2a") return ColorType::TwoA;
  if (s == "b") return ColorType::B;
  return std::nullopt;
}

const Color* SphericalSpace::find_color(const std::string& name) const {
  for (const Color& c : colors) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

ColorType classify_color_type(std::size_t alpha, const SphericalSpace& space) {
  if (!space.root_data) throw Error("MissingRootData", "color type derivation needs root data");
  const RootData& rd = *space.root_data;
  if (alpha >= rd.simple_root_restrictions.size())
    throw Error("InvalidRootData", "simple root index out of range");
  const IVec& restr = rd.simple_root_restrictions[alpha];
  IVec twice = restr;
  for (Int& c : twice) c *= 2;
  bool is_a = std::find(space.spherical_roots.begin(), space.spherical_roots.end(), restr) !=
              space.spherical_roots.end();
  bool is_2a = std::find(space.spherical_roots.begin(), space.spherical_roots.end(), twice) !=
               space.spherical_roots.end();
  if (is_a && is_2a)
    throw Error("InconsistentSphericalRoots", "both alpha and 2*alpha are spherical roots");
  if (is_a) return ColorType::A;
  if (is_2a) return ColorType::TwoA;
  return ColorType::B;
}

Int color_coefficient(ColorType ctype, std::size_t alpha, const RootData& rd) {
  if (ctype != ColorType::B) return 1;
  if (alpha >= rd.cartan.cols()) throw Error("InvalidRootData", "simple root index out of range");
  Int total = 0;
  for (const IVec& gamma : rd.positive_roots) {
    bool moved = std::any_of(rd.parabolic_set.begin(), rd.parabolic_set.end(),
                             [&](std::size_t i) { return i < gamma.size() && gamma[i] != 0; });
    if (!moved) continue;
    for (std::size_t i = 0; i < gamma.size() && i < rd.cartan.rows(); ++i)
      total += gamma[i] * rd.cartan.at(i, alpha);
  }
  if (total < 2)
    throw Error("InvalidRootData",
                "type b coefficient " + total.str() + " below 2 for simple root index " +
                    std::to_string(alpha));
  return total;
}

std::vector<std::string> validate_space(const SphericalSpace& space) {
  std::vector<std::string> out;
  auto flag = [&](const std::string& msg) { out.push_back(msg); };

  if (space.valuation_cone.ambient_dim() != space.rank)
    flag("valuation cone dimension differs from rank");
  for (const IVec& rho : space.spherical_roots) {
    if (rho.size() != space.rank) flag("spherical root of wrong dimension");
    else if (is_zero(rho)) flag("zero spherical root");
  }

  // -dual(V) must be simplicial with the spherical roots as generators, so
  // the roots are independent and V is exactly their nonpositivity region.
  bool roots_ok = true;
  for (const IVec& rho : space.spherical_roots) {
    if (rho.size() != space.rank || is_zero(rho)) roots_ok = false;
  }
  if (roots_ok && !space.spherical_roots.empty() &&
      rank_of(space.spherical_roots) != space.spherical_roots.size()) {
    flag("spherical roots are linearly dependent (dual valuation cone not simplicial)");
    roots_ok = false;
  }
  if (roots_ok) {
    std::vector<IVec> normals;
    for (const IVec& rho : space.spherical_roots) {
      IVec n = rho;
      for (Int& c : n) c = -c;
      normals.push_back(std::move(n));
    }
    Cone expected = Cone::from_inequalities(space.rank, normals, {});
    if (!(expected == space.valuation_cone)) flag("valuation cone / spherical roots mismatch");
  }
  if (space.spherical_roots.empty() && !(space.valuation_cone == Cone::full_space(space.rank)))
    flag("no spherical roots but valuation cone is a proper subset (horospherical mismatch)");

  if (space.root_data) {
    const RootData& rd = *space.root_data;
    std::size_t ns = rd.simple_root_restrictions.size();
    if (rd.cartan.rows() != ns || rd.cartan.cols() != ns || rd.coroot_restrictions.size() != ns)
      flag("root data: inconsistent number of simple roots");
    for (std::size_t i = 0; i < std::min(rd.cartan.rows(), rd.cartan.cols()); ++i) {
      if (rd.cartan.at(i, i) != 2) flag("root data: Cartan diagonal entry differs from 2");
    }
    for (const IVec& gamma : rd.positive_roots) {
      if (gamma.size() != ns) flag("root data: positive root of wrong length");
      for (const Int& c : gamma) {
        if (c < 0) flag("root data: negative coefficient in a positive root");
      }
    }
    for (std::size_t i : rd.parabolic_set) {
      if (i >= ns) flag("root data: parabolic set index out of range");
    }
  }

  std::vector<std::string> seen;
  for (const Color& d : space.colors) {
    std::string at = "color " + d.name + ": ";
    if (std::find(seen.begin(), seen.end(), d.name) != seen.end()) flag(at + "duplicate name");
    seen.push_back(d.name);
    if (d.sigma.size() != space.rank) {
      flag(at + "sigma of wrong dimension");
      continue;
    }
    if (is_zero(d.sigma)) flag(at + "sigma is zero");
    if (d.a_d < 1) flag(at + "coefficient below 1");
    bool small = d.ctype == ColorType::A || d.ctype == ColorType::TwoA;
    if (small && d.a_d != 1) flag(at + "type " + to_string(d.ctype) + " requires coefficient 1");
    if (d.ctype == ColorType::B && d.a_d < 2) flag(at + "type b requires coefficient at least 2");
    if (d.a_d == 1 && space.valuation_cone.ambient_dim() == space.rank &&
        space.valuation_cone.contains(d.sigma))
      flag(at + "coefficient-1 color lies inside the valuation cone");

    if (space.root_data && d.moving_root) {
      const RootData& rd = *space.root_data;
      std::size_t a = *d.moving_root;
      if (a >= rd.simple_root_restrictions.size()) {
        flag(at + "moving root index out of range");
        continue;
      }
      try {
        ColorType derived = classify_color_type(a, space);
        if (derived != d.ctype)
          flag(at + "declared type " + to_string(d.ctype) + " but root data gives " +
               to_string(derived));
        Int coeff = color_coefficient(derived, a, rd);
        if (coeff != d.a_d)
          flag(at + "declared coefficient " + d.a_d.str() + " but root data gives " + coeff.str());
      } catch (const Error& e) {
        flag(at + e.what());
      }
      const IVec& coroot = rd.coroot_restrictions[a];
      const IVec& root = rd.simple_root_restrictions[a];
      if (d.ctype == ColorType::B && d.sigma != coroot)
        flag(at + "type b sigma differs from the restricted coroot");
      if (d.ctype == ColorType::TwoA) {
        IVec twice = d.sigma;
        for (Int& c : twice) c *= 2;
        if (twice != coroot) flag(at + "type 2a sigma differs from half the restricted coroot");
      }
      if ((d.ctype == ColorType::A || d.ctype == ColorType::TwoA) && root.size() == d.sigma.size() &&
          dot(root, d.sigma) != 1)
        flag(at + "pairing of the moving root with sigma differs from 1");
    }
  }
  return out;
}

}  // namespace sphersing
