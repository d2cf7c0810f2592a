#include "sphersing/colored_fan.hpp"

#include "sphersing/lattice.hpp"
#include "sphersing/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sphersing {

namespace {

const Color& color_ref(const SphericalSpace& space, const std::string& name) {
  const Color* c = space.find_color(name);
  if (!c) throw Error("UnknownColor", "color " + name + " is not declared on the space");
  return *c;
}

std::vector<std::string> sorted_unique(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

bool relint_meets(const Cone& c, const Cone& v) {
  Cone k = c.intersect(v);
  return c.relint_contains(k.relint_point());
}

std::vector<ColoredCone> colored_faces(const ColoredCone& cc, const SphericalSpace& space) {
  std::vector<ColoredCone> out;
  for (const Cone& f : cc.cone.faces()) {
    if (!relint_meets(f, space.valuation_cone)) continue;
    std::vector<std::string> sub;
    for (const std::string& name : cc.colors) {
      if (f.contains(color_ref(space, name).sigma)) sub.push_back(name);
    }
    out.push_back(ColoredCone{f, sorted_unique(std::move(sub))});
  }
  return out;
}

std::vector<std::string> validate_fan(const ColoredFan& fan) {
  std::vector<std::string> out;
  if (!fan.space) return {"fan has no spherical space attached"};
  const SphericalSpace& sp = *fan.space;
  const Cone& v = sp.valuation_cone;

  std::vector<ColoredCone> closure;
  for (std::size_t k = 0; k < fan.maximal_cones.size(); ++k) {
    const ColoredCone& cc = fan.maximal_cones[k];
    std::string at = "cone " + std::to_string(k) + ": ";
    if (cc.cone.ambient_dim() != sp.rank) {
      out.push_back(at + "ambient dimension differs from the space rank");
      continue;
    }
    if (cc.cone.contains_line()) {
      out.push_back(at + "cone contains a line");
      continue;
    }
    bool colors_ok = true;
    for (const std::string& name : cc.colors) {
      const Color* d = sp.find_color(name);
      if (!d) {
        out.push_back(at + "unknown color " + name);
        colors_ok = false;
        continue;
      }
      if (is_zero(d->sigma)) {
        out.push_back(at + "color " + name + " has zero image");
        colors_ok = false;
      } else if (!cc.cone.contains(d->sigma)) {
        out.push_back(at + "image of color " + name + " lies outside the cone");
        colors_ok = false;
      }
    }
    if (!relint_meets(cc.cone, v))
      out.push_back(at + "relative interior misses the valuation cone");
    if (colors_ok) {
      for (const IVec& r : cc.cone.rays()) {
        bool generated = v.contains(r);
        for (const std::string& name : cc.colors) {
          if (generated) break;
          if (primitive_of(color_ref(sp, name).sigma) == r) generated = true;
        }
        if (!generated)
          out.push_back(at + "ray " + to_string(r) +
                        " is neither in the valuation cone nor a color image");
      }
      for (ColoredCone& f : colored_faces(cc, sp)) closure.push_back(std::move(f));
    }
  }

  // Deduplicate identical colored cones, then apply the at-most-one
  // relative-interior condition pairwise on the face closure.
  std::map<std::string, std::size_t> first_seen;
  std::vector<ColoredCone> distinct;
  for (ColoredCone& cc : closure) {
    std::string key = cc.cone.canonical_key() + "|";
    for (const std::string& n : cc.colors) key += n + ",";
    if (first_seen.emplace(key, distinct.size()).second) distinct.push_back(std::move(cc));
  }
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    for (std::size_t j = i + 1; j < distinct.size(); ++j) {
      const ColoredCone& a = distinct[i];
      const ColoredCone& b = distinct[j];
      if (a.cone == b.cone) {
        out.push_back("cones " + a.cone.canonical_key() +
                      " carry two distinct color sets in the face closure");
        continue;
      }
      Cone k = a.cone.intersect(b.cone).intersect(v);
      QVec p = k.relint_point();
      if (!is_zero(p) && a.cone.relint_contains(p) && b.cone.relint_contains(p))
        out.push_back("relative interiors of two colored cones meet inside the valuation cone at " +
                      to_string(p));
    }
  }
  return out;
}

bool is_complete(const ColoredFan& fan) {
  std::vector<Cone> cones;
  for (const ColoredCone& cc : fan.maximal_cones) cones.push_back(cc.cone);
  return covers(cones, fan.space->valuation_cone);
}

std::vector<IVec> fan_rays(const ColoredFan& fan) {
  std::set<IVec> rays;
  for (const ColoredCone& cc : fan.maximal_cones) {
    for (const IVec& r : cc.cone.rays()) rays.insert(r);
  }
  return {rays.begin(), rays.end()};
}

std::vector<IVec> colorless_rays(const ColoredFan& fan) {
  std::set<IVec> colored;
  for (const ColoredCone& cc : fan.maximal_cones) {
    for (const std::string& name : cc.colors)
      colored.insert(primitive_of(color_ref(*fan.space, name).sigma));
  }
  std::vector<IVec> out;
  for (const IVec& r : fan_rays(fan)) {
    if (!colored.count(r)) out.push_back(r);
  }
  return out;
}

std::vector<std::string> fan_colors(const ColoredFan& fan) {
  std::vector<std::string> all;
  for (const ColoredCone& cc : fan.maximal_cones)
    all.insert(all.end(), cc.colors.begin(), cc.colors.end());
  return sorted_unique(std::move(all));
}

std::optional<std::size_t> find_containing_cone(const ColoredFan& fan, const QVec& x) {
  for (std::size_t k = 0; k < fan.maximal_cones.size(); ++k) {
    if (fan.maximal_cones[k].cone.relint_contains(x)) return k;
  }
  for (std::size_t k = 0; k < fan.maximal_cones.size(); ++k) {
    if (fan.maximal_cones[k].cone.contains(x)) return k;
  }
  return std::nullopt;
}

std::optional<MorphismWitness> exists_morphism(const ColoredFan& src, const ColoredFan& dst) {
  MorphismWitness w;
  for (const ColoredCone& sc : src.maximal_cones) {
    std::optional<std::size_t> hit;
    for (std::size_t k = 0; k < dst.maximal_cones.size() && !hit; ++k) {
      const ColoredCone& dc = dst.maximal_cones[k];
      if (!dc.cone.contains_cone(sc.cone)) continue;
      if (std::includes(dc.colors.begin(), dc.colors.end(), sc.colors.begin(), sc.colors.end()))
        hit = k;
    }
    if (!hit) return std::nullopt;
    w.assignment.push_back(*hit);
  }
  return w;
}

namespace {

IVec normalized_hyperplane(const IVec& h) {
  IVec n = primitive_of(h);
  for (const Int& c : n) {
    if (c > 0) return n;
    if (c < 0) break;
  }
  for (Int& c : n) c = -c;
  return n;
}

void dedupe_cones(std::vector<Cone>& cones) {
  std::sort(cones.begin(), cones.end(),
            [](const Cone& a, const Cone& b) { return a.canonical_key() < b.canonical_key(); });
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
}

/// Split a cone into the cells of the hyperplane arrangement it meets,
/// keeping only pieces of the cone's own dimension.
std::vector<Cone> arrangement_cells(const Cone& piece, const std::vector<IVec>& hyperplanes) {
  std::vector<Cone> cur = {piece};
  for (const IVec& h : hyperplanes) {
    IVec neg = h;
    for (Int& c : neg) c = -c;
    std::vector<Cone> next;
    for (const Cone& c : cur) {
      Cone pos = c.intersect_halfspace(h);
      if (pos == c) {
        next.push_back(c);
        continue;
      }
      Cone mns = c.intersect_halfspace(neg);
      if (mns == c) {
        next.push_back(c);
        continue;
      }
      if (pos.dim() == c.dim()) next.push_back(pos);
      if (mns.dim() == c.dim()) next.push_back(mns);
    }
    cur = std::move(next);
  }
  return cur;
}

/// Pulling triangulation with a globally fixed ray order: always cone the
/// smallest ray over the triangulated facets not containing it.
void triangulate_into(const Cone& c, std::vector<Cone>& out) {
  std::size_t nrays = c.rays().size();
  if (nrays <= 1 || nrays == c.dim()) {
    out.push_back(c);
    return;
  }
  IVec v = *std::min_element(c.rays().begin(), c.rays().end());
  for (const Cone& f : c.facets()) {
    if (f.contains(v)) continue;
    std::vector<Cone> sub;
    triangulate_into(f, sub);
    for (const Cone& s : sub) {
      std::vector<IVec> gens = s.rays();
      gens.push_back(v);
      out.push_back(Cone::from_generators(c.ambient_dim(), gens));
    }
  }
}

Int multiplicity(const Cone& c) {
  if (c.rays().empty()) return 1;
  return saturation_index(c.rays());
}

/// Nonzero lattice points of the half-open parallelepiped of the rays of a
/// simplicial cone, with their barycentric coordinates.
struct BoxPoint {
  IVec point;
  QVec coords;
};

std::vector<BoxPoint> parallelepiped_points(const Cone& c) {
  const std::vector<IVec>& rays = c.rays();
  std::size_t dim = c.ambient_dim(), k = rays.size();
  std::vector<Int> lo(dim, 0), hi(dim, 0);
  for (std::size_t j = 0; j < dim; ++j) {
    for (const IVec& r : rays) {
      if (r[j] < 0) lo[j] += r[j];
      else hi[j] += r[j];
    }
  }
  std::vector<QVec> coord_rows(dim, QVec(k));
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t i = 0; i < k; ++i) coord_rows[j][i] = Rat(rays[i][j]);
  }
  std::vector<BoxPoint> out;
  IVec x(dim);
  auto scan = [&](auto&& self, std::size_t j) -> void {
    if (j == dim) {
      if (is_zero(x)) return;
      std::vector<Rat> rhs;
      for (std::size_t jj = 0; jj < dim; ++jj) rhs.emplace_back(x[jj]);
      std::optional<QVec> t = solve_linear(coord_rows, rhs, k);
      if (!t) return;
      // Independent rays make the solution exact; re-check and bound it.
      for (std::size_t jj = 0; jj < dim; ++jj) {
        if (dot(coord_rows[jj], *t) != rhs[jj]) return;
      }
      for (const Rat& ti : *t) {
        if (ti < 0 || ti >= 1) return;
      }
      out.push_back(BoxPoint{x, *t});
      return;
    }
    for (Int c0 = lo[j]; c0 <= hi[j]; ++c0) {
      x[j] = c0;
      self(self, j + 1);
    }
  };
  scan(scan, 0);
  return out;
}

}  // namespace

ColoredFan decolor_and_resolve(const ColoredFan& fan) {
  const SphericalSpace& sp = *fan.space;
  std::size_t dim = sp.rank;

  std::vector<Cone> pieces;
  for (const ColoredCone& cc : fan.maximal_cones) pieces.push_back(cc.cone.intersect(sp.valuation_cone));

  std::vector<IVec> hyps;
  for (const Cone& k : pieces) {
    for (const IVec& h : k.facet_normals()) hyps.push_back(normalized_hyperplane(h));
    for (const IVec& h : k.span_equations()) hyps.push_back(normalized_hyperplane(h));
  }
  std::sort(hyps.begin(), hyps.end());
  hyps.erase(std::unique(hyps.begin(), hyps.end()), hyps.end());

  std::vector<Cone> cells;
  for (const Cone& k : pieces) {
    for (Cone& c : arrangement_cells(k, hyps)) cells.push_back(std::move(c));
  }
  dedupe_cones(cells);

  std::vector<Cone> work;
  for (const Cone& c : cells) triangulate_into(c, work);
  dedupe_cones(work);

  // Stellar subdivision until every cone is unimodular.  Subdividing at a
  // lattice point of the worst cone's parallelepiped never increases the
  // maximal multiplicity, so this terminates.
  for (;;) {
    Int worst = 1;
    const Cone* target = nullptr;
    for (const Cone& c : work) {
      Int m = multiplicity(c);
      if (m > worst || (m == worst && m > 1 && target &&
                        c.canonical_key() < target->canonical_key())) {
        worst = m;
        target = &c;
      }
    }
    if (!target) break;

    std::vector<BoxPoint> box = parallelepiped_points(*target);
    if (box.empty())
      throw Error("InternalError", "non-unimodular cone with empty parallelepiped");
    const BoxPoint* best = nullptr;
    Rat best_sum = 0;
    for (const BoxPoint& bp : box) {
      Rat s = 0;
      for (const Rat& t : bp.coords) s += t;
      if (!best || s < best_sum || (s == best_sum && bp.point < best->point)) {
        best = &bp;
        best_sum = s;
      }
    }
    IVec w = best->point;

    std::vector<Cone> next;
    for (const Cone& c : work) {
      if (!c.contains(w)) {
        next.push_back(c);
        continue;
      }
      const std::vector<IVec>& rays = c.rays();
      std::size_t k = rays.size();
      std::vector<QVec> rows(dim, QVec(k));
      std::vector<Rat> rhs(dim);
      for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t i = 0; i < k; ++i) rows[j][i] = Rat(rays[i][j]);
        rhs[j] = Rat(w[j]);
      }
      std::optional<QVec> t = solve_linear(rows, rhs, k);
      if (!t) throw Error("InternalError", "subdivision point outside the cone span");
      bool replaced = false;
      for (std::size_t i = 0; i < k; ++i) {
        if ((*t)[i] == 0) continue;
        replaced = true;
        std::vector<IVec> gens;
        for (std::size_t j2 = 0; j2 < k; ++j2) {
          if (j2 != i) gens.push_back(rays[j2]);
        }
        gens.push_back(w);
        next.push_back(Cone::from_generators(dim, gens));
      }
      if (!replaced) next.push_back(c);
    }
    work = std::move(next);
    dedupe_cones(work);
  }

  // Keep maximal cones only.
  std::vector<Cone> maximal;
  std::stable_sort(work.begin(), work.end(),
                   [](const Cone& a, const Cone& b) { return a.dim() > b.dim(); });
  for (const Cone& c : work) {
    bool inside = std::any_of(maximal.begin(), maximal.end(), [&](const Cone& m) {
      return !(m == c) && m.contains_cone(c);
    });
    if (!inside) maximal.push_back(c);
  }
  std::sort(maximal.begin(), maximal.end(),
            [](const Cone& a, const Cone& b) { return a.canonical_key() < b.canonical_key(); });

  ColoredFan out;
  out.space = fan.space;
  for (Cone& c : maximal) out.maximal_cones.push_back(ColoredCone{std::move(c), {}});
  if (out.maximal_cones.empty())
    out.maximal_cones.push_back(ColoredCone{Cone::zero(dim), {}});
  return out;
}

}  // namespace sphersing
