#include "sphersing/cone.hpp"

#include "sphersing/lattice.hpp"
#include "sphersing/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace sphersing {

namespace {

struct DDRay {
  QVec v;
  std::set<std::size_t> tight;  // indices of processed inequalities tight here
};

struct DDResult {
  std::vector<QVec> lineality;
  std::vector<DDRay> rays;
};

// Double description with lineality handling.  Equalities are processed
// first, while no proper rays exist yet, so they only pivot the lineality
// basis down.
DDResult double_description(std::size_t dim, const std::vector<IVec>& ineqs,
                            const std::vector<IVec>& eqs) {
  DDResult dd;
  for (std::size_t i = 0; i < dim; ++i) {
    QVec e(dim, Rat(0));
    e[i] = 1;
    dd.lineality.push_back(std::move(e));
  }

  QVec pivot_out;
  auto pivot_lineality = [&](const QVec& a) -> bool {
    for (std::size_t k = 0; k < dd.lineality.size(); ++k) {
      Rat ak = dot(a, dd.lineality[k]);
      if (ak == 0) continue;
      QVec l0 = dd.lineality[k];
      if (ak < 0) {
        for (Rat& c : l0) c = -c;
        ak = -ak;
      }
      dd.lineality.erase(dd.lineality.begin() + static_cast<std::ptrdiff_t>(k));
      for (QVec& l : dd.lineality) {
        Rat f = dot(a, l) / ak;
        for (std::size_t j = 0; j < dim; ++j) l[j] -= f * l0[j];
      }
      for (DDRay& r : dd.rays) {
        Rat f = dot(a, r.v) / ak;
        for (std::size_t j = 0; j < dim; ++j) r.v[j] -= f * l0[j];
      }
      // caller decides what to do with l0
      pivot_out = l0;
      return true;
    }
    return false;
  };

  for (const IVec& e : eqs) {
    QVec a = to_qvec(e);
    if (pivot_lineality(a)) continue;  // the pivoted line is simply dropped
    // No lineality component and no rays yet: the equality already holds.
  }

  std::size_t processed = 0;
  for (const IVec& ai : ineqs) {
    QVec a = to_qvec(ai);
    std::size_t t = processed++;
    if (pivot_lineality(a)) {
      // Every earlier inequality vanished on the old lineality space, so it
      // is tight at the newly created ray.
      DDRay nr;
      nr.v = pivot_out;
      for (std::size_t s = 0; s < t; ++s) nr.tight.insert(s);
      for (DDRay& r : dd.rays) r.tight.insert(t);  // projected to a.r == 0
      dd.rays.push_back(std::move(nr));
      continue;
    }
    std::vector<DDRay> pos, zero, neg;
    for (DDRay& r : dd.rays) {
      Rat s = dot(a, r.v);
      if (s > 0) {
        pos.push_back(std::move(r));
      } else if (s < 0) {
        neg.push_back(std::move(r));
      } else {
        r.tight.insert(t);
        zero.push_back(std::move(r));
      }
    }
    if (neg.empty()) {
      dd.rays.clear();
      for (auto& r : pos) dd.rays.push_back(std::move(r));
      for (auto& r : zero) dd.rays.push_back(std::move(r));
      continue;
    }
    auto adjacent = [&](const DDRay& p, const DDRay& n) {
      std::set<std::size_t> common;
      std::set_intersection(p.tight.begin(), p.tight.end(), n.tight.begin(), n.tight.end(),
                            std::inserter(common, common.begin()));
      auto dominated_by = [&](const DDRay& r) {
        if (&r == &p || &r == &n) return false;
        return std::includes(r.tight.begin(), r.tight.end(), common.begin(), common.end());
      };
      for (const DDRay& r : pos) {
        if (dominated_by(r)) return false;
      }
      for (const DDRay& r : zero) {
        if (dominated_by(r)) return false;
      }
      for (const DDRay& r : neg) {
        if (dominated_by(r)) return false;
      }
      return true;
    };
    std::vector<DDRay> next;
    for (auto& r : pos) next.push_back(r);
    for (auto& r : zero) next.push_back(std::move(r));
    for (const DDRay& p : pos) {
      for (const DDRay& n : neg) {
        if (!adjacent(p, n)) continue;
        Rat sp = dot(a, p.v), sn = dot(a, n.v);
        DDRay combo;
        combo.v.resize(dim);
        for (std::size_t j = 0; j < dim; ++j) combo.v[j] = sp * n.v[j] - sn * p.v[j];
        std::set_intersection(p.tight.begin(), p.tight.end(), n.tight.begin(), n.tight.end(),
                              std::inserter(combo.tight, combo.tight.begin()));
        combo.tight.insert(t);
        next.push_back(std::move(combo));
      }
    }
    dd.rays = std::move(next);
  }
  return dd;
}

std::vector<IVec> canonicalize_family(const std::vector<QVec>& vecs,
                                      const std::vector<QVec>& modulo_rref,
                                      const std::vector<std::size_t>& pivots) {
  std::set<IVec> out;
  for (const QVec& v : vecs) {
    QVec red = reduce_mod_span(v, modulo_rref, pivots);
    IVec p = scale_to_primitive(red);
    if (!is_zero(p)) out.insert(std::move(p));
  }
  return {out.begin(), out.end()};
}

// Canonical integer basis of a rational row space: RREF rows scaled primitive.
std::vector<IVec> canonical_basis(const std::vector<QVec>& vecs, std::vector<QVec>* rref_out,
                                  std::vector<std::size_t>* pivots_out) {
  std::vector<QVec> work = vecs;
  std::vector<std::size_t> pivots = rref(work);
  std::vector<IVec> out;
  for (const QVec& r : work) out.push_back(scale_to_primitive(r));
  if (rref_out) *rref_out = work;
  if (pivots_out) *pivots_out = pivots;
  return out;
}

}  // namespace

Cone Cone::from_inequalities(std::size_t ambient_dim, const std::vector<IVec>& inequalities,
                             const std::vector<IVec>& equations) {
  Cone c;
  c.ambient_dim_ = ambient_dim;
  DDResult primal = double_description(ambient_dim, inequalities, equations);

  std::vector<QVec> lin_rref;
  std::vector<std::size_t> lin_pivots;
  c.lineality_ = canonical_basis(primal.lineality, &lin_rref, &lin_pivots);
  {
    std::vector<QVec> rayvecs;
    for (const DDRay& r : primal.rays) rayvecs.push_back(r.v);
    c.rays_ = canonicalize_family(rayvecs, lin_rref, lin_pivots);
  }

  // Dual pass for the minimal H-representation.
  std::vector<IVec> dual_ineqs = c.rays_;
  std::vector<IVec> dual_eqs = c.lineality_;
  DDResult dual = double_description(ambient_dim, dual_ineqs, dual_eqs);
  std::vector<QVec> eq_rref;
  std::vector<std::size_t> eq_pivots;
  c.equations_ = canonical_basis(dual.lineality, &eq_rref, &eq_pivots);
  {
    std::vector<QVec> fvecs;
    for (const DDRay& r : dual.rays) fvecs.push_back(r.v);
    c.facets_ = canonicalize_family(fvecs, eq_rref, eq_pivots);
  }
  return c;
}

Cone Cone::from_generators(std::size_t ambient_dim, const std::vector<IVec>& generators) {
  std::vector<IVec> gens;
  for (const IVec& g : generators) {
    if (g.size() != ambient_dim) throw Error("DimensionMismatch", "generator of wrong length");
    if (!is_zero(g)) gens.push_back(primitive_of(g));
  }
  // H-representation via the dual cone {y : y.g >= 0}.
  DDResult dual = double_description(ambient_dim, gens, {});
  std::vector<QVec> eq_rref;
  std::vector<std::size_t> eq_pivots;
  std::vector<IVec> equations = canonical_basis(dual.lineality, &eq_rref, &eq_pivots);
  std::vector<QVec> fvecs;
  for (const DDRay& r : dual.rays) fvecs.push_back(r.v);
  std::vector<IVec> facets = canonicalize_family(fvecs, eq_rref, eq_pivots);
  return from_inequalities(ambient_dim, facets, equations);
}

Cone Cone::full_space(std::size_t ambient_dim) { return from_inequalities(ambient_dim, {}, {}); }

Cone Cone::zero(std::size_t ambient_dim) {
  std::vector<IVec> eqs;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    IVec e(ambient_dim, Int(0));
    e[i] = 1;
    eqs.push_back(std::move(e));
  }
  return from_inequalities(ambient_dim, {}, eqs);
}

bool Cone::contains(const QVec& x) const {
  for (const IVec& e : equations_) {
    if (dot(to_qvec(e), x) != 0) return false;
  }
  for (const IVec& f : facets_) {
    if (dot(to_qvec(f), x) < 0) return false;
  }
  return true;
}

bool Cone::relint_contains(const QVec& x) const {
  for (const IVec& e : equations_) {
    if (dot(to_qvec(e), x) != 0) return false;
  }
  for (const IVec& f : facets_) {
    if (dot(to_qvec(f), x) <= 0) return false;
  }
  return true;
}

bool Cone::contains_cone(const Cone& other) const {
  for (const IVec& r : other.rays_) {
    if (!contains(to_qvec(r))) return false;
  }
  for (const IVec& l : other.lineality_) {
    QVec q = to_qvec(l);
    if (!contains(q)) return false;
    for (Rat& c : q) c = -c;
    if (!contains(q)) return false;
  }
  return true;
}

std::vector<Cone> Cone::facets() const {
  std::vector<Cone> out;
  for (const IVec& f : facets_) {
    std::vector<IVec> eqs = equations_;
    eqs.push_back(f);
    out.push_back(from_inequalities(ambient_dim_, facets_, eqs));
  }
  return out;
}

std::vector<Cone> Cone::faces() const {
  if (!is_pointed()) throw Error("NotPointed", "face lattice of a cone with a line");
  std::map<std::string, Cone> seen;
  std::vector<Cone> work{*this};
  seen.emplace(canonical_key(), *this);
  while (!work.empty()) {
    Cone c = std::move(work.back());
    work.pop_back();
    for (Cone& f : c.facets()) {
      std::string key = f.canonical_key();
      if (seen.emplace(key, f).second) work.push_back(std::move(f));
    }
  }
  std::vector<Cone> out;
  for (auto& [key, c] : seen) out.push_back(std::move(c));
  return out;
}

Cone Cone::dual() const { return from_inequalities(ambient_dim_, rays_, lineality_); }

Cone Cone::intersect(const Cone& other) const {
  std::vector<IVec> ineqs = facets_;
  ineqs.insert(ineqs.end(), other.facets_.begin(), other.facets_.end());
  std::vector<IVec> eqs = equations_;
  eqs.insert(eqs.end(), other.equations_.begin(), other.equations_.end());
  return from_inequalities(ambient_dim_, ineqs, eqs);
}

Cone Cone::intersect_halfspace(const IVec& normal) const {
  std::vector<IVec> ineqs = facets_;
  ineqs.push_back(normal);
  return from_inequalities(ambient_dim_, ineqs, equations_);
}

Cone Cone::intersect_hyperplane(const IVec& normal) const {
  std::vector<IVec> eqs = equations_;
  eqs.push_back(normal);
  return from_inequalities(ambient_dim_, facets_, eqs);
}

QVec Cone::relint_point() const {
  QVec p(ambient_dim_, Rat(0));
  if (!rays_.empty()) {
    for (const IVec& r : rays_) {
      for (std::size_t i = 0; i < ambient_dim_; ++i) p[i] += r[i];
    }
    return p;
  }
  if (!lineality_.empty()) return to_qvec(lineality_[0]);
  return p;
}

std::string Cone::canonical_key() const {
  std::ostringstream os;
  os << ambient_dim_ << "|E";
  for (const IVec& e : equations_) os << to_string(e);
  os << "|F";
  for (const IVec& f : facets_) os << to_string(f);
  return os.str();
}

namespace {

int default_cover_depth() {
  if (const char* env = std::getenv("SPHERSING_MAX_DEPTH")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 24;
}

bool covers_rec(const std::vector<Cone>& cones, const Cone& cell, QVec* witness, int depth,
                int cap) {
  if (cell.dim() == 0) return true;
  for (const Cone& c : cones) {
    if (c.contains_cone(cell)) return true;
  }
  if (depth >= cap) throw Error("CoverageUndecided", "recursion cap reached");

  std::vector<QVec> gens;
  for (const IVec& r : cell.rays()) gens.push_back(to_qvec(r));
  for (const IVec& l : cell.lineality()) {
    gens.push_back(to_qvec(l));
    QVec neg = to_qvec(l);
    for (Rat& c : neg) c = -c;
    gens.push_back(std::move(neg));
  }
  auto splits = [&](const IVec& n) {
    bool pos = false, neg = false;
    for (const QVec& g : gens) {
      Rat s = dot(to_qvec(n), g);
      if (s > 0) pos = true;
      if (s < 0) neg = true;
    }
    return pos && neg;
  };
  for (const Cone& c : cones) {
    std::vector<IVec> planes = c.facet_normals();
    planes.insert(planes.end(), c.span_equations().begin(), c.span_equations().end());
    for (const IVec& n : planes) {
      if (!splits(n)) continue;
      IVec nn(n.size());
      for (std::size_t i = 0; i < n.size(); ++i) nn[i] = -n[i];
      return covers_rec(cones, cell.intersect_halfspace(n), witness, depth + 1, cap) &&
             covers_rec(cones, cell.intersect_halfspace(nn), witness, depth + 1, cap);
    }
  }
  // No cone contains the cell and no hyperplane separates within it: the
  // cell's relative interior avoids every cone.
  if (witness) *witness = cell.relint_point();
  return false;
}

}  // namespace

bool covers(const std::vector<Cone>& cones, const Cone& v, QVec* witness, int max_depth) {
  int cap = max_depth > 0 ? max_depth : default_cover_depth();
  return covers_rec(cones, v, witness, 0, cap);
}

std::vector<IVec> truncated_lattice_points(const Cone& c, const QVec& h) {
  if (c.contains_line()) throw Error("UnboundedTruncation", "cone contains a line");
  for (const IVec& r : c.rays()) {
    if (dot(h, r) <= 0) {
      throw Error("UnboundedTruncation", "h not strictly positive on ray " + to_string(r));
    }
  }
  std::size_t n = c.ambient_dim();
  // The polytope {x in C : h(x) <= 1} is conv(0, ray/h(ray)); its bounding
  // box bounds the search.
  std::vector<Rat> lo(n, Rat(0)), hi(n, Rat(0));
  for (const IVec& r : c.rays()) {
    Rat hr = dot(h, r);
    for (std::size_t i = 0; i < n; ++i) {
      Rat v = Rat(r[i]) / hr;
      lo[i] = std::min(lo[i], v);
      hi[i] = std::max(hi[i], v);
    }
  }
  std::vector<Int> lob(n), hib(n);
  for (std::size_t i = 0; i < n; ++i) {
    lob[i] = ceil_rat(lo[i]);
    hib[i] = floor_rat(hi[i]);
  }
  std::vector<IVec> out;
  IVec x(n);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      if (is_zero(x)) return;
      QVec q = to_qvec(x);
      if (!c.contains(q)) return;
      Rat hv = dot(h, x);
      if (hv > 0 && hv <= 1) out.push_back(x);
      return;
    }
    for (Int v = lob[i]; v <= hib[i]; ++v) {
      x[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sphersing
