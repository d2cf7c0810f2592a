#include "sphersing/singularities.hpp"

#include "sphersing/feasibility.hpp"
#include "sphersing/lattice.hpp"
#include "sphersing/linalg.hpp"

#include <algorithm>
#include <set>

namespace sphersing {

std::string to_string(Tri t) {
  switch (t) {
    case Tri::True:
      return "true";
    case Tri::False:
      return "false";
    case Tri::NotApplicable:
      return "not-applicable";
  }
  return "?";
}

std::string to_string(SmoothStatus s) {
  switch (s) {
    case SmoothStatus::True:
      return "true";
    case SmoothStatus::False:
      return "false";
    case SmoothStatus::Undetermined:
      return "undetermined";
  }
  return "?";
}

namespace {

std::set<IVec> colorless_set(const ColoredFan& fan) {
  std::vector<IVec> cls = colorless_rays(fan);
  return {cls.begin(), cls.end()};
}

/// Colorless ray primitives of the cone followed by the color images of F.
std::vector<IVec> cone_family(const ColoredFan& fan, const ColoredCone& cc,
                              const std::set<IVec>& colorless) {
  std::vector<IVec> family;
  for (const IVec& r : cc.cone.rays()) {
    if (colorless.count(r)) family.push_back(r);
  }
  for (const std::string& name : cc.colors) family.push_back(fan.space->find_color(name)->sigma);
  return family;
}

}  // namespace

FactorialityResult factoriality(const ColoredFan& fan) {
  std::set<IVec> colorless = colorless_set(fan);
  bool all_saturated = true;
  std::string completions;
  for (std::size_t k = 0; k < fan.maximal_cones.size(); ++k) {
    const ColoredCone& cc = fan.maximal_cones[k];
    std::string at = "cone " + std::to_string(k) + ": ";
    for (std::size_t i = 0; i < cc.colors.size(); ++i) {
      for (std::size_t j = i + 1; j < cc.colors.size(); ++j) {
        if (fan.space->find_color(cc.colors[i])->sigma == fan.space->find_color(cc.colors[j])->sigma)
          return {FactorialityVerdict::Neither,
                  at + "colors " + cc.colors[i] + " and " + cc.colors[j] + " share their image"};
      }
    }
    std::vector<IVec> family = cone_family(fan, cc, colorless);
    if (family.empty()) continue;
    if (rank_of(family) != family.size())
      return {FactorialityVerdict::Neither, at + "ray and color-image family is linearly dependent"};
    Int index = saturation_index(family);
    if (index != 1) {
      all_saturated = false;
      completions = at + "sublattice of index " + index.str();
    } else {
      std::vector<IVec> ext = extend_to_basis(family);
      completions += at + "basis completion";
      for (const IVec& v : ext) completions += " " + to_string(v);
      completions += "; ";
    }
  }
  if (all_saturated) return {FactorialityVerdict::LocallyFactorial, completions};
  return {FactorialityVerdict::QFactorial, completions};
}

GorensteinResult gorenstein(const ColoredFan& fan) {
  BWeilDivisor ak = anticanonical(fan);
  auto integral = cartier_data(fan, ak, true);
  if (std::holds_alternative<PiecewiseLinearFn>(integral))
    return {GorensteinVerdict::Gorenstein, std::get<PiecewiseLinearFn>(integral).chi, ""};
  auto rational = cartier_data(fan, ak, false);
  if (std::holds_alternative<PiecewiseLinearFn>(rational)) {
    CartierFailure f = std::get<CartierFailure>(integral);
    return {GorensteinVerdict::QGorenstein, std::get<PiecewiseLinearFn>(rational).chi,
            "cone " + std::to_string(f.cone_index) + ": " + f.reason};
  }
  CartierFailure f = std::get<CartierFailure>(rational);
  return {GorensteinVerdict::Neither, {},
          "cone " + std::to_string(f.cone_index) + ": " + f.reason};
}

TermResult terminal_canonical(const ColoredFan& fan) {
  GorensteinResult g = gorenstein(fan);
  if (g.verdict == GorensteinVerdict::Neither)
    throw Error("NotQGorenstein", "anticanonical divisor is not Q-Cartier");
  std::set<IVec> colorless = colorless_set(fan);

  std::optional<IVec> noncanonical, nonterminal;
  Rat noncanonical_value = 0, nonterminal_value = 0;
  for (std::size_t k = 0; k < fan.maximal_cones.size(); ++k) {
    const ColoredCone& cc = fan.maximal_cones[k];
    Cone domain = cc.cone.intersect(fan.space->valuation_cone);
    for (const IVec& x : truncated_lattice_points(domain, g.m[k])) {
      Rat hx = dot(g.m[k], x);
      if (hx < 1) {
        if (!noncanonical) {
          noncanonical = x;
          noncanonical_value = hx;
        }
      } else if (!colorless.count(x)) {
        if (!nonterminal) {
          nonterminal = x;
          nonterminal_value = hx;
        }
      }
    }
  }
  if (noncanonical) return {TermVerdict::NotCanonical, noncanonical, noncanonical_value};
  if (nonterminal) return {TermVerdict::CanonicalNotTerminal, nonterminal, nonterminal_value};
  return {TermVerdict::Terminal, std::nullopt, 0};
}

std::vector<Discrepancy> discrepancies(const ColoredFan& fan) {
  GorensteinResult g = gorenstein(fan);
  if (g.verdict == GorensteinVerdict::Neither)
    throw Error("NotQGorenstein", "anticanonical divisor is not Q-Cartier");
  std::set<IVec> colorless = colorless_set(fan);
  ColoredFan res = decolor_and_resolve(fan);

  std::vector<Discrepancy> out;
  for (const IVec& rho : fan_rays(res)) {
    if (colorless.count(rho)) continue;
    std::optional<std::size_t> k = find_containing_cone(fan, to_qvec(rho));
    if (!k) throw Error("InternalError", "resolution ray escaped the fan support");
    out.push_back(Discrepancy{rho, dot(g.m[*k], rho) - 1});
  }
  return out;
}

Tri log_terminal(const ColoredFan& fan) {
  if (gorenstein(fan).verdict == GorensteinVerdict::Neither) return Tri::NotApplicable;
  for (const Discrepancy& d : discrepancies(fan)) {
    if (!(d.value > -1))
      throw Error("InternalError",
                  "discrepancy " + to_string(d.ray) + " not above -1 on a spherical variety");
  }
  return Tri::True;
}

bool klt_check(const ColoredFan& fan, const BWeilDivisor& d) {
  for (const auto& [ray, c] : d.stable) {
    if (c < 0) throw Error("NotEffective", "negative coefficient on ray " + to_string(ray));
  }
  for (const auto& [name, c] : d.colors) {
    if (c < 0) throw Error("NotEffective", "negative coefficient on color " + name);
  }

  auto coeff = [](const auto& map, const auto& key) {
    auto it = map.find(key);
    return it == map.end() ? Rat(0) : it->second;
  };
  BWeilDivisor kxd;  // K_X + D
  bool floor_zero = true;
  for (const IVec& r : colorless_rays(fan)) {
    Rat c = coeff(d.stable, r);
    if (c >= 1) floor_zero = false;
    kxd.stable[r] = c - 1;
  }
  for (const Color& col : fan.space->colors) {
    Rat c = coeff(d.colors, col.name);
    if (c >= 1) floor_zero = false;
    kxd.colors[col.name] = c - Rat(col.a_d);
  }

  auto data = cartier_data(fan, kxd, false);
  if (std::holds_alternative<CartierFailure>(data))
    throw Error("NotQCartier", "K_X + D is not Q-Cartier");
  const PiecewiseLinearFn& pl = std::get<PiecewiseLinearFn>(data);

  std::set<IVec> colorless = colorless_set(fan);
  bool exceptional_ok = true;
  ColoredFan res = decolor_and_resolve(fan);
  for (const IVec& rho : fan_rays(res)) {
    if (colorless.count(rho)) continue;
    std::optional<std::size_t> k = find_containing_cone(fan, to_qvec(rho));
    if (!k) throw Error("InternalError", "resolution ray escaped the fan support");
    if (!(-dot(pl.chi[*k], rho) > 0)) exceptional_ok = false;
  }
  bool klt = floor_zero && exceptional_ok;
  if (fan.space->horospherical() && klt != floor_zero)
    throw Error("InternalError", "horospherical klt shortcut disagrees with the resolution");
  return klt;
}

std::optional<BWeilDivisor> find_klt_pair(const ColoredFan& fan) {
  std::size_t rank = fan.space->rank;
  std::vector<IVec> cls = colorless_rays(fan);
  std::set<IVec> colorless(cls.begin(), cls.end());
  std::vector<std::string> used = fan_colors(fan);

  std::size_t ncones = fan.maximal_cones.size();
  std::size_t base_d = ncones * rank;
  std::size_t base_c = base_d + cls.size();
  std::size_t nvars = base_c + used.size();
  auto ray_index = [&](const IVec& r) {
    return base_d + static_cast<std::size_t>(
                        std::find(cls.begin(), cls.end(), r) - cls.begin());
  };
  auto color_index = [&](const std::string& n) {
    return base_c + static_cast<std::size_t>(
                        std::find(used.begin(), used.end(), n) - used.begin());
  };

  LinearSystem sys;
  for (std::size_t k = 0; k < ncones; ++k) {
    const ColoredCone& cc = fan.maximal_cones[k];
    for (const IVec& r : cc.cone.rays()) {
      if (!colorless.count(r)) continue;
      QVec row(nvars, Rat(0));
      for (std::size_t j = 0; j < rank; ++j) row[k * rank + j] = Rat(r[j]);
      row[ray_index(r)] = -1;
      sys.equalities.emplace_back(std::move(row), Rat(-1));
    }
    for (const std::string& name : cc.colors) {
      const Color* col = fan.space->find_color(name);
      QVec row(nvars, Rat(0));
      for (std::size_t j = 0; j < rank; ++j) row[k * rank + j] = Rat(col->sigma[j]);
      row[color_index(name)] = -1;
      sys.equalities.emplace_back(std::move(row), Rat(-col->a_d));
    }
  }
  for (std::size_t v = base_d; v < nvars; ++v) {
    QVec lo(nvars, Rat(0)), hi(nvars, Rat(0));
    lo[v] = -1;
    hi[v] = 1;
    sys.inequalities.push_back(LinearConstraint{std::move(lo), Rat(0), false});  // v >= 0
    sys.inequalities.push_back(LinearConstraint{std::move(hi), Rat(1), true});   // v < 1
  }

  std::optional<QVec> sol = solve_feasibility(sys, nvars);
  if (!sol) return std::nullopt;

  BWeilDivisor d;
  for (std::size_t i = 0; i < cls.size(); ++i) d.stable[cls[i]] = (*sol)[base_d + i];
  for (const Color& col : fan.space->colors) d.colors[col.name] = 0;
  for (std::size_t j = 0; j < used.size(); ++j) d.colors[used[j]] = (*sol)[base_c + j];
  return d;
}

SmoothStatus smooth_status(const ColoredFan& fan) {
  bool locally_factorial = factoriality(fan).verdict == FactorialityVerdict::LocallyFactorial;
  if (fan_colors(fan).empty()) return locally_factorial ? SmoothStatus::True : SmoothStatus::False;
  return locally_factorial ? SmoothStatus::Undetermined : SmoothStatus::False;
}

namespace {

void require_implies(Tri a, Tri b, const std::string& what) {
  if (a == Tri::True && b != Tri::True)
    throw Error("InternalError", "implication breached: " + what);
}

}  // namespace

SingularityReport classify(const ColoredFan& fan) {
  SingularityReport r;
  FactorialityResult fact = factoriality(fan);
  r.locally_factorial = fact.verdict == FactorialityVerdict::LocallyFactorial ? Tri::True : Tri::False;
  r.q_factorial = fact.verdict != FactorialityVerdict::Neither ? Tri::True : Tri::False;
  if (!fact.certificate.empty()) r.certificates["factoriality"] = fact.certificate;

  GorensteinResult gor = gorenstein(fan);
  r.gorenstein = gor.verdict == GorensteinVerdict::Gorenstein ? Tri::True : Tri::False;
  r.q_gorenstein = gor.verdict != GorensteinVerdict::Neither ? Tri::True : Tri::False;
  if (!gor.certificate.empty()) r.certificates["gorenstein"] = gor.certificate;
  if (r.q_gorenstein == Tri::True) {
    std::string ms;
    for (const QVec& m : gor.m) ms += to_string(m) + " ";
    r.certificates["support_covectors"] = ms;

    TermResult tc = terminal_canonical(fan);
    r.terminal = tc.verdict == TermVerdict::Terminal ? Tri::True : Tri::False;
    r.canonical = tc.verdict != TermVerdict::NotCanonical ? Tri::True : Tri::False;
    if (tc.witness)
      r.certificates["terminal_canonical"] =
          "lattice point " + to_string(*tc.witness) + " with value " + to_string(QVec{tc.witness_value});
    r.log_term = log_terminal(fan);
    r.discrepancy_list = discrepancies(fan);
  }
  r.smooth = smooth_status(fan);

  require_implies(r.locally_factorial, r.q_factorial, "locally factorial -> Q-factorial");
  require_implies(r.locally_factorial, r.gorenstein, "locally factorial -> Gorenstein");
  require_implies(r.locally_factorial, r.terminal, "locally factorial -> terminal");
  require_implies(r.gorenstein, r.q_gorenstein, "Gorenstein -> Q-Gorenstein");
  require_implies(r.gorenstein, r.canonical, "Gorenstein -> canonical");
  require_implies(r.q_factorial, r.q_gorenstein, "Q-factorial -> Q-Gorenstein");
  require_implies(r.terminal, r.canonical, "terminal -> canonical");
  require_implies(r.canonical, r.log_term, "canonical -> log terminal");
  require_implies(r.q_gorenstein, r.log_term, "Q-Gorenstein -> log terminal");
  if (r.smooth == SmoothStatus::True) {
    require_implies(Tri::True, r.locally_factorial, "smooth -> locally factorial");
    require_implies(Tri::True, r.terminal, "smooth -> terminal");
  }
  return r;
}

std::string classification_label(const ColoredFan& fan, const SingularityReport& report) {
  if (report.smooth == SmoothStatus::True) return "Smooth";
  if (report.locally_factorial == Tri::True)
    return "Locally factorial (and terminal singularities)";
  if (report.q_gorenstein != Tri::True) {
    return find_klt_pair(fan) ? "Not Q-Gorenstein, there exists klt pairs"
                              : "Not Q-Gorenstein, there exists no klt pair";
  }
  std::string part1 = report.q_factorial == Tri::True
                          ? "Q-factorial"
                          : (report.gorenstein == Tri::True ? "Not Q-factorial" : "Q-Gorenstein");
  std::string part2 = report.gorenstein == Tri::True
                          ? ", Gorenstein"
                          : (part1 == "Q-Gorenstein" ? "" : ", not Gorenstein");
  std::string part3 = report.terminal == Tri::True
                          ? ", terminal singularities"
                          : (report.canonical == Tri::True ? " (and canonical singularities)"
                                                           : " (and log terminal singularities)");
  return part1 + part2 + part3;
}

}  // namespace sphersing
