#include "sphersing/feasibility.hpp"

#include "sphersing/linalg.hpp"

#include <algorithm>
#include <map>

namespace sphersing {

namespace {

struct Cons {
  QVec c;
  Rat r;
  bool strict;
};

void normalize(Cons& cons) {
  Int l = 1, g = 0;
  auto acc = [&](const Rat& x) {
    l = boost::multiprecision::lcm(l, rat_den(x));
    g = boost::multiprecision::gcd(g, rat_num(x));
  };
  for (const Rat& x : cons.c) acc(x);
  acc(cons.r);
  if (g == 0) return;
  Rat f = Rat(l, g);
  if (f < 0) f = -f;
  for (Rat& x : cons.c) x *= f;
  cons.r *= f;
}

/// nullopt on a violated ground constraint; true when the constraint is a
/// tautology to drop; false to keep it.
std::optional<bool> classify_ground(const Cons& cons) {
  if (!is_zero(cons.c)) return false;
  bool ok = cons.strict ? cons.r > 0 : cons.r >= 0;
  if (!ok) return std::nullopt;
  return true;
}

struct Level {
  std::size_t var;
  std::vector<Cons> lowers;  // coefficient on var negative
  std::vector<Cons> uppers;  // coefficient on var positive
};

}  // namespace

std::optional<QVec> solve_feasibility(const LinearSystem& system, std::size_t nvars) {
  // Gaussian elimination on the equalities first.
  std::vector<QVec> eq;
  for (const auto& [c, r] : system.equalities) {
    QVec row = c;
    row.resize(nvars, Rat(0));
    row.push_back(r);
    eq.push_back(std::move(row));
  }
  std::vector<std::size_t> pivots = rref(eq);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == nvars) return std::nullopt;  // 0 = nonzero
  }

  std::vector<bool> is_pivot(nvars, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_vars;
  for (std::size_t j = 0; j < nvars; ++j) {
    if (!is_pivot[j]) free_vars.push_back(j);
  }
  std::size_t m = free_vars.size();
  std::map<std::size_t, std::size_t> free_index;
  for (std::size_t j = 0; j < m; ++j) free_index[free_vars[j]] = j;

  // Substitute the pivot expressions into the inequalities.
  std::vector<Cons> cur;
  for (const LinearConstraint& lc : system.inequalities) {
    QVec full = lc.coeffs;
    full.resize(nvars, Rat(0));
    Cons cons{QVec(m, Rat(0)), lc.rhs, lc.strict};
    for (std::size_t j = 0; j < m; ++j) cons.c[j] = full[free_vars[j]];
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const Rat& cp = full[pivots[i]];
      if (cp == 0) continue;
      cons.r -= cp * eq[i][nvars];
      for (std::size_t j = 0; j < m; ++j) cons.c[j] -= cp * eq[i][free_vars[j]];
    }
    normalize(cons);
    std::optional<bool> ground = classify_ground(cons);
    if (!ground) return std::nullopt;
    if (!*ground) cur.push_back(std::move(cons));
  }

  // Fourier-Motzkin, eliminating the cheapest variable each round.
  std::vector<bool> remaining(m, true);
  std::vector<Level> levels;
  for (std::size_t round = 0; round < m; ++round) {
    std::size_t best = m;
    std::size_t best_cost = 0;
    for (std::size_t v = 0; v < m; ++v) {
      if (!remaining[v]) continue;
      std::size_t np = 0, nn = 0;
      for (const Cons& cons : cur) {
        if (cons.c[v] > 0) ++np;
        else if (cons.c[v] < 0) ++nn;
      }
      std::size_t cost = np * nn;
      if (best == m || cost < best_cost) {
        best = v;
        best_cost = cost;
      }
    }
    std::size_t v = best;
    remaining[v] = false;

    Level level{v, {}, {}};
    std::vector<Cons> next;
    for (Cons& cons : cur) {
      if (cons.c[v] > 0) level.uppers.push_back(std::move(cons));
      else if (cons.c[v] < 0) level.lowers.push_back(std::move(cons));
      else next.push_back(std::move(cons));
    }
    for (const Cons& up : level.uppers) {
      for (const Cons& lo : level.lowers) {
        Cons comb{QVec(m, Rat(0)), up.r * (-lo.c[v]) + lo.r * up.c[v], up.strict || lo.strict};
        for (std::size_t j = 0; j < m; ++j)
          comb.c[j] = up.c[j] * (-lo.c[v]) + lo.c[j] * up.c[v];
        normalize(comb);
        std::optional<bool> ground = classify_ground(comb);
        if (!ground) return std::nullopt;
        if (!*ground) next.push_back(std::move(comb));
      }
    }
    // Exact-duplicate pruning keeps the strictest copy of each hyperplane.
    std::sort(next.begin(), next.end(), [](const Cons& a, const Cons& b) {
      if (a.c != b.c) return a.c < b.c;
      if (a.r != b.r) return a.r < b.r;
      return a.strict && !b.strict;
    });
    next.erase(std::unique(next.begin(), next.end(),
                           [](const Cons& a, const Cons& b) { return a.c == b.c && a.r == b.r; }),
               next.end());
    cur = std::move(next);
    levels.push_back(std::move(level));
  }

  // Assign the free variables in reverse elimination order.
  QVec freeval(m, Rat(0));
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    const Level& level = *it;
    std::size_t v = level.var;
    auto bound_value = [&](const Cons& cons) -> Rat {
      Rat s = cons.r;
      for (std::size_t j = 0; j < m; ++j) {
        if (j != v) s -= cons.c[j] * freeval[j];
      }
      return s / cons.c[v];
    };
    bool has_lo = false, has_up = false;
    Rat lo = 0, up = 0;
    for (const Cons& cons : level.lowers) {
      Rat b = bound_value(cons);
      if (!has_lo || b > lo) lo = b;
      has_lo = true;
    }
    for (const Cons& cons : level.uppers) {
      Rat b = bound_value(cons);
      if (!has_up || b < up) up = b;
      has_up = true;
    }
    if (has_lo && has_up) freeval[v] = lo < up ? (lo + up) / 2 : lo;
    else if (has_lo) freeval[v] = lo + 1;
    else if (has_up) freeval[v] = up - 1;
  }

  QVec x(nvars, Rat(0));
  for (std::size_t j = 0; j < m; ++j) x[free_vars[j]] = freeval[j];
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    Rat val = eq[i][nvars];
    for (std::size_t j = 0; j < m; ++j) val -= eq[i][free_vars[j]] * freeval[j];
    x[pivots[i]] = val;
  }
  return x;
}

}  // namespace sphersing
