#include "doctest.h"

#include "sphersing/cone.hpp"

#include <algorithm>
#include <random>

using namespace sphersing;

namespace {

IVec iv(std::initializer_list<long> xs) {
  IVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

QVec qv(std::initializer_list<Rat> xs) { return QVec(xs); }

Cone cone2(std::initializer_list<std::initializer_list<long>> gens) {
  std::vector<IVec> g;
  for (auto& x : gens) g.push_back(iv(x));
  return Cone::from_generators(g.empty() ? 2 : g.begin()->size(), g);
}

}  // namespace

TEST_CASE("membership and relative interior") {
  Cone q = cone2({{1, 0}, {0, 1}});
  CHECK(q.contains(iv({1, 1})));
  CHECK(q.relint_contains(iv({1, 1})));
  CHECK(q.contains(iv({1, 0})));
  CHECK_FALSE(q.relint_contains(iv({1, 0})));
  CHECK_FALSE(q.contains(iv({-1, 0})));

  Cone c = cone2({{1, 0}, {1, 2}});
  CHECK(c.contains(iv({1, 1})));
  CHECK(c.relint_contains(iv({1, 1})));
  CHECK_FALSE(c.contains(iv({0, 1})));
}

TEST_CASE("contains_line") {
  CHECK(cone2({{1, 0}, {-1, 0}}).contains_line());
  CHECK_FALSE(cone2({{1, 0}, {0, 1}}).contains_line());
  CHECK(cone2({{1, 0}, {-1, 1}, {0, -1}}).contains_line());
}

TEST_CASE("extreme rays are canonical under redundant generators") {
  Cone a = cone2({{1, 0}, {0, 1}});
  Cone b = cone2({{1, 0}, {0, 1}, {1, 1}, {2, 3}});
  CHECK(a == b);
  CHECK(a.rays().size() == 2);
}

TEST_CASE("faces") {
  CHECK(cone2({{1, 0}, {0, 1}}).faces().size() == 4);
  CHECK(cone2({{1, 2}}).faces().size() == 2);
  CHECK(cone2({{1, 0, 0}, {0, 1, 0}, {1, 1, 2}}).faces().size() == 8);
  CHECK_THROWS_WITH_AS(cone2({{1, 0}, {-1, 0}}).faces(), doctest::Contains("NotPointed"), Error);
}

TEST_CASE("face closure and pairwise intersection of faces") {
  Cone c = cone2({{1, 0, 0}, {0, 1, 0}, {1, 1, 2}});
  std::vector<Cone> fs = c.faces();
  auto is_face = [&](const Cone& f) {
    return std::any_of(fs.begin(), fs.end(), [&](const Cone& g) { return g == f; });
  };
  for (const Cone& f : fs) {
    for (const Cone& sub : f.faces()) CHECK(is_face(sub));
    for (const Cone& g : fs) CHECK(is_face(f.intersect(g)));
  }
}

TEST_CASE("double duality on full-dimensional pointed cones") {
  for (const Cone& c : {cone2({{1, 0}, {0, 1}}), cone2({{1, 0}, {1, 2}}),
                        cone2({{1, 0, 0}, {0, 1, 0}, {1, 1, 2}}), cone2({{2, 5}, {1, 0}})}) {
    Cone dd = c.dual().dual();
    CHECK(dd == c);
  }
}

TEST_CASE("dual of quadrant") {
  Cone d = cone2({{1, 0}, {0, 1}}).dual();
  CHECK(d.rays() == std::vector<IVec>{iv({0, 1}), iv({1, 0})});
}

TEST_CASE("covers") {
  std::vector<Cone> tri = {cone2({{1, 0}, {0, 1}}), cone2({{0, 1}, {-1, -1}}),
                           cone2({{-1, -1}, {1, 0}})};
  Cone plane = Cone::full_space(2);
  CHECK(covers(tri, plane));

  QVec w;
  CHECK_FALSE(covers({cone2({{1, 0}, {0, 1}})}, plane, &w));
  CHECK(w.size() == 2);
  CHECK_FALSE(cone2({{1, 0}, {0, 1}}).contains(w));

  CHECK(covers({cone2({{1, 0}, {0, 1}})}, cone2({{1, 0}, {1, 1}})));
}

TEST_CASE("covers is monotone under extra cones") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> entry(-3, 3);
  Cone v = cone2({{1, 0}, {0, 1}, {-1, 2}});
  for (int iter = 0; iter < 40; ++iter) {
    std::vector<Cone> cs;
    for (int k = 0; k < 3; ++k) {
      IVec a = iv({entry(rng), entry(rng)}), b = iv({entry(rng), entry(rng)});
      if (is_zero(a) || is_zero(b)) continue;
      cs.push_back(Cone::from_generators(2, {a, b}));
    }
    if (cs.empty()) continue;
    bool before = covers(cs, v);
    cs.push_back(cone2({{1, 1}, {2, 1}}));
    bool after = covers(cs, v);
    if (before) CHECK(after);
  }
}

TEST_CASE("truncated lattice points") {
  CHECK(truncated_lattice_points(cone2({{1, 0}, {0, 1}}), qv({1, 1})) ==
        std::vector<IVec>{iv({0, 1}), iv({1, 0})});
  CHECK(truncated_lattice_points(cone2({{1, 0}, {1, 2}}), qv({1, 0})) ==
        std::vector<IVec>{iv({1, 0}), iv({1, 1}), iv({1, 2})});
  CHECK(truncated_lattice_points(cone2({{1, 0, 0}, {0, 1, 0}, {1, 1, 2}}),
                                 qv({1, 1, Rat(-1) / 2})) ==
        std::vector<IVec>{iv({0, 1, 0}), iv({1, 0, 0}), iv({1, 1, 2})});
  CHECK_THROWS_WITH_AS(truncated_lattice_points(cone2({{1, 0}, {0, 1}}), qv({1, 0})),
                       doctest::Contains("UnboundedTruncation"), Error);
}

TEST_CASE("truncation is independent of generator presentation") {
  Cone a = cone2({{1, 0}, {1, 2}});
  Cone b = cone2({{1, 0}, {1, 1}, {1, 2}, {2, 3}});
  CHECK(truncated_lattice_points(a, qv({1, 0})) == truncated_lattice_points(b, qv({1, 0})));
}

TEST_CASE("intersections and halfspaces") {
  Cone q = cone2({{1, 0}, {0, 1}});
  Cone upper = q.intersect_halfspace(iv({-1, 1}));
  CHECK(upper == cone2({{1, 1}, {0, 1}}));
  Cone diag = q.intersect_hyperplane(iv({1, -1}));
  CHECK(diag == cone2({{1, 1}}));
  CHECK(q.intersect(cone2({{1, 1}, {-1, 1}})) == cone2({{1, 1}, {0, 1}}));
  CHECK(q.intersect(cone2({{-1, 0}, {-1, -1}})) == Cone::zero(2));
}

TEST_CASE("cones with lineality") {
  Cone h = Cone::from_generators(2, {iv({1, 0}), iv({-1, 0}), iv({0, 1})});
  CHECK(h.contains_line());
  CHECK(h.lineality().size() == 1);
  CHECK(h.dim() == 2);
  CHECK(h.contains(iv({-5, 3})));
  CHECK_FALSE(h.contains(iv({0, -1})));
  CHECK(Cone::full_space(3).contains(iv({-1, 7, 0})));
  CHECK(Cone::zero(2).contains(iv({0, 0})));
  CHECK_FALSE(Cone::zero(2).contains(iv({1, 0})));
}

TEST_CASE("relint_point lies in the relative interior") {
  for (const Cone& c :
       {cone2({{1, 0}, {0, 1}}), cone2({{1, 0}, {1, 2}}), cone2({{2, 5}, {1, 0}}),
        cone2({{1, 0, 0}, {0, 1, 0}, {1, 1, 2}}), Cone::full_space(2), cone2({{1, 2}})}) {
    CHECK(c.relint_contains(c.relint_point()));
  }
}

TEST_CASE("random cones: rays reproduce the cone, dual is exact") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> entry(-5, 5), dimd(2, 4), cnt(2, 6);
  for (int iter = 0; iter < 60; ++iter) {
    std::size_t d = static_cast<std::size_t>(dimd(rng));
    std::vector<IVec> gens;
    int n = cnt(rng);
    for (int k = 0; k < n; ++k) {
      IVec v(d);
      for (std::size_t j = 0; j < d; ++j) v[j] = entry(rng);
      if (!is_zero(v)) gens.push_back(v);
    }
    if (gens.empty()) continue;
    Cone c = Cone::from_generators(d, gens);
    for (const IVec& g : gens) CHECK(c.contains(g));
    Cone du = c.dual();
    for (const IVec& f : c.facet_normals()) CHECK(du.contains(f));
    for (const IVec& r : c.rays()) {
      for (const IVec& fr : du.rays()) CHECK(dot(fr, r) >= 0);
    }
    std::vector<IVec> regen = c.rays();
    for (const IVec& l : c.lineality()) {
      regen.push_back(l);
      IVec neg = l;
      for (Int& x : neg) x = -x;
      regen.push_back(neg);
    }
    if (!regen.empty()) CHECK(Cone::from_generators(d, regen) == c);
  }
}
