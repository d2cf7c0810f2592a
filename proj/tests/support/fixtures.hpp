#pragma once

#include "sphersing/colored_fan.hpp"
#include "sphersing/homspace.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace fixtures {

using namespace sphersing;

inline IVec iv(std::initializer_list<long> xs) {
  IVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

/// Horospherical rank-2 datum modeled on SL3 modulo a maximal unipotent
/// subgroup: two type-b colors with coefficient 2, images the standard basis.
inline SphericalSpace sl3u_space() {
  SphericalSpace sp;
  sp.rank = 2;
  sp.valuation_cone = Cone::full_space(2);
  RootData rd;
  rd.simple_root_restrictions = {iv({2, -1}), iv({-1, 2})};
  rd.cartan = IntMatrix::from_rows({iv({2, -1}), iv({-1, 2})});
  rd.positive_roots = {iv({1, 0}), iv({0, 1}), iv({1, 1})};
  rd.parabolic_set = {0, 1};
  rd.coroot_restrictions = {iv({1, 0}), iv({0, 1})};
  sp.root_data = std::move(rd);
  sp.colors = {Color{"D_alpha", iv({1, 0}), ColorType::B, 2, 0},
               Color{"D_beta", iv({0, 1}), ColorType::B, 2, 1}};
  return sp;
}

/// Colorless horospherical datum: plain toric combinatorics.
inline SphericalSpace toric_space(std::size_t rank) {
  SphericalSpace sp;
  sp.rank = rank;
  sp.valuation_cone = Cone::full_space(rank);
  return sp;
}

struct ConeSpec {
  std::vector<IVec> rays;
  std::vector<std::string> colors;
};

inline ColoredFan make_fan(const SphericalSpace& sp, std::vector<ConeSpec> cones) {
  ColoredFan fan;
  fan.space = &sp;
  for (ConeSpec& cs : cones) {
    ColoredCone cc;
    cc.cone = Cone::from_generators(sp.rank, cs.rays);
    cc.colors = std::move(cs.colors);
    std::sort(cc.colors.begin(), cc.colors.end());
    fan.maximal_cones.push_back(std::move(cc));
  }
  return fan;
}

// The nine fans of the bundled corpus over the SL3/U datum, keyed a..h plus
// a smooth refinement used for morphism arrows.

inline ColoredFan corpus_smooth(const SphericalSpace& sp) {  // "Smooth"
  return make_fan(sp, {{{iv({1, 0}), iv({0, 1})}, {}},
                       {{iv({0, 1}), iv({-1, 0})}, {}},
                       {{iv({-1, 0}), iv({0, -1})}, {}},
                       {{iv({0, -1}), iv({1, 0})}, {}}});
}

inline ColoredFan corpus_b(const SphericalSpace& sp) {  // locally factorial
  return make_fan(sp, {{{iv({1, 0}), iv({0, 1})}, {"D_alpha", "D_beta"}},
                       {{iv({0, 1}), iv({-1, -1})}, {"D_beta"}},
                       {{iv({-1, -1}), iv({1, 0})}, {"D_alpha"}}});
}

inline ColoredFan corpus_c(const SphericalSpace& sp) {  // Q-factorial, not Gorenstein, terminal
  return make_fan(sp, {{{iv({1, 0}), iv({1, 2})}, {"D_alpha"}},
                       {{iv({1, 2}), iv({0, 1})}, {"D_beta"}},
                       {{iv({0, 1}), iv({-1, 0})}, {"D_beta"}},
                       {{iv({-1, 0}), iv({0, -1})}, {}},
                       {{iv({0, -1}), iv({1, 0})}, {"D_alpha"}}});
}

inline ColoredFan corpus_d(const SphericalSpace& sp) {  // Q-factorial, Gorenstein, canonical
  return make_fan(sp, {{{iv({1, 0}), iv({1, 2})}, {}},
                       {{iv({1, 2}), iv({-1, 0})}, {}},
                       {{iv({-1, 0}), iv({0, -1})}, {}},
                       {{iv({0, -1}), iv({1, 0})}, {}}});
}

inline ColoredFan corpus_e(const SphericalSpace& sp) {  // not Q-factorial, Gorenstein, terminal
  return make_fan(sp, {{{iv({2, -1}), iv({1, 0}), iv({-1, 1})}, {"D_alpha"}},
                       {{iv({-1, 1}), iv({-1, 0})}, {}},
                       {{iv({-1, 0}), iv({0, -1})}, {}},
                       {{iv({0, -1}), iv({1, -1})}, {}},
                       {{iv({1, -1}), iv({2, -1})}, {}}});
}

inline ColoredFan corpus_f(const SphericalSpace& sp) {  // Q-Gorenstein, log terminal only
  return make_fan(sp, {{{iv({1, -2}), iv({-1, 6})}, {"D_alpha"}},
                       {{iv({-1, 6}), iv({-1, 0})}, {}},
                       {{iv({-1, 0}), iv({0, -1})}, {}},
                       {{iv({0, -1}), iv({1, -2})}, {}}});
}

inline ColoredFan corpus_g(const SphericalSpace& sp) {  // not Q-Gorenstein, no klt pair
  return make_fan(sp, {{{iv({1, 1}), iv({1, -1})}, {"D_alpha"}},
                       {{iv({1, 1}), iv({-1, 0})}, {}},
                       {{iv({-1, 0}), iv({0, -1})}, {}},
                       {{iv({0, -1}), iv({1, -1})}, {}}});
}

inline ColoredFan corpus_h(const SphericalSpace& sp) {  // not Q-Gorenstein, klt pairs exist
  return make_fan(sp, {{{iv({-1, 2}), iv({1, -1})}, {"D_alpha"}},
                       {{iv({-1, 2}), iv({-1, 1})}, {}},
                       {{iv({-1, 1}), iv({-1, 0})}, {}},
                       {{iv({-1, 0}), iv({0, -1})}, {}},
                       {{iv({0, -1}), iv({1, -1})}, {}}});
}

inline ColoredFan corpus_smooth_fine(const SphericalSpace& sp) {  // refines corpus_smooth
  return make_fan(sp, {{{iv({1, 0}), iv({1, 1})}, {}},
                       {{iv({1, 1}), iv({0, 1})}, {}},
                       {{iv({0, 1}), iv({-1, 0})}, {}},
                       {{iv({-1, 0}), iv({0, -1})}, {}},
                       {{iv({0, -1}), iv({1, 0})}, {}}});
}

}  // namespace fixtures
