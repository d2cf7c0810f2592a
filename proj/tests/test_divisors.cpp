#include "doctest.h"

#include "sphersing/divisor.hpp"
#include "support/fixtures.hpp"

#include <random>

using namespace sphersing;
using fixtures::iv;
using fixtures::make_fan;

namespace {

ColoredFan p2_fan(const SphericalSpace& sp) {
  return make_fan(sp, {{{iv({1, 0}), iv({0, 1})}, {}},
                       {{iv({0, 1}), iv({-1, -1})}, {}},
                       {{iv({-1, -1}), iv({1, 0})}, {}}});
}

BWeilDivisor all_ones(const ColoredFan& fan) {
  BWeilDivisor d;
  for (const IVec& r : colorless_rays(fan)) d.stable[r] = 1;
  for (const Color& c : fan.space->colors) d.colors[c.name] = 0;
  return d;
}

bool satisfies_defining_equalities(const ColoredFan& fan, const PiecewiseLinearFn& pl) {
  std::vector<IVec> cls = colorless_rays(fan);
  for (std::size_t k = 0; k < fan.maximal_cones.size(); ++k) {
    const ColoredCone& cc = fan.maximal_cones[k];
    for (const IVec& r : cc.cone.rays()) {
      if (std::find(cls.begin(), cls.end(), r) == cls.end()) continue;
      if (dot(pl.chi[k], r) != pl.divisor.stable.at(r)) return false;
    }
    for (const std::string& name : cc.colors) {
      if (dot(pl.chi[k], fan.space->find_color(name)->sigma) != pl.divisor.colors.at(name))
        return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("zero divisor is Cartier with zero support function") {
  SphericalSpace sp = fixtures::sl3u_space();
  ColoredFan fan = fixtures::corpus_b(sp);
  BWeilDivisor zero;
  for (const IVec& r : colorless_rays(fan)) zero.stable[r] = 0;
  for (const Color& c : sp.colors) zero.colors[c.name] = 0;
  auto data = cartier_data(fan, zero, true);
  REQUIRE(std::holds_alternative<PiecewiseLinearFn>(data));
  for (const QVec& chi : std::get<PiecewiseLinearFn>(data).chi) CHECK(is_zero(chi));
}

TEST_CASE("hyperplane class on the projective plane fan") {
  SphericalSpace sp = fixtures::toric_space(2);
  ColoredFan fan = p2_fan(sp);
  BWeilDivisor d = all_ones(fan);
  auto data = cartier_data(fan, d, true);
  REQUIRE(std::holds_alternative<PiecewiseLinearFn>(data));
  const PiecewiseLinearFn& pl = std::get<PiecewiseLinearFn>(data);
  CHECK(pl.chi[0] == QVec{1, 1});
  CHECK(satisfies_defining_equalities(fan, pl));
  CHECK(is_ample(fan, d));
  CHECK(is_globally_generated(fan, d));

  BWeilDivisor zero;
  for (const IVec& r : colorless_rays(fan)) zero.stable[r] = 0;
  CHECK(is_globally_generated(fan, zero));
  CHECK_FALSE(is_ample(fan, zero));
}

TEST_CASE("three colors on one cone rule out Q-Cartier") {
  SphericalSpace sp;
  sp.rank = 2;
  sp.valuation_cone = Cone::full_space(2);
  sp.colors = {Color{"D_a", iv({1, 0}), ColorType::B, 2, std::nullopt},
               Color{"D_b", iv({0, 1}), ColorType::B, 2, std::nullopt},
               Color{"D_c", iv({1, 1}), ColorType::B, 2, std::nullopt}};
  REQUIRE(validate_space(sp).empty());
  ColoredFan fan = make_fan(sp, {{{iv({1, 0}), iv({0, 1})}, {"D_a", "D_b", "D_c"}}});
  REQUIRE(validate_fan(fan).empty());
  BWeilDivisor d;
  d.colors = {{"D_a", 2}, {"D_b", 2}, {"D_c", 2}};
  auto data = cartier_data(fan, d, false);
  REQUIRE(std::holds_alternative<CartierFailure>(data));
  CHECK(std::get<CartierFailure>(data).cone_index == 0);
}

TEST_CASE("anticanonical divisor") {
  SphericalSpace sp = fixtures::sl3u_space();
  ColoredFan fan = fixtures::corpus_b(sp);
  BWeilDivisor ak = anticanonical(fan);
  CHECK(ak.stable.size() == 1);
  CHECK(ak.stable.at(iv({-1, -1})) == 1);
  CHECK(ak.colors.at("D_alpha") == 2);
  CHECK(ak.colors.at("D_beta") == 2);
  CHECK(is_ample(fan, ak));

  SphericalSpace toric = fixtures::toric_space(2);
  ColoredFan p2 = p2_fan(toric);
  CHECK(anticanonical(p2) == all_ones(p2));
}

TEST_CASE("pullback coefficients") {
  SphericalSpace sp = fixtures::toric_space(2);
  ColoredFan dst = make_fan(sp, {{{iv({1, 0}), iv({1, 2})}, {}}});
  ColoredFan src = make_fan(sp, {{{iv({1, 0}), iv({1, 1})}, {}},
                                 {{iv({1, 1}), iv({1, 2})}, {}}});
  BWeilDivisor d;
  d.stable[iv({1, 0})] = 1;
  d.stable[iv({1, 2})] = 1;
  CHECK(pullback_coefficient(src, dst, d, iv({1, 0})) == 1);
  CHECK(pullback_coefficient(src, dst, d, iv({1, 2})) == 1);
  CHECK(pullback_coefficient(src, dst, d, iv({1, 1})) == 1);  // chi = (1, 0)
  CHECK(pullback_coefficient(src, dst, d, iv({2, 2})) == 1);  // primitive part counts
  CHECK_THROWS_WITH_AS(pullback_coefficient(src, dst, d, iv({-1, 0})),
                       doctest::Contains("RayNotInSupport"), Error);

  SphericalSpace t3 = fixtures::toric_space(3);
  ColoredFan half = make_fan(t3, {{{iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 2})}, {}}});
  ColoredFan res = decolor_and_resolve(half);
  BWeilDivisor ak = anticanonical(half);
  CHECK(pullback_coefficient(res, half, ak, iv({1, 1, 1})) == Rat(3, 2));
}

TEST_CASE("Q-Cartier divisors add") {
  SphericalSpace sp = fixtures::sl3u_space();
  ColoredFan fan = fixtures::corpus_c(sp);
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int iter = 0; iter < 30; ++iter) {
    BWeilDivisor d1, d2;
    for (const IVec& r : colorless_rays(fan)) {
      d1.stable[r] = coeff(rng);
      d2.stable[r] = coeff(rng);
    }
    for (const Color& c : sp.colors) {
      d1.colors[c.name] = coeff(rng);
      d2.colors[c.name] = coeff(rng);
    }
    auto a = cartier_data(fan, d1, false);
    auto b = cartier_data(fan, d2, false);
    if (!std::holds_alternative<PiecewiseLinearFn>(a) ||
        !std::holds_alternative<PiecewiseLinearFn>(b))
      continue;
    auto s = cartier_data(fan, d1 + d2, false);
    REQUIRE(std::holds_alternative<PiecewiseLinearFn>(s));
    // The fixture's cones are simplicial and full, so chi is unique.
    const auto& pa = std::get<PiecewiseLinearFn>(a);
    const auto& pb = std::get<PiecewiseLinearFn>(b);
    const auto& ps = std::get<PiecewiseLinearFn>(s);
    for (std::size_t k = 0; k < ps.chi.size(); ++k) {
      for (std::size_t j = 0; j < sp.rank; ++j)
        CHECK(ps.chi[k][j] == pa.chi[k][j] + pb.chi[k][j]);
    }
  }
}

TEST_CASE("scaling clears denominators of Q-Cartier data") {
  SphericalSpace sp = fixtures::toric_space(3);
  ColoredFan half = make_fan(sp, {{{iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 2})}, {}}});
  BWeilDivisor ak = anticanonical(half);
  auto data = cartier_data(half, ak, false);
  REQUIRE(std::holds_alternative<PiecewiseLinearFn>(data));
  CHECK(std::holds_alternative<CartierFailure>(cartier_data(half, ak, true)));
  auto doubled = cartier_data(half, scaled(ak, 2), true);
  CHECK(std::holds_alternative<PiecewiseLinearFn>(doubled));
}

TEST_CASE("ample anticanonical divisor on the colored corpus fan") {
  SphericalSpace sp = fixtures::sl3u_space();
  ColoredFan fan = fixtures::corpus_b(sp);
  CHECK(is_ample(fan, anticanonical(fan)));
  CHECK(is_globally_generated(fan, anticanonical(fan)));
}
