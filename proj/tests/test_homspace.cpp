#include "doctest.h"

#include "sphersing/homspace.hpp"
#include "support/fixtures.hpp"

using namespace sphersing;
using fixtures::iv;

namespace {

RootData a1_root_data() {
  RootData rd;
  rd.simple_root_restrictions = {iv({2})};
  rd.cartan = IntMatrix::from_rows({iv({2})});
  rd.positive_roots = {iv({1})};
  rd.parabolic_set = {0};
  rd.coroot_restrictions = {iv({1})};
  return rd;
}

}  // namespace

TEST_CASE("color type classification") {
  SphericalSpace sp;
  sp.rank = 1;
  sp.root_data = a1_root_data();

  SUBCASE("alpha spherical -> type a") {
    sp.spherical_roots = {iv({2})};
    sp.valuation_cone = Cone::from_inequalities(1, {iv({-1})}, {});
    CHECK(classify_color_type(0, sp) == ColorType::A);
  }
  SUBCASE("2 alpha spherical -> type 2a") {
    sp.spherical_roots = {iv({4})};
    sp.valuation_cone = Cone::from_inequalities(1, {iv({-1})}, {});
    CHECK(classify_color_type(0, sp) == ColorType::TwoA);
  }
  SUBCASE("horospherical -> type b") {
    sp.valuation_cone = Cone::full_space(1);
    CHECK(classify_color_type(0, sp) == ColorType::B);
  }
}

TEST_CASE("color coefficients") {
  CHECK(color_coefficient(ColorType::A, 0, a1_root_data()) == 1);
  CHECK(color_coefficient(ColorType::TwoA, 0, a1_root_data()) == 1);

  // Diagonal subgroup of a product of two SL2: one simple root on each
  // factor, the color moved by both; the coefficient comes out as 2.
  RootData sl2sl2;
  sl2sl2.simple_root_restrictions = {iv({1}), iv({1})};
  sl2sl2.cartan = IntMatrix::from_rows({iv({2, 0}), iv({0, 2})});
  sl2sl2.positive_roots = {iv({1, 0}), iv({0, 1})};
  sl2sl2.parabolic_set = {0, 1};
  sl2sl2.coroot_restrictions = {iv({1}), iv({1})};
  CHECK(color_coefficient(ColorType::B, 0, sl2sl2) == 2);
  CHECK(color_coefficient(ColorType::B, 1, sl2sl2) == 2);

  // A2 with both simple roots moving: sum of positive roots pairs to 2.
  SphericalSpace sl3u = fixtures::sl3u_space();
  CHECK(color_coefficient(ColorType::B, 0, *sl3u.root_data) == 2);
  CHECK(color_coefficient(ColorType::B, 1, *sl3u.root_data) == 2);

  RootData degenerate = a1_root_data();
  degenerate.positive_roots.clear();
  CHECK_THROWS_WITH_AS(color_coefficient(ColorType::B, 0, degenerate),
                       doctest::Contains("InvalidRootData"), Error);
}

TEST_CASE("validate_space accepts the SL3/U datum") {
  CHECK(validate_space(fixtures::sl3u_space()).empty());
}

TEST_CASE("validate_space rejects a coefficient-1 color inside V") {
  SphericalSpace sp;
  sp.rank = 2;
  sp.spherical_roots = {iv({-1, 0}), iv({0, -1})};  // V = first quadrant
  sp.valuation_cone = Cone::from_generators(2, {iv({1, 0}), iv({0, 1})});
  sp.colors = {Color{"D", iv({1, 1}), ColorType::A, 1, std::nullopt}};
  std::vector<std::string> v = validate_space(sp);
  REQUIRE(!v.empty());
  bool found = false;
  for (const std::string& s : v) found = found || s.find("valuation cone") != std::string::npos;
  CHECK(found);
}

TEST_CASE("validate_space rejects mismatched valuation cone") {
  SphericalSpace sp;
  sp.rank = 2;
  sp.spherical_roots = {iv({-1, 0})};
  sp.valuation_cone = Cone::full_space(2);  // should be the halfspace x >= 0
  CHECK(!validate_space(sp).empty());
}

TEST_CASE("validate_space flags type constraints") {
  SphericalSpace sp;
  sp.rank = 2;
  sp.valuation_cone = Cone::full_space(2);
  sp.colors = {Color{"bad_b", iv({1, 0}), ColorType::B, 1, std::nullopt}};
  CHECK(!validate_space(sp).empty());
  sp.colors = {Color{"bad_a", iv({1, 0}), ColorType::A, 2, std::nullopt}};
  CHECK(!validate_space(sp).empty());
  sp.colors = {Color{"zero", iv({0, 0}), ColorType::B, 2, std::nullopt}};
  CHECK(!validate_space(sp).empty());
}

TEST_CASE("validate_space cross-checks declared colors against root data") {
  SphericalSpace sp = fixtures::sl3u_space();
  sp.colors[0].a_d = 3;  // contradicts the derived coefficient
  CHECK(!validate_space(sp).empty());

  sp = fixtures::sl3u_space();
  sp.colors[0].sigma = iv({1, 1});  // type b sigma must be the coroot image
  CHECK(!validate_space(sp).empty());
}
