#include "doctest.h"

#include "sphersing/json_io.hpp"
#include "sphersing/svg.hpp"
#include "support/fixtures.hpp"

#include <nlohmann/json.hpp>

using namespace sphersing;
using fixtures::iv;
using fixtures::make_fan;
using nlohmann::json;

namespace {

InputDocument sample_document() {
  InputDocument doc;
  doc.space = fixtures::sl3u_space();
  ColoredFan b = fixtures::corpus_b(doc.space);
  ColoredFan c = fixtures::corpus_c(doc.space);
  doc.fans["b"] = FanData{b.maximal_cones};
  doc.fans["c"] = FanData{c.maximal_cones};
  BWeilDivisor d;
  d.stable[iv({-1, -1})] = Rat(1, 2);
  d.colors["D_alpha"] = Rat(2, 3);
  doc.divisors["half"] = d;
  return doc;
}

}  // namespace

TEST_CASE("document round-trip through json") {
  InputDocument doc = sample_document();
  json j = serialize_input(doc);
  InputDocument back = parse_input(j);
  CHECK(back == doc);
  // Text round-trip too.
  CHECK(parse_input_text(j.dump()) == doc);
}

TEST_CASE("non-full valuation cone round-trip") {
  InputDocument doc;
  doc.space.rank = 2;
  doc.space.spherical_roots = {iv({0, -1}), iv({2, -1})};
  doc.space.valuation_cone = Cone::from_inequalities(2, {iv({0, 1}), iv({-2, 1})}, {});
  json j = serialize_input(doc);
  CHECK(j["space"]["valuation_cone"].is_object());
  CHECK(parse_input(j) == doc);
}

TEST_CASE("color data is derived from root data when omitted") {
  json j = serialize_input(sample_document());
  for (json& cj : j["space"]["colors"]) {
    cj.erase("sigma");
    cj.erase("type");
    cj.erase("a_D");
  }
  InputDocument derived = parse_input(j);
  CHECK(derived.space == sample_document().space);
}

TEST_CASE("parse failures carry locations") {
  CHECK_THROWS_WITH_AS(parse_input_text("{"), doctest::Contains("ParseError"), Error);
  CHECK_THROWS_WITH_AS(parse_input(json::object()), doctest::Contains("space"), Error);
  CHECK_THROWS_WITH_AS(parse_input(json{{"space", {{"rank", 0}}}}),
                       doctest::Contains("rank"), Error);

  json j = serialize_input(sample_document());
  j["space"]["colors"][0]["type"] = "q";
  CHECK_THROWS_WITH_AS(parse_input(j), doctest::Contains("unknown type"), Error);

  j = serialize_input(sample_document());
  j["divisors"]["half"]["stable"]["x,y"] = 1;
  CHECK_THROWS_WITH_AS(parse_input(j), doctest::Contains("bad ray key"), Error);

  j = serialize_input(sample_document());
  j["divisors"]["half"]["colors"]["D_alpha"] = "1/0";
  CHECK_THROWS_WITH_AS(parse_input(j), doctest::Contains("bad rational"), Error);
}

TEST_CASE("fan lookup") {
  InputDocument doc = sample_document();
  CHECK(doc.fan("b").maximal_cones.size() == 3);
  CHECK_THROWS_WITH_AS(doc.fan("zzz"), doctest::Contains("UnknownFan"), Error);
}

TEST_CASE("wide integers and rationals travel as strings") {
  Int big("123456789012345678901234567890");
  json j = int_to_json(big);
  CHECK(j.is_string());
  CHECK(json_to_int(j) == big);
  CHECK(int_to_json(Int(7)).is_number_integer());
  CHECK(json_to_int(int_to_json(Int(-42))) == -42);

  Rat q(Int("98765432109876543210"), Int(7));
  json rj = rat_to_json(q);
  CHECK(rj.is_string());
  CHECK(json_to_rat(rj) == q);
  CHECK(rat_to_json(Rat(5)).is_number_integer());
  CHECK(json_to_rat(rat_to_json(Rat(-3, 4))) == Rat(-3, 4));
}

TEST_CASE("divisor serialization uses stable ray keys") {
  BWeilDivisor d;
  d.stable[iv({1, 0})] = 1;
  d.stable[iv({-1, -1})] = Rat(1, 2);
  d.colors["D"] = 2;
  json j = serialize_divisor(d);
  CHECK(j["stable"].contains("1,0"));
  CHECK(j["stable"].contains("-1,-1"));
  CHECK(parse_divisor(j) == d);
}

TEST_CASE("report serialization") {
  SphericalSpace sp = fixtures::sl3u_space();
  ColoredFan fan = fixtures::corpus_b(sp);
  SingularityReport r = classify(fan);
  json j = serialize_report(r, classification_label(fan, r));
  CHECK(j["label"] == "Locally factorial (and terminal singularities)");
  CHECK(j["gorenstein"] == "true");
  CHECK(j["smooth"] == "undetermined");
  CHECK(j.contains("discrepancies"));
  CHECK(j["certificates"].contains("support_covectors"));
}

TEST_CASE("svg rendering is deterministic and structured") {
  SphericalSpace sp = fixtures::sl3u_space();
  ColoredFan fan = fixtures::corpus_b(sp);
  std::string svg = render_fan_svg(fan);
  CHECK(svg == render_fan_svg(fan));
  CHECK(svg.find("<svg") == 0);

  auto count = [&](const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t p = svg.find(needle); p != std::string::npos; p = svg.find(needle, p + 1)) ++n;
    return n;
  };
  CHECK(count("marker-end") == 3);                  // one arrow per ray
  CHECK(count("fill=\"black\"/>") == 1 + 1);        // marker path plus one lattice dot
  CHECK(count("stroke=\"#888888\"") == 2);          // both colors of F_X ringed

  SphericalSpace t3 = fixtures::toric_space(3);
  ColoredFan solid = make_fan(t3, {{{iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})}, {}}});
  CHECK_THROWS_WITH_AS(render_fan_svg(solid), doctest::Contains("RenderRankUnsupported"), Error);
}
