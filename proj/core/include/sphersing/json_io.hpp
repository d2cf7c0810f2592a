#pragma once

#include "sphersing/divisor.hpp"
#include "sphersing/singularities.hpp"

#include <nlohmann/json_fwd.hpp>

#include <map>
#include <string>

namespace sphersing {

struct FanData {
  std::vector<ColoredCone> maximal_cones;

  bool operator==(const FanData& other) const = default;
};

struct InputDocument {
  SphericalSpace space;
  std::map<std::string, FanData> fans;
  std::map<std::string, BWeilDivisor> divisors;

  ColoredFan fan(const std::string& id) const;
  bool operator==(const InputDocument& other) const = default;
};

/// Throws "ParseError" with a JSON-pointer-style location on bad input.
InputDocument parse_input(const nlohmann::json& j);
InputDocument parse_input_text(const std::string& text);
nlohmann::json serialize_input(const InputDocument& doc);

nlohmann::json serialize_divisor(const BWeilDivisor& d);
BWeilDivisor parse_divisor(const nlohmann::json& j);

nlohmann::json serialize_report(const SingularityReport& report, const std::string& label);

/// Fan fragment in the input schema, for resolution output.
nlohmann::json serialize_fan(const FanData& fan);

/// Exact JSON number handling: integers wider than 53 bits and non-integral
/// rationals travel as strings.
nlohmann::json int_to_json(const Int& v);
Int json_to_int(const nlohmann::json& j);
nlohmann::json rat_to_json(const Rat& v);
Rat json_to_rat(const nlohmann::json& j);

}  // namespace sphersing
