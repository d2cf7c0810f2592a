#include "sphersing/json_io.hpp"

#include "sphersing/lattice.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <sstream>

namespace sphersing {

using nlohmann::json;

namespace {

constexpr std::int64_t kSafeMax = (std::int64_t(1) << 53);

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw Error("ParseError", where + ": " + what);
}

const json& field(const json& j, const std::string& where, const std::string& key) {
  auto it = j.find(key);
  if (it == j.end()) bad(where, "missing field '" + key + "'");
  return *it;
}

IVec parse_ivec(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of integers");
  IVec out;
  for (const json& c : j) out.push_back(json_to_int(c));
  return out;
}

std::vector<IVec> parse_ivecs(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of integer vectors");
  std::vector<IVec> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(parse_ivec(j[i], where + "/" + std::to_string(i)));
  return out;
}

json ivec_to_json(const IVec& v) {
  json out = json::array();
  for (const Int& c : v) out.push_back(int_to_json(c));
  return out;
}

json ivecs_to_json(const std::vector<IVec>& vs) {
  json out = json::array();
  for (const IVec& v : vs) out.push_back(ivec_to_json(v));
  return out;
}

std::string ray_key(const IVec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].str();
  }
  return out;
}

IVec parse_ray_key(const std::string& key, const std::string& where) {
  IVec out;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      out.emplace_back(part);
    } catch (const std::exception&) {
      bad(where, "bad ray key '" + key + "'");
    }
  }
  if (out.empty()) bad(where, "bad ray key '" + key + "'");
  return out;
}

}  // namespace

nlohmann::json int_to_json(const Int& v) {
  if (v >= -kSafeMax && v <= kSafeMax) return json(static_cast<std::int64_t>(v));
  return json(v.str());
}

Int json_to_int(const nlohmann::json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      throw Error("ParseError", "bad integer literal '" + j.get<std::string>() + "'");
    }
  }
  throw Error("ParseError", "expected an integer (number or decimal string)");
}

nlohmann::json rat_to_json(const Rat& v) {
  if (is_integral(v)) return int_to_json(rat_num(v));
  return json(rat_num(v).str() + "/" + rat_den(v).str());
}

Rat json_to_rat(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    try {
      std::size_t slash = s.find('/');
      if (slash == std::string::npos) return Rat(Int(s));
      Int num(s.substr(0, slash)), den(s.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator");
      return Rat(num, den);
    } catch (const std::exception&) {
      throw Error("ParseError", "bad rational literal '" + s + "'");
    }
  }
  throw Error("ParseError", "expected a rational (integer or 'p/q' string)");
}

ColoredFan InputDocument::fan(const std::string& id) const {
  auto it = fans.find(id);
  if (it == fans.end()) throw Error("UnknownFan", "no fan named '" + id + "'");
  return ColoredFan{&space, it->second.maximal_cones};
}

InputDocument parse_input(const json& j) {
  InputDocument doc;
  if (!j.is_object()) bad("/", "expected an object");
  const json& sp = field(j, "/", "space");
  const std::string w = "/space";

  const json& rank = field(sp, w, "rank");
  if (!rank.is_number_integer() || rank.get<std::int64_t>() < 1)
    bad(w + "/rank", "expected a positive integer");
  doc.space.rank = rank.get<std::size_t>();

  const json& vc = field(sp, w, "valuation_cone");
  if (vc.is_string() && vc.get<std::string>() == "full") {
    doc.space.valuation_cone = Cone::full_space(doc.space.rank);
  } else if (vc.is_object()) {
    std::vector<IVec> gens =
        parse_ivecs(field(vc, w + "/valuation_cone", "generators"), w + "/valuation_cone/generators");
    doc.space.valuation_cone = Cone::from_generators(doc.space.rank, gens);
  } else {
    bad(w + "/valuation_cone", "expected \"full\" or {\"generators\": ...}");
  }

  if (sp.contains("spherical_roots"))
    doc.space.spherical_roots = parse_ivecs(sp["spherical_roots"], w + "/spherical_roots");

  if (sp.contains("root_data")) {
    const json& rdj = sp["root_data"];
    const std::string rw = w + "/root_data";
    RootData rd;
    rd.simple_root_restrictions = parse_ivecs(field(rdj, rw, "simple_roots"), rw + "/simple_roots");
    rd.cartan = IntMatrix::from_rows(parse_ivecs(field(rdj, rw, "cartan"), rw + "/cartan"));
    rd.positive_roots = parse_ivecs(field(rdj, rw, "positive_roots"), rw + "/positive_roots");
    for (const json& e : field(rdj, rw, "parabolic_set")) {
      if (!e.is_number_integer() || e.get<std::int64_t>() < 0)
        bad(rw + "/parabolic_set", "expected nonnegative indices");
      rd.parabolic_set.push_back(e.get<std::size_t>());
    }
    rd.coroot_restrictions = parse_ivecs(field(rdj, rw, "coroots"), rw + "/coroots");
    doc.space.root_data = std::move(rd);
  }

  for (const json& cj : field(sp, w, "colors")) {
    const std::string cw = w + "/colors";
    Color c;
    c.name = field(cj, cw, "name").get<std::string>();
    if (cj.contains("moving_root")) c.moving_root = cj["moving_root"].get<std::size_t>();
    if (cj.contains("type")) {
      std::optional<ColorType> t = color_type_from_string(cj["type"].get<std::string>());
      if (!t) bad(cw, "color " + c.name + ": unknown type");
      c.ctype = *t;
    } else if (c.moving_root && doc.space.root_data) {
      c.ctype = classify_color_type(*c.moving_root, doc.space);
    } else {
      bad(cw, "color " + c.name + ": no type and no derivable root data");
    }
    if (cj.contains("a_D")) c.a_d = json_to_int(cj["a_D"]);
    else if (c.moving_root && doc.space.root_data)
      c.a_d = color_coefficient(c.ctype, *c.moving_root, *doc.space.root_data);
    else
      c.a_d = 1;
    if (cj.contains("sigma")) {
      c.sigma = parse_ivec(cj["sigma"], cw + "/sigma");
    } else if (c.moving_root && doc.space.root_data &&
               (c.ctype == ColorType::B || c.ctype == ColorType::TwoA)) {
      IVec coroot = doc.space.root_data->coroot_restrictions.at(*c.moving_root);
      if (c.ctype == ColorType::B) {
        c.sigma = coroot;
      } else {
        for (Int& x : coroot) {
          if (x % 2 != 0) bad(cw, "color " + c.name + ": odd coroot cannot be halved");
          x /= 2;
        }
        c.sigma = coroot;
      }
    } else {
      bad(cw, "color " + c.name + ": sigma neither given nor derivable");
    }
    doc.space.colors.push_back(std::move(c));
  }

  if (j.contains("fans")) {
    if (!j["fans"].is_object()) bad("/fans", "expected an object of fans");
    for (const auto& [id, fj] : j["fans"].items()) {
      const std::string fw = "/fans/" + id;
      FanData fd;
      for (const json& cj : field(fj, fw, "maximal_cones")) {
        ColoredCone cc;
        std::vector<IVec> rays = parse_ivecs(field(cj, fw, "rays"), fw + "/rays");
        cc.cone = Cone::from_generators(doc.space.rank, rays);
        if (cj.contains("colors")) {
          for (const json& n : cj["colors"]) cc.colors.push_back(n.get<std::string>());
          std::sort(cc.colors.begin(), cc.colors.end());
          cc.colors.erase(std::unique(cc.colors.begin(), cc.colors.end()), cc.colors.end());
        }
        fd.maximal_cones.push_back(std::move(cc));
      }
      doc.fans.emplace(id, std::move(fd));
    }
  }

  if (j.contains("divisors")) {
    if (!j["divisors"].is_object()) bad("/divisors", "expected an object of divisors");
    for (const auto& [id, dj] : j["divisors"].items()) doc.divisors.emplace(id, parse_divisor(dj));
  }
  return doc;
}

InputDocument parse_input_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error("ParseError", e.what());
  }
  return parse_input(j);
}

json serialize_input(const InputDocument& doc) {
  json sp;
  sp["rank"] = doc.space.rank;
  if (doc.space.valuation_cone == Cone::full_space(doc.space.rank)) {
    sp["valuation_cone"] = "full";
  } else {
    std::vector<IVec> gens = doc.space.valuation_cone.rays();
    for (const IVec& l : doc.space.valuation_cone.lineality()) {
      gens.push_back(l);
      IVec neg = l;
      for (Int& c : neg) c = -c;
      gens.push_back(neg);
    }
    sp["valuation_cone"] = json{{"generators", ivecs_to_json(gens)}};
  }
  if (!doc.space.spherical_roots.empty())
    sp["spherical_roots"] = ivecs_to_json(doc.space.spherical_roots);
  if (doc.space.root_data) {
    const RootData& rd = *doc.space.root_data;
    std::vector<IVec> cartan_rows;
    for (std::size_t i = 0; i < rd.cartan.rows(); ++i) cartan_rows.push_back(rd.cartan.row(i));
    sp["root_data"] = json{{"simple_roots", ivecs_to_json(rd.simple_root_restrictions)},
                           {"cartan", ivecs_to_json(cartan_rows)},
                           {"positive_roots", ivecs_to_json(rd.positive_roots)},
                           {"parabolic_set", rd.parabolic_set},
                           {"coroots", ivecs_to_json(rd.coroot_restrictions)}};
  }
  json colors = json::array();
  for (const Color& c : doc.space.colors) {
    json cj{{"name", c.name},
            {"sigma", ivec_to_json(c.sigma)},
            {"type", to_string(c.ctype)},
            {"a_D", int_to_json(c.a_d)}};
    if (c.moving_root) cj["moving_root"] = *c.moving_root;
    colors.push_back(std::move(cj));
  }
  sp["colors"] = std::move(colors);

  json out;
  out["space"] = std::move(sp);
  json fans = json::object();
  for (const auto& [id, fd] : doc.fans) fans[id] = serialize_fan(fd);
  out["fans"] = std::move(fans);
  if (!doc.divisors.empty()) {
    json divs = json::object();
    for (const auto& [id, d] : doc.divisors) divs[id] = serialize_divisor(d);
    out["divisors"] = std::move(divs);
  }
  return out;
}

json serialize_fan(const FanData& fan) {
  json cones = json::array();
  for (const ColoredCone& cc : fan.maximal_cones) {
    json cj{{"rays", ivecs_to_json(cc.cone.rays())}};
    if (!cc.colors.empty()) cj["colors"] = cc.colors;
    cones.push_back(std::move(cj));
  }
  return json{{"maximal_cones", std::move(cones)}};
}

json serialize_divisor(const BWeilDivisor& d) {
  json stable = json::object();
  for (const auto& [ray, c] : d.stable) stable[ray_key(ray)] = rat_to_json(c);
  json colors = json::object();
  for (const auto& [name, c] : d.colors) colors[name] = rat_to_json(c);
  return json{{"stable", std::move(stable)}, {"colors", std::move(colors)}};
}

BWeilDivisor parse_divisor(const json& j) {
  BWeilDivisor d;
  if (j.contains("stable")) {
    for (const auto& [key, cj] : j["stable"].items())
      d.stable[parse_ray_key(key, "/stable")] = json_to_rat(cj);
  }
  if (j.contains("colors")) {
    for (const auto& [name, cj] : j["colors"].items()) d.colors[name] = json_to_rat(cj);
  }
  return d;
}

json serialize_report(const SingularityReport& report, const std::string& label) {
  json out;
  out["label"] = label;
  out["q_factorial"] = to_string(report.q_factorial);
  out["locally_factorial"] = to_string(report.locally_factorial);
  out["q_gorenstein"] = to_string(report.q_gorenstein);
  out["gorenstein"] = to_string(report.gorenstein);
  out["terminal"] = to_string(report.terminal);
  out["canonical"] = to_string(report.canonical);
  out["log_terminal"] = to_string(report.log_term);
  out["smooth"] = to_string(report.smooth);
  if (!report.certificates.empty()) out["certificates"] = report.certificates;
  if (report.discrepancy_list) {
    json ds = json::array();
    for (const Discrepancy& d : *report.discrepancy_list)
      ds.push_back(json{{"ray", ivec_to_json(d.ray)}, {"value", rat_to_json(d.value)}});
    out["discrepancies"] = std::move(ds);
  }
  return out;
}

}  // namespace sphersing
