#include "CLI11.hpp"

#include "sphersing/json_io.hpp"
#include "sphersing/singularities.hpp"
#include "sphersing/svg.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

using namespace sphersing;
using nlohmann::json;

namespace sphersing_cli {
const char* corpus_json();
}

namespace {

constexpr int kOk = 0;
constexpr int kSemanticError = 1;
constexpr int kParseError = 2;

struct CliError {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kParseError, "cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw CliError{kSemanticError, "cannot write '" + out_path + "'"};
  out << text;
}

InputDocument load_document(const std::string& path) {
  try {
    return parse_input_text(read_file(path));
  } catch (const Error& e) {
    throw CliError{kParseError, e.what()};
  }
}

/// Collects every space and fan violation, prefixed with its origin.
std::vector<std::string> document_violations(const InputDocument& doc) {
  std::vector<std::string> out;
  for (const std::string& v : validate_space(doc.space)) out.push_back("space: " + v);
  if (!out.empty()) return out;  // fan checks assume a sane space
  for (const auto& [id, fd] : doc.fans) {
    ColoredFan fan{&doc.space, fd.maximal_cones};
    for (const std::string& v : validate_fan(fan)) out.push_back("fan " + id + ": " + v);
  }
  return out;
}

ColoredFan pick_fan(const InputDocument& doc, const std::string& id) {
  if (!id.empty()) {
    try {
      return doc.fan(id);
    } catch (const Error& e) {
      throw CliError{kSemanticError, e.what()};
    }
  }
  if (doc.fans.size() == 1) return doc.fan(doc.fans.begin()->first);
  throw CliError{kSemanticError, "--fan is required when the document has " +
                                     std::to_string(doc.fans.size()) + " fans"};
}

void require_valid(const InputDocument& doc) {
  std::vector<std::string> violations = document_violations(doc);
  if (violations.empty()) return;
  std::string msg = "invalid input";
  for (const std::string& v : violations) msg += "\n  " + v;
  throw CliError{kSemanticError, msg};
}

int cmd_validate(const std::string& input) {
  InputDocument doc = load_document(input);
  std::vector<std::string> violations = document_violations(doc);
  for (const std::string& v : violations) std::cout << v << "\n";
  if (violations.empty()) std::cout << "ok\n";
  return violations.empty() ? kOk : kSemanticError;
}

int cmd_classify(const std::string& input, const std::string& fan_id, bool as_json) {
  InputDocument doc = load_document(input);
  require_valid(doc);
  ColoredFan fan = pick_fan(doc, fan_id);
  SingularityReport report = classify(fan);
  std::string label = classification_label(fan, report);
  if (as_json)
    std::cout << serialize_report(report, label).dump(2) << "\n";
  else
    std::cout << label << "\n";
  return kOk;
}

int cmd_resolve(const std::string& input, const std::string& fan_id, const std::string& out) {
  InputDocument doc = load_document(input);
  require_valid(doc);
  ColoredFan fan = pick_fan(doc, fan_id);
  ColoredFan res = decolor_and_resolve(fan);
  write_output(out, serialize_fan(FanData{res.maximal_cones}).dump(2) + "\n");
  return kOk;
}

int cmd_render(const std::string& input, const std::string& fan_id, const std::string& out) {
  InputDocument doc = load_document(input);
  require_valid(doc);
  ColoredFan fan = pick_fan(doc, fan_id);
  write_output(out, render_fan_svg(fan));
  return kOk;
}

int cmd_morphism(const std::string& input, const std::string& from, const std::string& to) {
  InputDocument doc = load_document(input);
  require_valid(doc);
  ColoredFan src = pick_fan(doc, from);
  ColoredFan dst = pick_fan(doc, to);
  std::optional<MorphismWitness> w = exists_morphism(src, dst);
  if (!w) {
    std::cout << "false\n";
    return kSemanticError;
  }
  std::cout << "true\n";
  for (std::size_t k = 0; k < w->assignment.size(); ++k)
    std::cout << "cone " << k << " -> cone " << w->assignment[k] << "\n";
  return kOk;
}

int cmd_find_klt_pair(const std::string& input, const std::string& fan_id) {
  InputDocument doc = load_document(input);
  require_valid(doc);
  ColoredFan fan = pick_fan(doc, fan_id);
  std::optional<BWeilDivisor> d = find_klt_pair(fan);
  if (!d) {
    std::cout << "none\n";
    return kSemanticError;
  }
  std::cout << serialize_divisor(*d).dump(2) << "\n";
  return kOk;
}

int cmd_corpus() {
  json j = json::parse(sphersing_cli::corpus_json());
  InputDocument doc = parse_input(j);
  require_valid(doc);
  std::set<std::string> labels;
  for (const auto& [id, expected] : j["expected_labels"].items()) {
    ColoredFan fan = doc.fan(id);
    std::string label = classification_label(fan, classify(fan));
    std::cout << id << "\t" << label << "\n";
    if (label != expected.get<std::string>())
      throw CliError{kSemanticError, "fan " + id + ": label differs from the bundled expectation"};
    labels.insert(label);
  }
  if (labels.size() != 8)
    throw CliError{kSemanticError,
                   "corpus realizes " + std::to_string(labels.size()) + " labels instead of 8"};
  for (const json& mj : j["morphisms"]) {
    std::string from = mj["from"].get<std::string>(), to = mj["to"].get<std::string>();
    if (!exists_morphism(doc.fan(from), doc.fan(to)))
      throw CliError{kSemanticError, "fan " + from + ": no morphism to " + to};
    std::cout << from << " -> " << to << "\n";
  }
  std::cout << labels.size() << " labels realized\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colored-fan toolbox for spherical embeddings"};
  app.require_subcommand(1);

  std::string input, fan_id, out, from, to;
  bool as_json = false;

  CLI::App* validate = app.add_subcommand("validate", "check a document against the schema rules");
  validate->add_option("--input", input)->required();

  CLI::App* classify_cmd = app.add_subcommand("classify", "singularity classification of a fan");
  classify_cmd->add_option("--input", input)->required();
  classify_cmd->add_option("--fan", fan_id);
  classify_cmd->add_flag("--json", as_json);

  CLI::App* resolve = app.add_subcommand("resolve", "colorless resolution of a fan");
  resolve->add_option("--input", input)->required();
  resolve->add_option("--fan", fan_id);
  resolve->add_option("--out", out);

  CLI::App* render = app.add_subcommand("render", "SVG picture of a rank-2 fan");
  render->add_option("--input", input)->required();
  render->add_option("--fan", fan_id);
  render->add_option("--out", out);

  CLI::App* morphism = app.add_subcommand("morphism", "equivariant morphism test between two fans");
  morphism->add_option("--input", input)->required();
  morphism->add_option("--from", from)->required();
  morphism->add_option("--to", to)->required();

  CLI::App* corpus = app.add_subcommand("corpus", "run the bundled corpus");

  CLI::App* klt = app.add_subcommand("find-klt-pair", "search for a boundary making the pair klt");
  klt->add_option("--input", input)->required();
  klt->add_option("--fan", fan_id);

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(input);
    if (classify_cmd->parsed()) return cmd_classify(input, fan_id, as_json);
    if (resolve->parsed()) return cmd_resolve(input, fan_id, out);
    if (render->parsed()) return cmd_render(input, fan_id, out);
    if (morphism->parsed()) return cmd_morphism(input, from, to);
    if (corpus->parsed()) return cmd_corpus();
    if (klt->parsed()) return cmd_find_klt_pair(input, fan_id);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return std::string(e.code()) == "ParseError" ? kParseError : kSemanticError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSemanticError;
  }
  return kSemanticError;
}
