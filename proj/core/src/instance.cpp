#include "curvegrowth/instance.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "curvegrowth/errors.hpp"
#include "curvegrowth/expression.hpp"

namespace curvegrowth {

namespace {

using nlohmann::ordered_json;

bool valid_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

const nlohmann::json& require_key(const nlohmann::json& obj, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SyntaxError("instance is missing key '" + key + "'", 0);
  return *it;
}

}  // namespace

ParametrizedCurve InstanceFile::curve() const {
  std::vector<UniPoly> gamma;
  gamma.reserve(gamma_text.size());
  for (const auto& text : gamma_text) {
    gamma.push_back(parse_unipoly(text, parameter));
  }
  return ParametrizedCurve(variables, std::move(gamma));
}

std::pair<MultiPoly, MultiPoly> InstanceFile::function_polys(const FunctionSpec& spec) const {
  return {parse_multipoly(spec.numerator, variables),
          parse_multipoly(spec.denominator, variables)};
}

const FunctionSpec& InstanceFile::find_function(const std::string& name) const {
  for (const auto& f : functions) {
    if (f.name == name) return f;
  }
  throw SyntaxError("instance declares no function named '" + name + "'", 0);
}

InstanceFile parse_instance_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object()) throw SyntaxError("instance must be a JSON object", 0);

  InstanceFile inst;
  const auto& vars = require_key(doc, "variables");
  if (!vars.is_array() || vars.empty()) {
    throw SyntaxError("'variables' must be a nonempty array of names", 0);
  }
  for (const auto& v : vars) {
    if (!v.is_string() || !valid_identifier(v.get<std::string>())) {
      throw SyntaxError("'variables' entries must be identifiers", 0);
    }
    inst.variables.push_back(v.get<std::string>());
  }
  std::set<std::string> unique(inst.variables.begin(), inst.variables.end());
  if (unique.size() != inst.variables.size()) {
    throw SyntaxError("'variables' contains duplicates", 0);
  }

  const auto& param = require_key(doc, "parameter");
  if (!param.is_string() || !valid_identifier(param.get<std::string>())) {
    throw SyntaxError("'parameter' must be an identifier", 0);
  }
  inst.parameter = param.get<std::string>();
  if (unique.count(inst.parameter) != 0) {
    throw SyntaxError("'parameter' collides with a variable name", 0);
  }

  const auto& curve = require_key(doc, "curve");
  if (!curve.is_object()) throw SyntaxError("'curve' must be an object", 0);
  const auto& gamma = require_key(curve, "gamma");
  if (!gamma.is_array() || gamma.size() != inst.variables.size()) {
    throw SyntaxError("'curve.gamma' must list one expression per variable", 0);
  }
  for (const auto& g : gamma) {
    if (!g.is_string()) throw SyntaxError("'curve.gamma' entries must be strings", 0);
    inst.gamma_text.push_back(g.get<std::string>());
  }

  if (doc.contains("functions")) {
    const auto& funcs = doc["functions"];
    if (!funcs.is_array()) throw SyntaxError("'functions' must be an array", 0);
    std::set<std::string> names;
    for (const auto& f : funcs) {
      if (!f.is_object()) throw SyntaxError("'functions' entries must be objects", 0);
      FunctionSpec spec;
      const auto& name = require_key(f, "name");
      if (!name.is_string()) throw SyntaxError("function 'name' must be a string", 0);
      spec.name = name.get<std::string>();
      if (!names.insert(spec.name).second) {
        throw SyntaxError("duplicate function name '" + spec.name + "'", 0);
      }
      const auto& num = require_key(f, "numerator");
      if (!num.is_string()) throw SyntaxError("function 'numerator' must be a string", 0);
      spec.numerator = num.get<std::string>();
      if (f.contains("denominator")) {
        if (!f["denominator"].is_string()) {
          throw SyntaxError("function 'denominator' must be a string", 0);
        }
        spec.denominator = f["denominator"].get<std::string>();
      } else {
        spec.denominator = "1";
      }
      inst.functions.push_back(std::move(spec));
    }
  }

  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) {
      throw SyntaxError("'seed' must be a nonnegative integer", 0);
    }
    inst.seed = doc["seed"].get<std::uint64_t>();
  }

  // Validate every expression now so load-time errors carry file context.
  inst.curve();
  for (const auto& f : inst.functions) inst.function_polys(f);
  return inst;
}

InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SyntaxError("cannot open instance file '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_json(buf.str());
}

std::string rational_to_json_string(const Rational& r) { return r.to_string(); }

nlohmann::ordered_json report_to_json(const std::string& name, const std::string& pullback,
                                      const GrowthReport& report, double sample_estimate) {
  ordered_json j;
  j["name"] = name;
  j["pullback"] = pullback;
  j["growth_exponent"] = report.growth_exponent.to_string();
  j["geometric_degree"] = report.geometric_degree;
  j["curve_degree"] = report.curve_degree;
  j["graph_degree"] = report.graph_degree;
  j["tw_bound"] = report.tw_bound.to_string();
  j["tw_bound_holds"] = report.tw_bound_holds;
  j["delta_cross_check"] = report.delta_cross_check.to_string();
  j["le_one_flags"] = report.le_one_flags;
  j["bezout_equality_holds"] = report.bezout_equality_holds;
  j["sample_estimate"] = std::round(sample_estimate * 1e6) / 1e6;
  return j;
}

}  // namespace curvegrowth
