// Command-line front end: loads instance files, runs the growth-exponent
// pipeline and emits machine-readable JSON reports.
//
// Exit codes: 0 success; 1 a mathematical invariant failed (the report names
// it); 2 input error (syntax, schema, or an instance outside an operation's
// domain); 3 randomized draws stayed inconclusive after retries.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "curvegrowth/elimination.hpp"
#include "curvegrowth/errors.hpp"
#include "curvegrowth/expression.hpp"
#include "curvegrowth/growth.hpp"
#include "curvegrowth/instance.hpp"

namespace {

using curvegrowth::BezoutReport;
using curvegrowth::BivariateMonic;
using curvegrowth::CurveFunction;
using curvegrowth::FiberInjectivityReport;
using curvegrowth::GrowthReport;
using curvegrowth::InstanceFile;
using curvegrowth::MultiPoly;
using curvegrowth::ParametrizedCurve;
using curvegrowth::Rational;
using curvegrowth::SeededRng;
using curvegrowth::UniPoly;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitInput = 2;
constexpr int kExitInconclusive = 3;

std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::uint64_t effective_seed(const InstanceFile& inst, const std::optional<std::uint64_t>& flag) {
  return flag ? *flag : inst.seed;
}

double estimate_or_zero(const CurveFunction& cf) {
  if (cf.pullback.is_constant()) return 0.0;
  return curvegrowth::sample_growth_estimate(cf, curvegrowth::default_sample_ladder());
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

int cmd_parse(const std::optional<std::string>& instance_path,
              const std::optional<std::string>& expr, const std::string& vars_csv) {
  if (expr) {
    const std::vector<std::string> vars = split_names(vars_csv);
    const MultiPoly p = curvegrowth::parse_multipoly(*expr, vars);
    ordered_json doc;
    doc["canonical"] = p.to_string();
    if (p.is_zero()) {
      doc["degree"] = nullptr;
    } else {
      doc["degree"] = *p.degree();
    }
    emit(doc);
    return kExitOk;
  }
  if (!instance_path) {
    throw curvegrowth::SyntaxError("parse needs --expr or an instance file", 0);
  }
  const InstanceFile inst = curvegrowth::load_instance(*instance_path);
  const ParametrizedCurve curve = inst.curve();
  ordered_json doc;
  doc["variables"] = inst.variables;
  doc["parameter"] = inst.parameter;
  ordered_json gamma = ordered_json::array();
  for (const auto& g : curve.components()) gamma.push_back(g.to_string());
  doc["gamma"] = gamma;
  ordered_json funcs = ordered_json::array();
  for (const auto& f : inst.functions) {
    const auto [num, den] = inst.function_polys(f);
    ordered_json jf;
    jf["name"] = f.name;
    jf["numerator"] = num.to_string();
    jf["denominator"] = den.to_string();
    funcs.push_back(jf);
  }
  doc["functions"] = funcs;
  emit(doc);
  return kExitOk;
}

int cmd_degree(const std::optional<std::string>& instance_path,
               const std::optional<std::string>& poly, const std::string& vars_csv) {
  if (poly) {
    const std::vector<std::string> vars = split_names(vars_csv);
    const MultiPoly f = curvegrowth::parse_multipoly(*poly, vars);
    ordered_json doc;
    doc["degree"] = curvegrowth::graph_degree_of_polynomial(f);
    emit(doc);
    return kExitOk;
  }
  if (!instance_path) {
    throw curvegrowth::SyntaxError("degree needs --poly or an instance file", 0);
  }
  const InstanceFile inst = curvegrowth::load_instance(*instance_path);
  const ParametrizedCurve curve = inst.curve();
  ordered_json doc;
  doc["curve_degree"] = curve.degree();
  ordered_json dir = ordered_json::array();
  for (const auto& c : curvegrowth::cone_direction(curve).direction()) {
    dir.push_back(c.to_string());
  }
  doc["cone_direction"] = dir;
  ordered_json funcs = ordered_json::array();
  for (const auto& f : inst.functions) {
    const auto [num, den] = inst.function_polys(f);
    const CurveFunction cf = curvegrowth::restrict_to_curve(curve, num, den);
    ordered_json jf;
    jf["name"] = f.name;
    jf["graph_degree"] = curvegrowth::graph_curve(curve, cf.pullback).degree();
    funcs.push_back(jf);
  }
  doc["functions"] = funcs;
  emit(doc);
  return kExitOk;
}

int cmd_growth(const std::string& instance_path, const std::optional<std::uint64_t>& seed_flag) {
  const InstanceFile inst = curvegrowth::load_instance(instance_path);
  const std::uint64_t seed = effective_seed(inst, seed_flag);
  const ParametrizedCurve curve = inst.curve();
  ordered_json doc;
  doc["seed"] = seed;
  ordered_json funcs = ordered_json::array();
  SeededRng rng(seed);
  for (const auto& f : inst.functions) {
    const auto [num, den] = inst.function_polys(f);
    const GrowthReport report = curvegrowth::full_report(curve, num, den, rng.fork(1).next_u64());
    const CurveFunction cf = curvegrowth::restrict_to_curve(curve, num, den);
    funcs.push_back(curvegrowth::report_to_json(f.name, cf.pullback.to_string(), report,
                                                estimate_or_zero(cf)));
  }
  doc["functions"] = funcs;
  emit(doc);
  return kExitOk;
}

int cmd_delta(const std::string& poly, const std::string& x_name, const std::string& t_name) {
  const MultiPoly p = curvegrowth::parse_multipoly(poly, {x_name, t_name});
  const BivariateMonic monic = BivariateMonic::from_polynomial(p, x_name, t_name);
  ordered_json doc;
  doc["delta"] = curvegrowth::delta(monic).to_string();
  doc["t_degree"] = monic.t_degree();
  emit(doc);
  return kExitOk;
}

int cmd_rationalize(const std::string& instance_path, const std::optional<std::string>& function,
                    const std::optional<std::string>& pullback_text,
                    std::optional<std::size_t> max_degree) {
  const InstanceFile inst = curvegrowth::load_instance(instance_path);
  const ParametrizedCurve curve = inst.curve();
  UniPoly pullback("t");
  std::string source;
  if (pullback_text) {
    pullback = curvegrowth::parse_unipoly(*pullback_text, inst.parameter);
    source = "pullback";
  } else if (function) {
    const auto& spec = inst.find_function(*function);
    const auto [num, den] = inst.function_polys(spec);
    pullback = curvegrowth::restrict_to_curve(curve, num, den).pullback;
    source = spec.name;
  } else {
    throw curvegrowth::SyntaxError("rationalize needs --function or --pullback", 0);
  }
  const std::size_t cap = max_degree ? *max_degree
                                     : std::max<std::size_t>(2, pullback.degree().value_or(0));
  const auto [num, den] = curvegrowth::rationalize(curve, pullback, cap);
  ordered_json doc;
  doc["source"] = source;
  doc["pullback"] = pullback.to_string();
  doc["numerator"] = num.to_string();
  doc["denominator"] = den.to_string();
  doc["denominator_degree"] = den.is_zero() ? 0 : *den.degree();
  doc["max_numerator_degree"] = cap;
  emit(doc);
  return kExitOk;
}

int cmd_enumerate(const std::string& instance_path, std::size_t max_degree) {
  const InstanceFile inst = curvegrowth::load_instance(instance_path);
  const ParametrizedCurve curve = inst.curve();
  const auto exponents = curvegrowth::enumerate_growth_exponents(curve, max_degree);
  ordered_json doc;
  doc["curve_degree"] = curve.degree();
  doc["max_pullback_degree"] = max_degree;
  ordered_json list = ordered_json::array();
  for (const auto& e : exponents) list.push_back(e.to_string());
  doc["exponents"] = list;
  emit(doc);
  return kExitOk;
}

int cmd_bezout(const std::string& instance_path) {
  const InstanceFile inst = curvegrowth::load_instance(instance_path);
  const ParametrizedCurve curve = inst.curve();
  if (inst.functions.empty()) {
    throw curvegrowth::SyntaxError("bezout needs at least one function", 0);
  }
  std::vector<std::pair<MultiPoly, MultiPoly>> components;
  ordered_json names = ordered_json::array();
  for (const auto& f : inst.functions) {
    components.push_back(inst.function_polys(f));
    names.push_back(f.name);
  }
  const BezoutReport r = curvegrowth::bezout_mapping_report(curve, components);
  ordered_json doc;
  doc["components"] = names;
  doc["curve_degree"] = curve.degree();
  doc["geometric_degree"] = r.geometric_degree;
  doc["growth_exponent"] = r.growth.to_string();
  doc["equality_holds"] = r.equality_holds;
  if (r.bound_holds) {
    doc["bound_holds"] = *r.bound_holds;
  } else {
    doc["bound_holds"] = nullptr;
  }
  emit(doc);
  return kExitOk;
}

struct VerifyOutcome {
  ordered_json doc;
  bool all_passed = true;
};

VerifyOutcome verify_instance(const InstanceFile& inst, std::uint64_t seed) {
  const ParametrizedCurve curve = inst.curve();
  VerifyOutcome outcome;
  ordered_json funcs = ordered_json::array();
  SeededRng rng(seed);
  for (const auto& spec : inst.functions) {
    const auto [num, den] = inst.function_polys(spec);
    const CurveFunction cf = curvegrowth::restrict_to_curve(curve, num, den);
    SeededRng frng = rng.fork(std::hash<std::string>{}(spec.name));

    ordered_json checks = ordered_json::array();
    const auto push_check = [&checks, &outcome](const std::string& name, bool passed,
                                                const ordered_json& detail = ordered_json::object()) {
      ordered_json entry;
      entry["name"] = name;
      entry["passed"] = passed;
      for (auto it = detail.begin(); it != detail.end(); ++it) {
        entry[it.key()] = it.value();
      }
      checks.push_back(entry);
      outcome.all_passed = outcome.all_passed && passed;
    };

    const Rational growth = curvegrowth::growth_exponent(cf);
    const Rational delta_check =
        curvegrowth::growth_via_elimination(cf, frng.fork(1).next_u64());
    push_check("elimination_matches_growth", delta_check == growth,
               {{"growth", growth.to_string()}, {"delta", delta_check.to_string()}});

    const std::size_t d =
        cf.pullback.is_constant() ? 0 : curvegrowth::geometric_degree(cf);
    const bool equality =
        Rational(static_cast<long>(d)) == Rational(static_cast<long>(curve.degree())) * growth;
    push_check("curve_degree_equality", equality, {{"geometric_degree", d}});

    const curvegrowth::TwBoundCheck tw = curvegrowth::tw_bound_check(cf);
    push_check("degree_bound", tw.holds, {{"bound", tw.bound.to_string()}});

    const auto flags = curvegrowth::le_one_equivalences(cf, frng.fork(2).next_u64());
    const bool coherent =
        flags[0] == flags[1] && flags[1] == flags[2] && flags[2] == flags[3];
    push_check("le_one_equivalences", coherent,
               {{"flags", std::vector<bool>(flags.begin(), flags.end())}});

    const curvegrowth::Integer deg_int(static_cast<long>(curve.degree()));
    const curvegrowth::Integer den_b = growth.denominator();
    const bool divides = (deg_int - den_b * deg_int.div_trunc(den_b)).is_zero();
    push_check("denominator_divides_degree", divides,
               {{"denominator", den_b.to_string()}});

    if (cf.pullback.is_constant()) {
      push_check("fiber_injectivity", true, {{"skipped", "constant pullback"}});
      push_check("sampling_consistency", true, {{"skipped", "constant pullback"}});
    } else {
      const FiberInjectivityReport fib =
          curvegrowth::fiber_injectivity_check(cf, frng.fork(3).next_u64(), 100);
      push_check("fiber_injectivity", fib.pass,
                 {{"success_rate", fib.success_rate},
                  {"passed_trials", fib.passed},
                  {"counted_trials", fib.counted}});

      const double est = estimate_or_zero(cf);
      const double target = growth.to_double();
      push_check("sampling_consistency", std::fabs(est - target) <= 0.02,
                 {{"estimate", std::round(est * 1e6) / 1e6}});
    }

    GrowthReport report = curvegrowth::full_report(curve, num, den, frng.fork(4).next_u64());
    ordered_json jf;
    jf["name"] = spec.name;
    jf["checks"] = checks;
    jf["report"] = curvegrowth::report_to_json(spec.name, cf.pullback.to_string(), report,
                                               estimate_or_zero(cf));
    funcs.push_back(jf);
  }
  outcome.doc["seed"] = seed;
  outcome.doc["functions"] = funcs;
  outcome.doc["all_passed"] = outcome.all_passed;
  return outcome;
}

int cmd_verify(const std::optional<std::string>& instance_path,
               const std::optional<std::string>& dir,
               const std::optional<std::uint64_t>& seed_flag) {
  if (dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(*dir)) {
      if (entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    ordered_json doc;
    ordered_json list = ordered_json::array();
    bool all = true;
    for (const auto& f : files) {
      const InstanceFile inst = curvegrowth::load_instance(f.string());
      const VerifyOutcome out = verify_instance(inst, effective_seed(inst, seed_flag));
      ordered_json entry;
      entry["file"] = f.filename().string();
      entry["result"] = out.doc;
      list.push_back(entry);
      all = all && out.all_passed;
    }
    doc["instances"] = list;
    doc["all_passed"] = all;
    emit(doc);
    return all ? kExitOk : kExitInvariant;
  }
  if (!instance_path) {
    throw curvegrowth::SyntaxError("verify needs an instance file or --dir", 0);
  }
  const InstanceFile inst = curvegrowth::load_instance(*instance_path);
  const VerifyOutcome out = verify_instance(inst, effective_seed(inst, seed_flag));
  emit(out.doc);
  return out.all_passed ? kExitOk : kExitInvariant;
}

ordered_json error_json(const std::string& type, const std::string& message) {
  ordered_json doc;
  doc["error"] = type;
  doc["message"] = message;
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"growth exponents, geometric degrees and degree bounds of "
               "functions with algebraic graphs on parametrized curves"};
  app.require_subcommand(1);

  std::optional<std::string> instance_path, expr, poly, function, pullback, dir;
  std::string vars_csv = "x,y";
  std::string x_name = "x", t_name = "t";
  std::optional<std::uint64_t> seed_flag;
  std::optional<std::size_t> max_degree;
  std::size_t enum_max = 6;

  CLI::App* parse_cmd = app.add_subcommand("parse", "parse expressions or an instance file");
  parse_cmd->add_option("instance", instance_path, "instance JSON file");
  parse_cmd->add_option("--expr", expr, "expression to parse");
  parse_cmd->add_option("--vars", vars_csv, "comma-separated variable names");

  CLI::App* degree_cmd =
      app.add_subcommand("degree", "curve degree, cone direction and graph degrees");
  degree_cmd->add_option("instance", instance_path, "instance JSON file");
  degree_cmd->add_option("--poly", poly, "polynomial whose graph degree to compute");
  degree_cmd->add_option("--vars", vars_csv, "comma-separated variable names");

  CLI::App* growth_cmd = app.add_subcommand("growth", "full growth report per function");
  growth_cmd->add_option("instance", instance_path, "instance JSON file")->required();
  growth_cmd->add_option("--seed", seed_flag, "seed override");

  CLI::App* delta_cmd = app.add_subcommand("delta", "delta of a monic fiber polynomial");
  delta_cmd->add_option("--poly", poly, "polynomial monic in t")->required();
  delta_cmd->add_option("--x", x_name, "base variable name");
  delta_cmd->add_option("--t", t_name, "fiber variable name");

  CLI::App* rat_cmd = app.add_subcommand("rationalize", "find a rational representative");
  rat_cmd->add_option("instance", instance_path, "instance JSON file")->required();
  rat_cmd->add_option("--function", function, "function name from the instance");
  rat_cmd->add_option("--pullback", pullback, "pullback polynomial in the parameter");
  rat_cmd->add_option("--max-degree", max_degree, "numerator degree cap");

  CLI::App* enum_cmd = app.add_subcommand("enumerate", "realizable growth exponents");
  enum_cmd->add_option("instance", instance_path, "instance JSON file")->required();
  enum_cmd->add_option("--max-degree", enum_max, "largest pullback degree");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run every invariant check and report pass/fail");
  verify_cmd->add_option("instance", instance_path, "instance JSON file");
  verify_cmd->add_option("--dir", dir, "verify every .json instance in a directory");
  verify_cmd->add_option("--seed", seed_flag, "seed override");

  CLI::App* bezout_cmd =
      app.add_subcommand("bezout", "geometric degree report for the mapping");
  bezout_cmd->add_option("instance", instance_path, "instance JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (parse_cmd->parsed()) return cmd_parse(instance_path, expr, vars_csv);
    if (degree_cmd->parsed()) return cmd_degree(instance_path, poly, vars_csv);
    if (growth_cmd->parsed()) return cmd_growth(*instance_path, seed_flag);
    if (delta_cmd->parsed()) return cmd_delta(*poly, x_name, t_name);
    if (rat_cmd->parsed()) return cmd_rationalize(*instance_path, function, pullback, max_degree);
    if (enum_cmd->parsed()) return cmd_enumerate(*instance_path, enum_max);
    if (verify_cmd->parsed()) return cmd_verify(instance_path, dir, seed_flag);
    if (bezout_cmd->parsed()) return cmd_bezout(*instance_path);
  } catch (const curvegrowth::SyntaxError& e) {
    ordered_json doc = error_json("SyntaxError", e.what());
    doc["offset"] = e.offset();
    emit(doc);
    return kExitInput;
  } catch (const curvegrowth::UnknownVariable& e) {
    ordered_json doc = error_json("UnknownVariable", e.what());
    doc["offset"] = e.offset();
    doc["variable"] = e.name();
    emit(doc);
    return kExitInput;
  } catch (const curvegrowth::InvariantViolation& e) {
    emit(error_json("InvariantViolation", e.what()));
    return kExitInvariant;
  } catch (const curvegrowth::InconclusiveAfterRetries& e) {
    emit(error_json("InconclusiveAfterRetries", e.what()));
    return kExitInconclusive;
  } catch (const curvegrowth::NonGenericProjection& e) {
    emit(error_json("NonGenericProjection", e.what()));
    return kExitInconclusive;
  } catch (const curvegrowth::Error& e) {
    emit(error_json("InputError", e.what()));
    return kExitInput;
  } catch (const std::exception& e) {
    emit(error_json("InternalError", e.what()));
    return kExitInput;
  }
  return kExitOk;
}
