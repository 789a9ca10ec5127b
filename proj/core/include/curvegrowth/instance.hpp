#ifndef CURVEGROWTH_INSTANCE_HPP
#define CURVEGROWTH_INSTANCE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "curvegrowth/curve.hpp"
#include "curvegrowth/growth.hpp"
#include "curvegrowth/multipoly.hpp"

namespace curvegrowth {

struct FunctionSpec {
  std::string name;
  std::string numerator;
  std::string denominator;  // "1" when the file omits it
};

/// A problem instance: a parametrized curve plus named rational functions,
/// all given as expression strings over the declared names.
///
/// JSON schema:
///   { "variables": ["x","y"], "parameter": "t",
///     "curve": {"gamma": ["t^2","t^3"]},
///     "functions": [{"name":"f","numerator":"y","denominator":"x"}],
///     "seed": 0 }
struct InstanceFile {
  std::vector<std::string> variables;
  std::string parameter;
  std::vector<std::string> gamma_text;
  std::vector<FunctionSpec> functions;
  std::uint64_t seed = 0;

  /// Parses and validates the curve components.
  ParametrizedCurve curve() const;

  /// Parses one function into (numerator, denominator) polynomials.
  std::pair<MultiPoly, MultiPoly> function_polys(const FunctionSpec& spec) const;

  const FunctionSpec& find_function(const std::string& name) const;
};

/// Parses instance JSON text; schema violations throw SyntaxError.
InstanceFile parse_instance_json(const std::string& text);

/// Loads an instance file from disk.
InstanceFile load_instance(const std::string& path);

/// Per-function report object in the documented field order. The sample
/// estimate is the only approximate field; everything else is exact.
nlohmann::ordered_json report_to_json(const std::string& name, const std::string& pullback,
                                      const GrowthReport& report, double sample_estimate);

std::string rational_to_json_string(const Rational& r);

}  // namespace curvegrowth

#endif  // CURVEGROWTH_INSTANCE_HPP
