#include "curvegrowth/growth.hpp"

#include <algorithm>
#include <cmath>

#include "curvegrowth/errors.hpp"
#include "curvegrowth/linalg.hpp"
#include "curvegrowth/rng.hpp"

namespace curvegrowth {

namespace {

constexpr int kMaxAttempts = 8;

void require_normalized(const ParametrizedCurve& curve, std::uint64_t seed) {
  const NormalizationResult r = normalization_check(curve, seed);
  if (!r.ok) {
    throw CurveNotNormalized("parametrization traces its image " +
                             std::to_string(r.generic_fiber_count) +
                             " times; a normalization is required");
  }
}

BivariateMonic fiber_polynomial_with_retries(const ParametrizedCurve& curve, const UniPoly& h,
                                             std::uint64_t seed) {
  SeededRng rng(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    SeededRng draw = rng.fork(static_cast<std::uint64_t>(attempt));
    const LinearForm ell = random_linear_form(draw, curve.dimension());
    try {
      return graph_fiber_polynomial(curve, h, ell, draw.next_u64());
    } catch (const NonGenericProjection&) {
      continue;
    }
  }
  throw NonGenericProjection("no degree-realizing projection after 8 seeded draws");
}

// Exponent vectors over `arity` variables with total degree <= dmax,
// enumerated degree by degree (lexicographically within a degree). The
// ordering fixes the unknown layout of the rationalize linear system and
// with it the reported representative.
std::vector<std::vector<unsigned>> monomials_up_to(std::size_t arity, std::size_t dmax) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(arity, 0);
  const auto rec = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
    if (pos + 1 == arity) {
      cur[pos] = remaining;
      out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
      cur[pos] = e;
      self(self, pos + 1, remaining - e);
    }
  };
  for (unsigned d = 0; d <= dmax; ++d) rec(rec, 0, d);
  return out;
}

bool lex_smaller(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int c = a[i].compare(b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

CurveFunction restrict_to_curve(const ParametrizedCurve& curve, const MultiPoly& numerator,
                                const MultiPoly& denominator) {
  if (numerator.variables() != curve.variable_names() ||
      denominator.variables() != curve.variable_names()) {
    throw VariableMismatch("function variables differ from the curve variables");
  }
  const UniPoly pg = numerator.compose(curve.components());
  const UniPoly qg = denominator.compose(curve.components());
  if (qg.is_zero()) {
    throw DenominatorVanishesOnCurve("denominator pulls back to zero on the curve");
  }
  auto [quotient, remainder] = divrem(pg, qg);
  if (!remainder.is_zero()) {
    throw NotCHolomorphic("pullback of the denominator does not divide the numerator's");
  }
  return CurveFunction{curve, numerator, denominator, std::move(quotient)};
}

CurveFunction pullback_function(const ParametrizedCurve& curve, UniPoly pullback) {
  if (pullback.parameter() != curve.parameter()) {
    throw VariableMismatch("pullback parameter differs from the curve parameter");
  }
  return CurveFunction{curve, std::nullopt, std::nullopt, std::move(pullback)};
}

Rational growth_exponent(const CurveFunction& cf) {
  if (cf.pullback.is_constant()) return Rational(0);
  return Rational(static_cast<long>(*cf.pullback.degree()),
                  static_cast<long>(cf.curve.degree()));
}

std::size_t geometric_degree(const CurveFunction& cf) {
  if (cf.pullback.is_constant()) {
    throw ConstantFunction("geometric degree of a constant function is undefined");
  }
  return *cf.pullback.degree();
}

Rational delta(const BivariateMonic& p) {
  Rational best(0);
  for (std::size_t j = 1; j <= p.t_degree(); ++j) {
    const UniPoly& aj = p.lower_coeff(j);
    if (aj.is_zero()) continue;
    const Rational cand(static_cast<long>(*aj.degree()), static_cast<long>(j));
    if (cand > best) best = cand;
  }
  return best;
}

Rational growth_via_elimination(const CurveFunction& cf, std::uint64_t seed) {
  SeededRng rng(seed);
  require_normalized(cf.curve, rng.fork(1).next_u64());
  const BivariateMonic p =
      fiber_polynomial_with_retries(cf.curve, cf.pullback, rng.fork(2).next_u64());
  return delta(p);
}

TwBoundCheck tw_bound_check(const CurveFunction& cf) {
  const std::size_t deg_a = cf.curve.degree();
  const std::size_t deg_graph = std::max(deg_a, cf.pullback.degree().value_or(0));
  const Rational bound(static_cast<long>(deg_graph - deg_a + 1));
  return {bound, growth_exponent(cf) <= bound};
}

std::array<bool, 4> le_one_equivalences(const CurveFunction& cf, std::uint64_t seed) {
  SeededRng rng(seed);
  require_normalized(cf.curve, rng.fork(1).next_u64());
  const Rational b = growth_exponent(cf);
  const ParametrizedCurve graph = graph_curve(cf.curve, cf.pullback);
  const ConeDirection dir = cone_direction(graph);
  const BivariateMonic fiber =
      fiber_polynomial_with_retries(cf.curve, cf.pullback, rng.fork(2).next_u64());
  const MultiPoly fiber_poly = fiber.to_multipoly();
  const MultiPoly lead = fiber_poly.leading_form();
  const std::vector<unsigned> pure_t{0, static_cast<unsigned>(fiber.t_degree())};
  const bool t_survives = lead.terms().find(pure_t) != lead.terms().end();

  return {b <= Rational(1), cf.curve.degree() == graph.degree(), !dir.is_last_axis(),
          t_survives};
}

BezoutReport bezout_mapping_report(
    const ParametrizedCurve& curve,
    const std::vector<std::pair<MultiPoly, MultiPoly>>& components) {
  if (components.empty()) throw AllConstant("empty component list");
  std::vector<CurveFunction> fs;
  fs.reserve(components.size());
  for (const auto& [num, den] : components) {
    fs.push_back(restrict_to_curve(curve, num, den));
  }
  std::size_t d = 0;
  Rational growth(0);
  bool any_nonconstant = false;
  for (const auto& cf : fs) {
    if (cf.pullback.is_constant()) continue;
    any_nonconstant = true;
    d = std::max(d, *cf.pullback.degree());
    growth = std::max(growth, growth_exponent(cf));
  }
  if (!any_nonconstant) {
    throw AllConstant("every component restricts to a constant");
  }
  const Rational scaled = Rational(static_cast<long>(curve.degree())) * growth;
  BezoutReport report{d, growth, Rational(static_cast<long>(d)) == scaled, std::nullopt};
  if (components.size() == 1) {
    report.bound_holds = Rational(static_cast<long>(d)) <= scaled;
  }
  return report;
}

FiberInjectivityReport fiber_injectivity_check(const CurveFunction& cf, std::uint64_t seed,
                                               std::size_t trials) {
  if (cf.pullback.is_constant()) {
    throw ConstantFunction("fiber injectivity needs a nonconstant function");
  }
  SeededRng rng(seed);
  require_normalized(cf.curve, rng.fork(1).next_u64());
  const std::size_t deg_a = cf.curve.degree();
  std::size_t passed = 0, counted = 0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    SeededRng draw = rng.fork(trial + 2);
    const LinearForm ell = random_linear_form(draw, cf.curve.dimension());
    const UniPoly lg = ell.pullback(cf.curve);
    if (lg.degree() != std::optional<std::size_t>(deg_a)) continue;
    const Rational x0(draw.uniform_int(-1000000, 1000000));
    const UniPoly u = lg - UniPoly::constant(cf.curve.parameter(), x0);
    if (!is_squarefree(u)) continue;
    ++counted;
    if (distinct_values_on_fiber(u, cf.pullback) == deg_a) ++passed;
  }
  if (counted == 0) {
    throw InconclusiveAfterRetries("every fiber draw was degenerate");
  }
  const double rate = static_cast<double>(passed) / static_cast<double>(counted);
  return {passed, counted, rate, rate >= 0.95};
}

std::pair<MultiPoly, MultiPoly> rationalize(const ParametrizedCurve& curve, const UniPoly& h,
                                            std::size_t max_num_degree) {
  if (h.parameter() != curve.parameter()) {
    throw VariableMismatch("pullback parameter differs from the curve parameter");
  }
  const InjectivityResult inj = injectivity_check(curve, 0x9e3779b9u);
  if (!inj.injective) {
    throw CurveNotInjective("pullbacks on a glued curve do not define functions on it");
  }
  const std::vector<std::string>& vars = curve.variable_names();
  if (h.is_zero()) {
    return {MultiPoly::zero(vars), MultiPoly::constant(vars, Rational(1))};
  }

  const std::size_t den_cap = curve.degree() - 1;
  const auto q_monomials = monomials_up_to(curve.dimension(), den_cap);
  std::vector<UniPoly> q_pullbacks;  // h * (x^beta o gamma)
  q_pullbacks.reserve(q_monomials.size());
  std::vector<MultiPoly> q_polys;
  q_polys.reserve(q_monomials.size());
  for (const auto& beta : q_monomials) {
    MultiPoly mono = MultiPoly::monomial(vars, beta, Rational(1));
    q_pullbacks.push_back(h * mono.compose(curve.components()));
    q_polys.push_back(std::move(mono));
  }

  for (std::size_t num_cap = 0; num_cap <= max_num_degree; ++num_cap) {
    const auto p_monomials = monomials_up_to(curve.dimension(), num_cap);
    std::vector<UniPoly> p_pullbacks;
    p_pullbacks.reserve(p_monomials.size());
    std::vector<MultiPoly> p_polys;
    p_polys.reserve(p_monomials.size());
    std::size_t max_t_deg = 0;
    for (const auto& alpha : p_monomials) {
      MultiPoly mono = MultiPoly::monomial(vars, alpha, Rational(1));
      p_pullbacks.push_back(mono.compose(curve.components()));
      max_t_deg = std::max(max_t_deg, p_pullbacks.back().degree().value_or(0));
      p_polys.push_back(std::move(mono));
    }
    for (const auto& qp : q_pullbacks) max_t_deg = std::max(max_t_deg, qp.degree().value_or(0));

    // Coefficient-matching system: P o gamma - h * (Q o gamma) = 0 in t.
    const std::size_t cols = p_polys.size() + q_polys.size();
    RationalMatrix m(max_t_deg + 1, cols);
    for (std::size_t c = 0; c < p_pullbacks.size(); ++c) {
      for (std::size_t r = 0; r <= max_t_deg; ++r) m.at(r, c) = p_pullbacks[c].coeff(r);
    }
    for (std::size_t c = 0; c < q_pullbacks.size(); ++c) {
      for (std::size_t r = 0; r <= max_t_deg; ++r) {
        m.at(r, p_polys.size() + c) = -q_pullbacks[c].coeff(r);
      }
    }

    const auto kernel = kernel_basis(m);
    const std::vector<Rational>* best = nullptr;
    std::size_t best_q_degree = 0;
    MultiPoly best_p = MultiPoly::zero(vars);
    MultiPoly best_q = MultiPoly::zero(vars);
    for (const auto& v : kernel) {
      MultiPoly qpoly = MultiPoly::zero(vars);
      for (std::size_t c = 0; c < q_polys.size(); ++c) {
        qpoly = qpoly + q_polys[c].scale(v[p_polys.size() + c]);
      }
      if (qpoly.is_zero() || qpoly.compose(curve.components()).is_zero()) continue;
      const std::size_t qdeg = *qpoly.degree();
      if (best != nullptr &&
          (qdeg > best_q_degree || (qdeg == best_q_degree && !lex_smaller(v, *best)))) {
        continue;
      }
      MultiPoly ppoly = MultiPoly::zero(vars);
      for (std::size_t c = 0; c < p_polys.size(); ++c) {
        ppoly = ppoly + p_polys[c].scale(v[c]);
      }
      best = &v;
      best_q_degree = qdeg;
      best_p = std::move(ppoly);
      best_q = std::move(qpoly);
    }
    if (best != nullptr) return {best_p, best_q};
  }
  throw NoRepresentativeFound("no representative with numerator degree <= " +
                              std::to_string(max_num_degree));
}

std::set<Rational> enumerate_growth_exponents(const ParametrizedCurve& curve,
                                              std::size_t max_pullback_degree) {
  const InjectivityResult inj = injectivity_check(curve, 0x9e3779b9u);
  if (!inj.injective) {
    throw CurveNotInjective("pullbacks on a glued curve do not define functions on it");
  }
  std::set<Rational> out;
  const long deg = static_cast<long>(curve.degree());
  for (std::size_t j = 1; j <= max_pullback_degree; ++j) {
    out.insert(Rational(static_cast<long>(j), deg));
  }
  return out;
}

std::vector<Rational> default_sample_ladder() {
  return {Rational(1000), Rational(10000), Rational(100000), Rational(1000000)};
}

double sample_growth_estimate(const CurveFunction& cf, const std::vector<Rational>& magnitudes) {
  if (cf.pullback.is_constant()) {
    throw ConstantFunction("sampling needs a nonconstant function");
  }
  if (magnitudes.size() < 2) throw Error("sample ladder needs at least two points");
  for (std::size_t i = 1; i < magnitudes.size(); ++i) {
    if (!(magnitudes[i - 1] < magnitudes[i])) throw Error("sample ladder must increase");
  }
  if (magnitudes.back() < Rational(1000000)) {
    throw Error("sample ladder must reach magnitude 1e6");
  }

  std::vector<double> xs, ys;
  xs.reserve(magnitudes.size());
  ys.reserve(magnitudes.size());
  for (const auto& t : magnitudes) {
    const double h_abs = std::fabs(cf.pullback.evaluate(t).to_double());
    double norm = 0.0;
    for (const auto& g : cf.curve.components()) {
      norm = std::max(norm, std::fabs(g.evaluate(t).to_double()));
    }
    if (!std::isfinite(h_abs) || h_abs == 0.0 || !std::isfinite(norm) || norm == 0.0) {
      throw OverflowAtSample("evaluation left floating range at magnitude " + t.to_string());
    }
    xs.push_back(std::log(norm));
    ys.push_back(std::log(h_abs));
  }

  const std::size_t n = xs.size();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  if (sxx == 0.0) throw OverflowAtSample("sample magnitudes collapse in floating range");
  return sxy / sxx;
}

std::size_t graph_degree_of_polynomial(const MultiPoly& f) {
  if (f.is_constant()) {
    throw ConstantPolynomial("graph degree needs a nonconstant polynomial");
  }
  const std::size_t d = *f.degree();
  // Cross-check deg(t - F) = deg F via the leading form of the graph equation.
  std::string fresh = "t";
  while (f.has_variable(fresh)) fresh += "_";
  std::vector<std::string> vars = f.variables();
  vars.push_back(fresh);
  const MultiPoly graph_eq = MultiPoly::variable(vars, fresh) - f.embedded(vars);
  if (graph_eq.degree() != std::optional<std::size_t>(d) ||
      graph_eq.leading_form().degree() != std::optional<std::size_t>(d)) {
    throw InvariantViolation("graph equation degree does not match deg F");
  }
  return d;
}

GrowthReport full_report(const ParametrizedCurve& curve, const MultiPoly& numerator,
                         const MultiPoly& denominator, std::uint64_t seed) {
  SeededRng rng(seed);
  const CurveFunction cf = restrict_to_curve(curve, numerator, denominator);
  require_normalized(curve, rng.fork(1).next_u64());

  const Rational b = growth_exponent(cf);
  const std::size_t d = cf.pullback.is_constant() ? 0 : geometric_degree(cf);
  const std::size_t deg_a = curve.degree();
  const ParametrizedCurve graph = graph_curve(curve, cf.pullback);
  const TwBoundCheck tw = tw_bound_check(cf);
  const std::array<bool, 4> flags = le_one_equivalences(cf, rng.fork(2).next_u64());
  const Rational delta_check = growth_via_elimination(cf, rng.fork(3).next_u64());

  if (delta_check != b) {
    throw InvariantViolation("stage elimination: delta of the fiber polynomial is " +
                             delta_check.to_string() + " but the growth exponent is " +
                             b.to_string());
  }
  const bool equality = Rational(static_cast<long>(d)) == Rational(static_cast<long>(deg_a)) * b;
  if (!equality) {
    throw InvariantViolation("stage geometric degree: d(f) != deg A * growth exponent");
  }
  if (!tw.holds) {
    throw InvariantViolation("stage degree bound: growth exponent exceeds the graph bound");
  }
  if (!(flags[0] == flags[1] && flags[1] == flags[2] && flags[2] == flags[3])) {
    throw InvariantViolation("stage equivalences: the four flags disagree");
  }

  return GrowthReport{b,        d,
                      deg_a,    graph.degree(),
                      tw.bound, tw.holds,
                      equality, flags,
                      delta_check, cone_direction(graph)};
}

}  // namespace curvegrowth
