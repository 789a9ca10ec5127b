#include "curvegrowth/curve.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "curvegrowth/elimination.hpp"
#include "curvegrowth/errors.hpp"

namespace curvegrowth {

namespace {

constexpr int kMaxAttempts = 8;

// Divided difference of p in sheared coordinates:
//   H(u, s) = (p(s + u) - p(s)) / u,
// a polynomial because u divides the numerator. Gluings of the curve are
// common zeros of the component divided differences; points with u = 0 are
// ramification, not gluing. In these coordinates the leading s-coefficient
// of H is the constant (deg p) * lc(p), so s-resultants of two H's never
// pick up spurious roots from leading-coefficient collapse.
MultiPoly sheared_divided_difference(const UniPoly& p, const std::vector<std::string>& vars,
                                     const std::string& u_name, const std::string& s_name) {
  const MultiPoly u = MultiPoly::variable(vars, u_name);
  const MultiPoly s = MultiPoly::variable(vars, s_name);
  const MultiPoly s_plus_u = s + u;
  MultiPoly shifted = MultiPoly::zero(vars);
  MultiPoly power = MultiPoly::constant(vars, Rational(1));
  const auto& coeffs = p.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (!coeffs[k].is_zero()) shifted = shifted + power.scale(coeffs[k]);
    if (k + 1 < coeffs.size()) power = power * s_plus_u;
  }
  const MultiPoly base = MultiPoly::from_unipoly(vars, p.renamed(s_name));
  return (shifted - base).divide_exact(u);
}

// Exact evaluation helpers on the sheared system.
UniPoly substitute_u(const MultiPoly& h, const std::string& u_name, const Rational& u0) {
  return h.substitute_value(u_name, u0).to_unipoly();
}

// Best-effort search for rational roots: small integers and small-denominator
// rationals, each candidate verified by exact evaluation. Exotic roots are
// simply not found; callers treat the witness as optional.
std::vector<Rational> small_rational_roots(const UniPoly& p) {
  std::vector<Rational> roots;
  if (p.is_constant()) return roots;
  std::set<std::pair<std::string, std::string>> seen;
  for (long den = 1; den <= 6; ++den) {
    for (long num = -240; num <= 240; ++num) {
      const Rational cand(num, den);
      if (!p.evaluate(cand).is_zero()) continue;
      auto key = std::make_pair(cand.numerator().to_string(), cand.denominator().to_string());
      if (seen.insert(key).second) roots.push_back(cand);
    }
  }
  return roots;
}

// Strips the u = 0 root: diagonal contacts are ramification, not gluing.
UniPoly strip_u_power(const UniPoly& rho_u) {
  const auto& rc = rho_u.coefficients();
  std::size_t nonzero_from = 0;
  while (nonzero_from < rc.size() && rc[nonzero_from].is_zero()) ++nonzero_from;
  return UniPoly("u",
                 std::vector<Rational>(rc.begin() + static_cast<std::ptrdiff_t>(nonzero_from),
                                       rc.end()));
}

struct PairOutcome {
  bool injective = false;      // exact verdict for the pair map
  bool common_factor = false;  // a whole curve of glued pairs
  UniPoly off_diagonal{"u"};   // rho with the u^k factor stripped
};

// Exact pair analysis for two components of degree >= 2: the pair map glues
// parameters at offset u0 != 0 exactly when the stripped resultant vanishes
// there (constant leading s-coefficients make specialization safe).
PairOutcome analyze_pair(const MultiPoly& h1, const MultiPoly& h2) {
  const MultiPoly rho = sylvester_resultant(h1, h2, "#s");
  PairOutcome out;
  if (rho.is_zero()) {
    out.common_factor = true;
    return out;
  }
  out.off_diagonal = strip_u_power(rho.to_unipoly().renamed("u"));
  out.injective = out.off_diagonal.is_constant();
  return out;
}

using Verifier = std::function<bool(const Rational&, const Rational&)>;

// Searches glued pairs with offset u0 among the rational roots of the
// common fiber gcd; every candidate is verified on the full curve.
std::optional<std::pair<Rational, Rational>> witness_at_offset(
    const std::vector<MultiPoly>& sheared, const Rational& u0, const Verifier& verify) {
  UniPoly g = substitute_u(sheared.front(), "#u", u0);
  for (std::size_t j = 1; j < sheared.size(); ++j) {
    g = gcd(g, substitute_u(sheared[j], "#u", u0));
  }
  for (const Rational& sigma : small_rational_roots(g)) {
    if (verify(sigma + u0, sigma)) return {{sigma + u0, sigma}};
  }
  return std::nullopt;
}

// True when the full sheared system has a common root at offset u0: the gcd
// over the rational specialization is exact, so this decides gluing at u0
// even when the glued parameters themselves are irrational.
bool glued_at_offset(const std::vector<MultiPoly>& sheared, const Rational& u0) {
  UniPoly g = substitute_u(sheared.front(), "#u", u0);
  for (std::size_t j = 1; j < sheared.size(); ++j) {
    g = gcd(g, substitute_u(sheared[j], "#u", u0));
  }
  return !g.is_constant();
}

// Probes a pair whose divided differences share a factor: random slices give
// candidate offsets, each verified on the full curve.
std::optional<std::pair<Rational, Rational>> common_factor_witness(
    const MultiPoly& h1, const MultiPoly& h2, SeededRng& rng, const Verifier& verify) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const Rational sigma(rng.uniform_int(-50, 50));
    const UniPoly g1 = h1.substitute_value("#s", sigma).to_unipoly();
    const UniPoly g2 = h2.substitute_value("#s", sigma).to_unipoly();
    const UniPoly g = gcd(g1, g2);
    for (const Rational& u0 : small_rational_roots(g)) {
      if (u0.is_zero()) continue;
      if (verify(sigma + u0, sigma)) return {{sigma + u0, sigma}};
    }
  }
  return std::nullopt;
}

}  // namespace

ParametrizedCurve::ParametrizedCurve(std::vector<std::string> variable_names,
                                     std::vector<UniPoly> gamma)
    : names_(std::move(variable_names)), gamma_(std::move(gamma)) {
  if (names_.empty() || names_.size() != gamma_.size()) {
    throw ArityMismatch("one component per variable name required");
  }
  const std::string& param = gamma_.front().parameter();
  bool any_nonconstant = false;
  for (const auto& g : gamma_) {
    if (g.parameter() != param) {
      throw VariableMismatch("curve components use different parameters");
    }
    any_nonconstant = any_nonconstant || !g.is_constant();
  }
  if (!any_nonconstant) {
    throw DegenerateCurve("every component of the parametrization is constant");
  }
  std::set<std::string> unique(names_.begin(), names_.end());
  if (unique.size() != names_.size()) throw NameCollision("duplicate variable names");
  if (unique.count(param) != 0) {
    throw NameCollision("parameter '" + param + "' collides with a variable name");
  }
}

std::size_t ParametrizedCurve::degree() const {
  std::size_t d = 0;
  for (const auto& g : gamma_) d = std::max(d, g.degree().value_or(0));
  return d;
}

std::vector<Rational> ParametrizedCurve::point_at(const Rational& t) const {
  std::vector<Rational> out;
  out.reserve(gamma_.size());
  for (const auto& g : gamma_) out.push_back(g.evaluate(t));
  return out;
}

LinearForm::LinearForm(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  bool any = false;
  for (const auto& c : coeffs_) any = any || !c.is_zero();
  if (!any) throw DegenerateCurve("linear form with all coefficients zero");
}

UniPoly LinearForm::pullback(const ParametrizedCurve& c) const {
  if (coeffs_.size() != c.dimension()) {
    throw ArityMismatch("linear form arity does not match the curve dimension");
  }
  UniPoly acc(c.parameter());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    acc = acc + c.component(j).scale(coeffs_[j]);
  }
  return acc;
}

Rational LinearForm::apply(const std::vector<Rational>& point) const {
  if (coeffs_.size() != point.size()) {
    throw ArityMismatch("linear form arity does not match the point dimension");
  }
  Rational acc(0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) acc += coeffs_[j] * point[j];
  return acc;
}

ConeDirection::ConeDirection(std::vector<Rational> direction) : dir_(std::move(direction)) {
  std::size_t first = dir_.size();
  for (std::size_t i = 0; i < dir_.size(); ++i) {
    if (!dir_[i].is_zero()) {
      first = i;
      break;
    }
  }
  if (first == dir_.size()) throw DegenerateCurve("cone direction is the zero vector");
  const Rational inv = dir_[first].inverse();
  for (auto& c : dir_) c *= inv;
}

bool ConeDirection::is_last_axis() const {
  for (std::size_t i = 0; i + 1 < dir_.size(); ++i) {
    if (!dir_[i].is_zero()) return false;
  }
  return !dir_.back().is_zero();
}

std::size_t curve_degree(const ParametrizedCurve& c) { return c.degree(); }

LinearForm random_linear_form(SeededRng& rng, std::size_t arity) {
  while (true) {
    std::vector<Rational> coeffs;
    coeffs.reserve(arity);
    bool any = false;
    for (std::size_t i = 0; i < arity; ++i) {
      const long v = rng.uniform_int(-1000, 1000);
      any = any || v != 0;
      coeffs.emplace_back(v);
    }
    if (any) return LinearForm(std::move(coeffs));
  }
}

NormalizationResult normalization_check(const ParametrizedCurve& c, std::uint64_t seed) {
  const std::size_t D = c.degree();
  SeededRng rng(seed);
  std::size_t best_count = 0;
  int agreeing = 0;
  for (int attempt = 0; attempt < 2 * kMaxAttempts; ++attempt) {
    SeededRng draw = rng.fork(static_cast<std::uint64_t>(attempt));
    const LinearForm l1 = random_linear_form(draw, c.dimension());
    const UniPoly lg1 = l1.pullback(c);
    if (lg1.degree() != std::optional<std::size_t>(D)) continue;
    const LinearForm l2 = random_linear_form(draw, c.dimension());
    const UniPoly sep = l2.pullback(c);
    if (sep.is_constant()) continue;
    const Rational x0(draw.uniform_int(-1000000, 1000000));
    const UniPoly u = lg1 - UniPoly::constant(c.parameter(), x0);
    if (!is_squarefree(u)) continue;
    const std::size_t count = distinct_values_on_fiber(u, sep);
    if (count == 0 || D % count != 0) continue;
    // Accidental value collisions only shrink the count, so the generic
    // count is the maximum; require two probes to agree on it.
    if (count > best_count) {
      best_count = count;
      agreeing = 1;
    } else if (count == best_count) {
      ++agreeing;
    }
    if (agreeing >= 2) {
      const std::size_t e = D / best_count;
      return {e == 1, e};
    }
  }
  throw InconclusiveAfterRetries("normalization probes kept hitting degenerate draws");
}

InjectivityResult injectivity_check(const ParametrizedCurve& c, std::uint64_t seed) {
  SeededRng rng(seed);
  const Verifier verify = [&c](const Rational& a, const Rational& b) {
    return a != b && c.point_at(a) == c.point_at(b);
  };

  std::vector<std::size_t> nonconstant;
  for (std::size_t j = 0; j < c.dimension(); ++j) {
    if (!c.component(j).is_constant()) nonconstant.push_back(j);
  }
  // A degree-one component separates all parameters by itself.
  for (std::size_t j : nonconstant) {
    if (c.component(j).degree() == std::optional<std::size_t>(1)) return {true, std::nullopt};
  }
  if (nonconstant.size() == 1) {
    // A single nonconstant component of degree >= 2 always glues parameters.
    const UniPoly& p = c.component(nonconstant.front());
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
      const Rational sigma(rng.uniform_int(-50, 50));
      const UniPoly shifted = p - UniPoly::constant(p.parameter(), p.evaluate(sigma));
      for (const Rational& root : small_rational_roots(shifted)) {
        if (verify(root, sigma)) return {false, {{root, sigma}}};
      }
    }
    return {false, std::nullopt};
  }

  // Sheared divided differences of the nonconstant components; gluing
  // parameters are exactly the common zeros of this system off u = 0.
  const std::vector<std::string> vars{"#u", "#s"};
  std::vector<MultiPoly> sheared;
  sheared.reserve(nonconstant.size());
  for (std::size_t j : nonconstant) {
    sheared.push_back(sheared_divided_difference(c.component(j), vars, "#u", "#s"));
  }

  // Pairwise analysis. Any injective pair settles the whole curve; the
  // offsets of a full gluing must be roots of every pair resultant, so the
  // gcd of the stripped resultants over-approximates them. With exactly two
  // nonconstant components the pair verdict is already the curve verdict.
  const bool pair_is_curve = sheared.size() == 2;
  std::optional<UniPoly> offsets;
  std::vector<std::pair<std::size_t, std::size_t>> factor_pairs;
  for (std::size_t i = 0; i < sheared.size(); ++i) {
    for (std::size_t j = i + 1; j < sheared.size(); ++j) {
      const PairOutcome out = analyze_pair(sheared[i], sheared[j]);
      if (out.injective) return {true, std::nullopt};
      if (out.common_factor) {
        factor_pairs.emplace_back(i, j);
        continue;
      }
      offsets = offsets ? gcd(*offsets, out.off_diagonal) : out.off_diagonal;
    }
  }

  if (offsets) {
    UniPoly remaining = strip_u_power(*offsets);
    if (remaining.is_constant()) return {true, std::nullopt};
    // Decide each rational candidate offset exactly; gluing at a rational
    // offset does not need a rational glued parameter.
    for (const Rational& u0 : small_rational_roots(remaining)) {
      if (u0.is_zero()) continue;
      if (glued_at_offset(sheared, u0)) {
        return {false, witness_at_offset(sheared, u0, verify)};
      }
      const UniPoly factor("u", {-u0, Rational(1)});
      while (true) {
        auto [q, r] = divrem(remaining, factor);
        if (!r.is_zero()) break;
        remaining = q;
      }
    }
    if (remaining.is_constant()) return {true, std::nullopt};
    if (pair_is_curve) {
      // Residual roots of the single pair resultant are genuine gluings even
      // when no glued parameter is rational.
      return {false, std::nullopt};
    }
  } else {
    // Every pair shares a factor; probe the slices for a verified witness.
    for (const auto& [i, j] : factor_pairs) {
      SeededRng probe = rng.fork(i * 31 + j);
      if (auto w = common_factor_witness(sheared[i], sheared[j], probe, verify)) {
        return {false, w};
      }
    }
    if (pair_is_curve) return {false, std::nullopt};
  }

  // Irrational candidate offsets left: fall back to seeded random plane
  // projections, which can certify either outcome when they land well.
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    SeededRng draw = rng.fork(static_cast<std::uint64_t>(attempt) + 101);
    const UniPoly p = random_linear_form(draw, c.dimension()).pullback(c);
    const UniPoly q = random_linear_form(draw, c.dimension()).pullback(c);
    if (p.degree() == std::optional<std::size_t>(1) ||
        q.degree() == std::optional<std::size_t>(1)) {
      return {true, std::nullopt};
    }
    if (p.is_constant() || q.is_constant()) continue;
    const MultiPoly hp = sheared_divided_difference(p, vars, "#u", "#s");
    const MultiPoly hq = sheared_divided_difference(q, vars, "#u", "#s");
    const PairOutcome out = analyze_pair(hp, hq);
    if (out.injective) return {true, std::nullopt};
    const std::vector<MultiPoly> pair{hp, hq};
    if (out.common_factor) {
      SeededRng probe = draw.fork(7);
      if (auto w = common_factor_witness(hp, hq, probe, verify)) return {false, w};
      continue;
    }
    for (const Rational& u0 : small_rational_roots(out.off_diagonal)) {
      if (u0.is_zero()) continue;
      if (auto w = witness_at_offset(pair, u0, verify)) return {false, w};
    }
  }
  throw InconclusiveAfterRetries("gluing candidates stayed ambiguous for the space curve");
}

ParametrizedCurve graph_curve(const ParametrizedCurve& c, const UniPoly& h) {
  if (h.parameter() != c.parameter()) {
    throw VariableMismatch("pullback parameter differs from the curve parameter");
  }
  std::vector<std::string> names = c.variable_names();
  std::string fresh = "w";
  int counter = 0;
  while (std::find(names.begin(), names.end(), fresh) != names.end() ||
         fresh == c.parameter()) {
    fresh = "w" + std::to_string(++counter);
  }
  names.push_back(fresh);
  std::vector<UniPoly> gamma = c.components();
  gamma.push_back(h);
  return ParametrizedCurve(std::move(names), std::move(gamma));
}

ConeDirection cone_direction(const ParametrizedCurve& c) {
  const std::size_t D = c.degree();
  std::vector<Rational> top;
  top.reserve(c.dimension());
  for (const auto& g : c.components()) top.push_back(g.coeff(D));
  return ConeDirection(std::move(top));
}

}  // namespace curvegrowth
