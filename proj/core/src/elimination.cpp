#include "curvegrowth/elimination.hpp"

#include <algorithm>

#include "curvegrowth/errors.hpp"
#include "curvegrowth/linalg.hpp"
#include "curvegrowth/rng.hpp"

namespace curvegrowth {

namespace {

// Elimination variable name guaranteed to differ from the output names.
std::string fresh_internal_name(const std::vector<std::string>& taken) {
  std::string name = "#s";
  while (std::find(taken.begin(), taken.end(), name) != taken.end()) name += "s";
  return name;
}

// Scales a polynomial that is monic in its extraction variable to primitive
// integer coefficients; scaling factors are positive, so the sign of the
// monic leading coefficient is preserved.
MultiPoly primitive_scaled(const MultiPoly& f) {
  if (f.is_zero()) return f;
  Integer den_lcm(1);
  for (const auto& [exps, c] : f.terms()) {
    const Integer d = c.denominator();
    den_lcm = (den_lcm * d).div_trunc(Integer::gcd(den_lcm, d));
  }
  MultiPoly g = f.scale(Rational(den_lcm, Integer(1)));
  Integer content(0);
  for (const auto& [exps, c] : g.terms()) content = Integer::gcd(content, c.numerator());
  return g.scale(Rational(Integer(1), content));
}

// Dense coefficient-vector convolution; entries live over a shared ring.
std::vector<MultiPoly> convolve(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b,
                                const MultiPoly& zero) {
  std::vector<MultiPoly> out(a.size() + b.size() - 1, zero);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] = out[i + j] + a[i] * b[j];
    }
  }
  return out;
}

std::vector<MultiPoly> vec_pow(const std::vector<MultiPoly>& base, std::size_t e,
                               const MultiPoly& zero, const MultiPoly& one) {
  std::vector<MultiPoly> result{one};
  std::vector<MultiPoly> acc = base;
  while (e > 0) {
    if (e & 1) result = convolve(result, acc, zero);
    e >>= 1;
    if (e > 0) acc = convolve(acc, acc, zero);
  }
  return result;
}

// Exact e-th root of a monic coefficient vector (low-to-high in the
// extraction variable, leading entry the constant 1). Coefficients are
// recovered top-down: the t^(D-j) coefficient of F^e is e*f_(m-j) plus
// products of already-known higher coefficients, so each step is a single
// exact division by e. Returns nothing when R is not a perfect e-th power.
std::optional<std::vector<MultiPoly>> monic_nth_root(const std::vector<MultiPoly>& R,
                                                     std::size_t e) {
  const std::size_t D = R.size() - 1;
  if (e == 0 || D % e != 0) return std::nullopt;
  const std::size_t m = D / e;
  const std::vector<std::string> rest = R.front().variables();
  const MultiPoly zero = MultiPoly::zero(rest);
  const MultiPoly one = MultiPoly::constant(rest, Rational(1));
  std::vector<MultiPoly> F(m + 1, zero);
  F[m] = one;
  const Rational inv_e = Rational(1, static_cast<long>(e));
  for (std::size_t j = 1; j <= m; ++j) {
    const std::vector<MultiPoly> Fe = vec_pow(F, e, zero, one);
    const MultiPoly& cur = Fe[D - j];
    F[m - j] = (R[D - j] - cur).scale(inv_e);
  }
  const std::vector<MultiPoly> Fe = vec_pow(F, e, zero, one);
  for (std::size_t i = 0; i <= D; ++i) {
    if (Fe[i] != R[i]) return std::nullopt;
  }
  return F;
}

// The raw elimination resultant of a parametrized set is the e-th power of
// the irreducible minimal polynomial, e being the fiber count of the
// parametrization. Recovers the minimal polynomial by exact root
// extraction, scanning candidate multiplicities downward from the probe
// value (any candidate above the true multiplicity fails the exact
// verification; e = 1 always succeeds). Result is monic in `main`.
MultiPoly minimal_power_reduction(const MultiPoly& R, const std::string& main,
                                  std::size_t e_hint) {
  std::vector<MultiPoly> coeffs = R.coeffs_in(main);
  const std::size_t D = coeffs.size() - 1;
  if (D == 0) throw NonGenericProjection("eliminated set has no fiber direction");
  if (!coeffs.back().is_constant()) {
    throw NonGenericProjection("raw resultant leading coefficient is not constant");
  }
  const Rational lc = coeffs.back().constant_value();
  const Rational inv = lc.inverse();
  for (auto& a : coeffs) a = a.scale(inv);
  for (std::size_t e = std::min(e_hint, D); e >= 1; --e) {
    if (D % e != 0) continue;
    if (auto root = monic_nth_root(coeffs, e)) {
      // Reassemble over the original variable list.
      MultiPoly out = MultiPoly::zero(R.variables());
      const std::size_t idx = out.variable_index(main);
      for (std::size_t k = 0; k < root->size(); ++k) {
        if ((*root)[k].is_zero()) continue;
        std::vector<unsigned> exps(R.variables().size(), 0);
        exps[idx] = static_cast<unsigned>(k);
        out = out + (*root)[k].embedded(R.variables()) *
                        MultiPoly::monomial(R.variables(), exps, Rational(1));
      }
      return out;
    }
  }
  throw InvariantViolation("resultant is not a power of its minimal polynomial");
}

}  // namespace

MultiPoly sylvester_resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var) {
  if (f.variables() != g.variables()) {
    throw VariableMismatch("resultant inputs over different rings");
  }
  if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("resultant with a zero input");
  const std::vector<MultiPoly> fc = f.coeffs_in(var);
  const std::vector<MultiPoly> gc = g.coeffs_in(var);
  const std::size_t df = fc.size() - 1;
  const std::size_t dg = gc.size() - 1;
  if (df == 0 && dg == 0) {
    throw BothConstant("neither resultant input involves '" + var + "'");
  }
  if (df == 0) return fc[0].pow(dg);
  if (dg == 0) return gc[0].pow(df);

  const std::vector<std::string> rest = fc[0].variables();
  const std::size_t n = df + dg;
  PolyMatrix s(n, std::vector<MultiPoly>(n, MultiPoly::zero(rest)));
  for (std::size_t i = 0; i < dg; ++i) {
    for (std::size_t k = 0; k <= df; ++k) s[i][i + k] = fc[df - k];
  }
  for (std::size_t i = 0; i < df; ++i) {
    for (std::size_t k = 0; k <= dg; ++k) s[dg + i][i + k] = gc[dg - k];
  }
  return determinant_fraction_free(s);
}

std::size_t parametrization_multiplicity(const UniPoly& p, const UniPoly& q,
                                         std::uint64_t seed) {
  if (p.parameter() != q.parameter()) {
    throw VariableMismatch("pair map components use different parameters");
  }
  if (p.is_constant() && q.is_constant()) {
    throw BothConstant("pair map with two constant components");
  }
  SeededRng rng(seed);
  std::size_t best = 0;
  for (int probe = 0; probe < 3; ++probe) {
    const Rational s0(rng.uniform_int(-1000000, 1000000));
    const UniPoly a = p - UniPoly::constant(p.parameter(), p.evaluate(s0));
    const UniPoly b = q - UniPoly::constant(q.parameter(), q.evaluate(s0));
    const UniPoly g = gcd(a, b);
    const std::size_t d = *g.degree();  // s0 is a common root, so deg >= 1
    best = probe == 0 ? d : std::min(best, d);
  }
  return best;
}

MultiPoly implicitize_plane(const UniPoly& p, const UniPoly& q, const std::string& out_u,
                            const std::string& out_w, std::uint64_t seed) {
  if (p.parameter() != q.parameter()) {
    throw VariableMismatch("parametrization components use different parameters");
  }
  if (p.is_constant() && q.is_constant()) {
    throw BothConstant("both parametrization components are constant");
  }
  if (out_u == out_w) throw NameCollision("output variables must be distinct");
  const std::string s = fresh_internal_name({out_u, out_w});
  const std::vector<std::string> vars{out_u, out_w, s};
  const MultiPoly A =
      MultiPoly::from_unipoly(vars, p.renamed(s)) - MultiPoly::variable(vars, out_u);
  const MultiPoly B =
      MultiPoly::from_unipoly(vars, q.renamed(s)) - MultiPoly::variable(vars, out_w);
  const MultiPoly raw = sylvester_resultant(A, B, s);
  const std::size_t e_hint = parametrization_multiplicity(p, q, seed);
  const std::string main = raw.degree_in(out_w).value_or(0) >= 1 ? out_w : out_u;
  const MultiPoly minimal = minimal_power_reduction(raw, main, e_hint);
  return primitive_scaled(minimal);
}

BivariateMonic::BivariateMonic(std::vector<UniPoly> lower_coeffs) {
  coeffs_.reserve(lower_coeffs.size());
  for (auto& a : lower_coeffs) coeffs_.push_back(a.renamed("x"));
  if (coeffs_.empty()) throw ConstantPolynomial("fiber polynomial must involve t");
}

BivariateMonic BivariateMonic::from_polynomial(const MultiPoly& p, const std::string& x_name,
                                               const std::string& t_name) {
  for (const auto& v : p.variables()) {
    if (v != x_name && v != t_name) {
      throw VariableMismatch("fiber polynomial may only involve '" + x_name + "' and '" +
                             t_name + "'");
    }
  }
  if (p.is_zero()) throw ZeroPolynomial("fiber polynomial is zero");
  std::vector<MultiPoly> tc = p.coeffs_in(t_name);
  const std::size_t d = tc.size() - 1;
  if (d == 0) throw ConstantPolynomial("fiber polynomial must involve '" + t_name + "'");
  if (!tc.back().is_constant()) {
    throw NonGenericProjection("leading t-coefficient is not a nonzero constant");
  }
  const Rational inv = tc.back().constant_value().inverse();
  std::vector<UniPoly> lower;
  lower.reserve(d);
  for (std::size_t j = 1; j <= d; ++j) {
    lower.push_back(tc[d - j].scale(inv).to_unipoly().renamed("x"));
  }
  return BivariateMonic(std::move(lower));
}

MultiPoly BivariateMonic::to_multipoly() const {
  const std::vector<std::string> vars{"x", "t"};
  const std::size_t d = t_degree();
  MultiPoly out = MultiPoly::monomial(vars, {0, static_cast<unsigned>(d)}, Rational(1));
  for (std::size_t j = 1; j <= d; ++j) {
    const MultiPoly aj = MultiPoly::from_unipoly(vars, lower_coeff(j));
    const MultiPoly tpow =
        MultiPoly::monomial(vars, {0, static_cast<unsigned>(d - j)}, Rational(1));
    out = out + aj * tpow;
  }
  return out;
}

Rational BivariateMonic::evaluate(const Rational& x0, const Rational& t0) const {
  const std::size_t d = t_degree();
  Rational acc = t0.pow(static_cast<long>(d));
  for (std::size_t j = 1; j <= d; ++j) {
    acc += lower_coeff(j).evaluate(x0) * t0.pow(static_cast<long>(d - j));
  }
  return acc;
}

BivariateMonic graph_fiber_polynomial(const ParametrizedCurve& curve, const UniPoly& h,
                                      const LinearForm& ell, std::uint64_t seed) {
  if (h.parameter() != curve.parameter()) {
    throw VariableMismatch("pullback parameter differs from the curve parameter");
  }
  const std::size_t D = curve.degree();
  const UniPoly lg = ell.pullback(curve);
  if (lg.degree() != std::optional<std::size_t>(D)) {
    throw NonGenericProjection("linear form does not realize the curve degree");
  }
  if (h.is_constant()) {
    // Single value on every fiber: minimal polynomial t - c.
    return BivariateMonic({UniPoly::constant("x", -h.constant_term())});
  }
  const std::string s = fresh_internal_name({"x", "t"});
  const std::vector<std::string> vars{"x", "t", s};
  const MultiPoly A =
      MultiPoly::from_unipoly(vars, lg.renamed(s)) - MultiPoly::variable(vars, "x");
  const MultiPoly B =
      MultiPoly::variable(vars, "t") - MultiPoly::from_unipoly(vars, h.renamed(s));
  const MultiPoly raw = sylvester_resultant(A, B, s);
  const std::vector<MultiPoly> tc = raw.coeffs_in("t");
  if (!tc.back().is_constant()) {
    throw NonGenericProjection("raw fiber resultant is not monic in t up to a constant");
  }
  const std::size_t e_hint = parametrization_multiplicity(lg, h, SeededRng(seed).fork(1).next_u64());
  const MultiPoly minimal = minimal_power_reduction(raw, "t", e_hint);
  return BivariateMonic::from_polynomial(minimal, "x", "t");
}

std::size_t distinct_values_on_fiber(const UniPoly& u, const UniPoly& h) {
  if (u.parameter() != h.parameter()) {
    throw VariableMismatch("fiber polynomial and pullback use different parameters");
  }
  if (u.is_zero()) throw ZeroPolynomial("fiber polynomial is zero");
  if (u.is_constant()) throw ConstantPolynomial("fiber polynomial must be nonconstant");
  if (!is_squarefree(u)) throw NotSquarefree("fiber polynomial has a repeated root");
  const std::string s = fresh_internal_name({"w"});
  const std::vector<std::string> vars{"w", s};
  const MultiPoly A = MultiPoly::from_unipoly(vars, u.renamed(s));
  const MultiPoly B =
      MultiPoly::variable(vars, "w") - MultiPoly::from_unipoly(vars, h.renamed(s));
  const UniPoly values = sylvester_resultant(A, B, s).to_unipoly();
  return *gcd_squarefree(values).squarefree_part.degree();
}

}  // namespace curvegrowth
