#include <doctest.h>

#include <cmath>

#include "curvegrowth/errors.hpp"
#include "curvegrowth/growth.hpp"
#include "support.hpp"

using namespace curvegrowth;
using curvegrowth::testing::cusp_curve;
using curvegrowth::testing::random_normalized_instance;

namespace {

const std::vector<std::string> kXY{"x", "y"};

MultiPoly var(const std::string& n) { return MultiPoly::variable(kXY, n); }
MultiPoly one() { return MultiPoly::constant(kXY, Rational(1)); }

CurveFunction cusp_y_over_x() {
  return restrict_to_curve(cusp_curve(), var("y"), var("x"));
}

}  // namespace

TEST_CASE("restriction to the cusp") {
  SUBCASE("y/x pulls back to t") {
    const CurveFunction f = cusp_y_over_x();
    CHECK(f.pullback == UniPoly::variable("t"));
  }
  SUBCASE("1/x blows up at the origin") {
    CHECK_THROWS_AS(restrict_to_curve(cusp_curve(), one(), var("x")), NotCHolomorphic);
  }
  SUBCASE("(x^3 - y^2 + x)/x restricts to the constant 1") {
    const MultiPoly num = var("x") * var("x") * var("x") - var("y") * var("y") + var("x");
    const CurveFunction f = restrict_to_curve(cusp_curve(), num, var("x"));
    CHECK(f.pullback == UniPoly::constant("t", Rational(1)));
  }
  SUBCASE("zero denominator pullback is rejected") {
    const MultiPoly vanishing = var("y") * var("y") - var("x") * var("x") * var("x");
    CHECK_THROWS_AS(restrict_to_curve(cusp_curve(), one(), vanishing),
                    DenominatorVanishesOnCurve);
  }
}

TEST_CASE("growth exponent") {
  CHECK(growth_exponent(cusp_y_over_x()) == Rational(1, 3));
  CHECK(growth_exponent(restrict_to_curve(cusp_curve(), var("x"), one())) == Rational(2, 3));
  CHECK(growth_exponent(restrict_to_curve(cusp_curve(), one(), one())) == Rational(0));
}

TEST_CASE("geometric degree") {
  CHECK(geometric_degree(cusp_y_over_x()) == 1);
  CHECK(geometric_degree(restrict_to_curve(cusp_curve(), var("x"), one())) == 2);
  CHECK(geometric_degree(pullback_function(cusp_curve(), UniPoly::monomial("t", Rational(1), 3))) == 3);
  CHECK_THROWS_AS(geometric_degree(restrict_to_curve(cusp_curve(), one(), one())),
                  ConstantFunction);
}

TEST_CASE("delta of monic fiber polynomials") {
  SUBCASE("t^2 - x^3 gives 3/2") {
    const BivariateMonic p({UniPoly("x"), UniPoly("x", {Rational(0), Rational(0), Rational(0),
                                                        Rational(-1)})});
    CHECK(delta(p) == Rational(3, 2));
  }
  SUBCASE("t^3 + t^2 - x gives 1/3, the cusp fiber polynomial") {
    const BivariateMonic p({UniPoly::constant("x", Rational(1)), UniPoly("x"),
                            -UniPoly::variable("x")});
    CHECK(delta(p) == Rational(1, 3));
  }
  SUBCASE("pure power t^d gives 0") {
    const BivariateMonic p({UniPoly("x"), UniPoly("x"), UniPoly("x")});
    CHECK(delta(p) == Rational(0));
  }
}

TEST_CASE("growth exponent via elimination matches the direct route") {
  CHECK(growth_via_elimination(cusp_y_over_x(), 5) == Rational(1, 3));
  CHECK(growth_via_elimination(restrict_to_curve(cusp_curve(), var("x"), one()), 5) ==
        Rational(2, 3));
  CHECK(growth_via_elimination(restrict_to_curve(cusp_curve(), one(), one()), 5) == Rational(0));
}

TEST_CASE("elimination route refuses non-normalized curves") {
  const ParametrizedCurve doubled(
      {"x", "y"}, {UniPoly::monomial("t", Rational(1), 2), UniPoly::monomial("t", Rational(1), 4)});
  const CurveFunction f = pullback_function(doubled, UniPoly::monomial("t", Rational(1), 4));
  CHECK_THROWS_AS(growth_via_elimination(f, 5), CurveNotNormalized);
}

TEST_CASE("degree bound from the graph") {
  SUBCASE("cusp y/x: bound 1 holds") {
    const TwBoundCheck b = tw_bound_check(cusp_y_over_x());
    CHECK(b.bound == Rational(1));
    CHECK(b.holds);
  }
  SUBCASE("pullback t^4 on the cusp: bound 2") {
    const CurveFunction f = pullback_function(cusp_curve(), UniPoly::monomial("t", Rational(1), 4));
    const TwBoundCheck b = tw_bound_check(f);
    CHECK(b.bound == Rational(2));
    CHECK(growth_exponent(f) == Rational(4, 3));
    CHECK(b.holds);
  }
  SUBCASE("constant function: bound 1 over 0") {
    const TwBoundCheck b = tw_bound_check(restrict_to_curve(cusp_curve(), one(), one()));
    CHECK(b.bound == Rational(1));
    CHECK(b.holds);
  }
}

TEST_CASE("the four equivalent conditions for exponent <= 1") {
  SUBCASE("cusp y/x: all true") {
    const auto flags = le_one_equivalences(cusp_y_over_x(), 5);
    CHECK(flags == std::array<bool, 4>{true, true, true, true});
  }
  SUBCASE("pullback t^4: all false") {
    const CurveFunction f = pullback_function(cusp_curve(), UniPoly::monomial("t", Rational(1), 4));
    const auto flags = le_one_equivalences(f, 5);
    CHECK(flags == std::array<bool, 4>{false, false, false, false});
  }
  SUBCASE("constant function: all true") {
    const auto flags = le_one_equivalences(restrict_to_curve(cusp_curve(), one(), one()), 5);
    CHECK(flags == std::array<bool, 4>{true, true, true, true});
  }
}

TEST_CASE("mapping reports") {
  SUBCASE("single component y/x: equality at d = 1") {
    const BezoutReport r = bezout_mapping_report(cusp_curve(), {{var("y"), var("x")}});
    CHECK(r.geometric_degree == 1);
    CHECK(r.growth == Rational(1, 3));
    CHECK(r.equality_holds);
    REQUIRE(r.bound_holds.has_value());
    CHECK(*r.bound_holds);
  }
  SUBCASE("mapping (x, y)") {
    const BezoutReport r =
        bezout_mapping_report(cusp_curve(), {{var("x"), one()}, {var("y"), one()}});
    CHECK(r.geometric_degree == 3);
    CHECK(r.growth == Rational(1));
    CHECK(r.equality_holds);
    CHECK(!r.bound_holds.has_value());
  }
  SUBCASE("mapping (y/x, x)") {
    const BezoutReport r =
        bezout_mapping_report(cusp_curve(), {{var("y"), var("x")}, {var("x"), one()}});
    CHECK(r.geometric_degree == 2);
    CHECK(r.growth == Rational(2, 3));
    CHECK(r.equality_holds);
  }
  SUBCASE("all-constant mappings are rejected") {
    CHECK_THROWS_AS(bezout_mapping_report(cusp_curve(), {{one(), one()}}), AllConstant);
  }
}

TEST_CASE("fiber injectivity at desk scale") {
  const FiberInjectivityReport r = fiber_injectivity_check(cusp_y_over_x(), 7, 40);
  CHECK(r.counted > 0);
  CHECK(r.pass);
  const CurveFunction g = restrict_to_curve(cusp_curve(), var("x"), one());
  const FiberInjectivityReport r2 = fiber_injectivity_check(g, 7, 40);
  CHECK(r2.pass);
  CHECK_THROWS_AS(fiber_injectivity_check(restrict_to_curve(cusp_curve(), one(), one()), 7, 10),
                  ConstantFunction);
}

TEST_CASE("rationalize recovers representatives") {
  SUBCASE("cusp pullback t returns exactly (y, x)") {
    const auto [p, q] = rationalize(cusp_curve(), UniPoly::variable("t"), 4);
    CHECK(p == var("y"));
    CHECK(q == var("x"));
  }
  SUBCASE("cusp pullback t^2 returns (x, 1)") {
    const auto [p, q] = rationalize(cusp_curve(), UniPoly::monomial("t", Rational(1), 2), 4);
    CHECK(p == var("x"));
    CHECK(q == one());
  }
  SUBCASE("zero pullback gives (0, 1)") {
    const auto [p, q] = rationalize(cusp_curve(), UniPoly("t"), 4);
    CHECK(p.is_zero());
    CHECK(q == one());
  }
  SUBCASE("identity and degree bound on constructed cases") {
    const ParametrizedCurve c({"x", "y", "z"},
                              {UniPoly::monomial("t", Rational(1), 3),
                               UniPoly::monomial("t", Rational(1), 4),
                               UniPoly::monomial("t", Rational(1), 5)});
    const auto [p, q] = rationalize(c, UniPoly::variable("t"), 4);
    CHECK(*q.degree() <= c.degree() - 1);
    const UniPoly pg = p.compose(c.components());
    const UniPoly qg = q.compose(c.components());
    CHECK(pg == UniPoly::variable("t") * qg);
  }
  SUBCASE("glued curves are refused") {
    const ParametrizedCurve doubled({"x", "y"}, {UniPoly::monomial("t", Rational(1), 2),
                                                 UniPoly::monomial("t", Rational(1), 4)});
    CHECK_THROWS_AS(rationalize(doubled, UniPoly::monomial("t", Rational(1), 2), 3),
                    CurveNotInjective);
  }
  SUBCASE("cap exhaustion reports no representative") {
    // Pullback t on the cusp needs numerator degree 1; cap 0 must fail.
    CHECK_THROWS_AS(rationalize(cusp_curve(), UniPoly::variable("t"), 0),
                    NoRepresentativeFound);
  }
}

TEST_CASE("enumerated growth exponents") {
  SUBCASE("cusp up to degree 6") {
    const auto got = enumerate_growth_exponents(cusp_curve(), 6);
    const std::set<Rational> expected{Rational(1, 3), Rational(2, 3), Rational(1),
                                      Rational(4, 3), Rational(5, 3), Rational(2)};
    CHECK(got == expected);
  }
  SUBCASE("line (t, 0) gives the integers") {
    const ParametrizedCurve line({"x", "y"}, {UniPoly::variable("t"), UniPoly("t")});
    const auto got = enumerate_growth_exponents(line, 3);
    CHECK(got == std::set<Rational>{Rational(1), Rational(2), Rational(3)});
  }
  SUBCASE("parabola halves") {
    const ParametrizedCurve c({"x", "y"},
                              {UniPoly::variable("t"), UniPoly::monomial("t", Rational(1), 2)});
    CHECK(enumerate_growth_exponents(c, 4) ==
          std::set<Rational>{Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)});
  }
}

TEST_CASE("floating growth estimates agree with the exact exponent") {
  const auto ladder = default_sample_ladder();
  CHECK(std::fabs(sample_growth_estimate(cusp_y_over_x(), ladder) - 1.0 / 3.0) <= 0.02);
  CHECK(std::fabs(sample_growth_estimate(restrict_to_curve(cusp_curve(), var("x"), one()),
                                         ladder) -
                  2.0 / 3.0) <= 0.02);
  const CurveFunction cubic = pullback_function(cusp_curve(), UniPoly::monomial("t", Rational(1), 3));
  CHECK(std::fabs(sample_growth_estimate(cubic, ladder) - 1.0) <= 0.02);
}

TEST_CASE("graph degree of a polynomial") {
  const MultiPoly f = var("x") * var("x") + var("y") * var("y") * var("y");
  CHECK(graph_degree_of_polynomial(f) == 3);
  CHECK(graph_degree_of_polynomial(var("x")) == 1);
  const MultiPoly g = var("x") * var("x") * var("y") + MultiPoly::constant(kXY, Rational(7));
  CHECK(graph_degree_of_polynomial(g) == 3);
  CHECK_THROWS_AS(graph_degree_of_polynomial(one()), ConstantPolynomial);
}

TEST_CASE("full report on the cusp reproduces the worked example") {
  const GrowthReport r = full_report(cusp_curve(), var("y"), var("x"), 7);
  CHECK(r.growth_exponent == Rational(1, 3));
  CHECK(r.geometric_degree == 1);
  CHECK(r.curve_degree == 3);
  CHECK(r.graph_degree == 3);
  CHECK(r.tw_bound == Rational(1));
  CHECK(r.tw_bound_holds);
  CHECK(r.bezout_equality_holds);
  CHECK(r.le_one_flags == std::array<bool, 4>{true, true, true, true});
  CHECK(r.delta_cross_check == Rational(1, 3));
  CHECK(r.cone_direction_graph.direction() ==
        std::vector<Rational>{Rational(0), Rational(1), Rational(0)});
}

TEST_CASE("full report with exponent above one flips every flag") {
  const GrowthReport r = full_report(cusp_curve(), var("x") * var("x"), one(), 7);
  CHECK(r.growth_exponent == Rational(4, 3));
  CHECK(r.geometric_degree == 4);
  CHECK(r.graph_degree == 4);
  CHECK(r.tw_bound == Rational(2));
  CHECK(r.tw_bound_holds);
  CHECK(r.le_one_flags == std::array<bool, 4>{false, false, false, false});
  CHECK(r.bezout_equality_holds);
  CHECK(r.cone_direction_graph.is_last_axis());
}

TEST_CASE("full report on x/1 and on a line") {
  const GrowthReport r = full_report(cusp_curve(), var("x"), one(), 7);
  CHECK(r.growth_exponent == Rational(2, 3));
  CHECK(r.geometric_degree == 2);
  CHECK(r.graph_degree == 3);

  const ParametrizedCurve line({"x", "y"}, {UniPoly::variable("t"), UniPoly("t")});
  const GrowthReport rl =
      full_report(line, MultiPoly::variable(kXY, "x"), MultiPoly::constant(kXY, Rational(1)), 7);
  CHECK(rl.growth_exponent == Rational(1));
  CHECK(rl.geometric_degree == 1);
  CHECK(rl.curve_degree == 1);
}

TEST_CASE("oracle equivalence and curve equality on random normalized instances") {
  SeededRng rng(901);
  for (int i = 0; i < 12; ++i) {
    const auto inst = random_normalized_instance(rng);
    const CurveFunction f = pullback_function(inst.curve, inst.pullback);
    const Rational direct = growth_exponent(f);
    CHECK(growth_via_elimination(f, rng.next_u64()) == direct);
    CHECK(Rational(static_cast<long>(geometric_degree(f))) ==
          Rational(static_cast<long>(inst.curve.degree())) * direct);
    CHECK(tw_bound_check(f).holds);
    const auto flags = le_one_equivalences(f, rng.next_u64());
    CHECK(flags[0] == flags[1]);
    CHECK(flags[1] == flags[2]);
    CHECK(flags[2] == flags[3]);
  }
}

TEST_CASE("algebra of the growth exponent") {
  SUBCASE("power rule through restricted powers") {
    const CurveFunction base = cusp_y_over_x();
    const Rational b = growth_exponent(base);
    for (std::size_t n = 2; n <= 4; ++n) {
      const CurveFunction fn =
          restrict_to_curve(cusp_curve(), var("y").pow(n), var("x").pow(n));
      CHECK(fn.pullback == base.pullback.pow(n));
      CHECK(growth_exponent(fn) == Rational(static_cast<long>(n)) * b);
    }
  }
  SUBCASE("product pullbacks add degrees exactly") {
    const UniPoly h1 = UniPoly::monomial("t", Rational(1), 2);
    const UniPoly h2("t", {Rational(1), Rational(1), Rational(0), Rational(1)});
    const CurveFunction f1 = pullback_function(cusp_curve(), h1);
    const CurveFunction f2 = pullback_function(cusp_curve(), h2);
    const CurveFunction prod = pullback_function(cusp_curve(), h1 * h2);
    CHECK(growth_exponent(prod) == growth_exponent(f1) + growth_exponent(f2));
  }
  SUBCASE("sum pullbacks obey the max rule, with a strict case") {
    const UniPoly h1 = UniPoly::monomial("t", Rational(1), 2);
    const UniPoly h2 = -h1 + UniPoly::variable("t");
    const CurveFunction f1 = pullback_function(cusp_curve(), h1);
    const CurveFunction f2 = pullback_function(cusp_curve(), h2);
    const CurveFunction sum = pullback_function(cusp_curve(), h1 + h2);
    const Rational bound = std::max(growth_exponent(f1), growth_exponent(f2));
    CHECK(growth_exponent(sum) <= bound);
    CHECK(growth_exponent(sum) < bound);  // constructed strict drop
  }
}

TEST_CASE("denominator of the growth exponent divides the curve degree") {
  SeededRng rng(907);
  for (int i = 0; i < 15; ++i) {
    const auto inst = random_normalized_instance(rng);
    const Rational b = growth_exponent(pullback_function(inst.curve, inst.pullback));
    const Integer deg(static_cast<long>(inst.curve.degree()));
    const Integer rem = deg - b.denominator() * deg.div_trunc(b.denominator());
    CHECK(rem.is_zero());
  }
}
