#include <benchmark/benchmark.h>

#include "curvegrowth/elimination.hpp"
#include "curvegrowth/growth.hpp"
#include "curvegrowth/rng.hpp"

using namespace curvegrowth;

namespace {

ParametrizedCurve cusp() {
  return ParametrizedCurve({"x", "y"}, {UniPoly::monomial("t", Rational(1), 2),
                                        UniPoly::monomial("t", Rational(1), 3)});
}

UniPoly dense_poly(const std::string& param, std::size_t degree, std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<Rational> coeffs;
  coeffs.reserve(degree + 1);
  for (std::size_t i = 0; i < degree; ++i) coeffs.emplace_back(rng.uniform_int(-9, 9));
  coeffs.emplace_back(rng.uniform_int(1, 9));
  return UniPoly(param, std::move(coeffs));
}

void BM_RationalMul(benchmark::State& state) {
  const Rational a(123456789, 987654);
  const Rational b(-987654321, 123456);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_RationalMul);

void BM_UniPolyMul(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const UniPoly p = dense_poly("t", d, 1);
  const UniPoly q = dense_poly("t", d, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(p * q);
  }
}
BENCHMARK(BM_UniPolyMul)->Arg(8)->Arg(32)->Arg(128);

void BM_SylvesterResultant(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const std::vector<std::string> vars{"x", "t", "s"};
  const MultiPoly a = MultiPoly::from_unipoly(vars, dense_poly("s", d, 3)) -
                      MultiPoly::variable(vars, "x");
  const MultiPoly b = MultiPoly::variable(vars, "t") -
                      MultiPoly::from_unipoly(vars, dense_poly("s", d, 4));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sylvester_resultant(a, b, "s"));
  }
}
BENCHMARK(BM_SylvesterResultant)->Arg(4)->Arg(6)->Arg(8);

void BM_GraphFiberPolynomial(benchmark::State& state) {
  const ParametrizedCurve curve = cusp();
  const UniPoly h = dense_poly("t", static_cast<std::size_t>(state.range(0)), 5);
  const LinearForm ell({Rational(3), Rational(2)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(graph_fiber_polynomial(curve, h, ell, 7));
  }
}
BENCHMARK(BM_GraphFiberPolynomial)->Arg(4)->Arg(8);

void BM_Rationalize(benchmark::State& state) {
  const ParametrizedCurve curve = cusp();
  const UniPoly h = UniPoly::variable("t");
  for (auto _ : state) {
    benchmark::DoNotOptimize(rationalize(curve, h, 3));
  }
}
BENCHMARK(BM_Rationalize);

void BM_FullReport(benchmark::State& state) {
  const ParametrizedCurve curve = cusp();
  const MultiPoly num = MultiPoly::variable({"x", "y"}, "y");
  const MultiPoly den = MultiPoly::variable({"x", "y"}, "x");
  for (auto _ : state) {
    benchmark::DoNotOptimize(full_report(curve, num, den, 7));
  }
}
BENCHMARK(BM_FullReport);

}  // namespace

BENCHMARK_MAIN();
