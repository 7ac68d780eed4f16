#include <benchmark/benchmark.h>

#include "rsbf/minpoly.hpp"
#include "rsbf/pipeline.hpp"
#include "rsbf/rules_matrix.hpp"
#include "rsbf/weight.hpp"

namespace {

const rsbf::RSFunctionSpec& triple() {
  static const rsbf::RSFunctionSpec spec = rsbf::parse_spec("1,2,6;1,2;1,6");
  return spec;
}

void BM_Weight(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rsbf::weight(triple(), n, rsbf::Interpretation::kOrbitDistinct));
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_Weight)->DenseRange(16, 24, 4)->Unit(benchmark::kMillisecond);

void BM_WeightSingleThread(benchmark::State& state) {
  const auto masks = rsbf::function_monomials(triple(), 22, rsbf::Interpretation::kOrbitDistinct);
  for (auto _ : state) benchmark::DoNotOptimize(rsbf::monomial_sum_weight(masks, 22, 14, 1));
}
BENCHMARK(BM_WeightSingleThread)->Unit(benchmark::kMillisecond);

void BM_BuildRulesMatrix(benchmark::State& state) {
  const auto spec = rsbf::parse_spec(state.range(0) == 0 ? "1,2,6;1,2;1,6" : "1,3,11");
  for (auto _ : state) benchmark::DoNotOptimize(rsbf::build_rules_matrix(spec));
}
BENCHMARK(BM_BuildRulesMatrix)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MinimalPolynomial(benchmark::State& state) {
  const auto method = static_cast<rsbf::MinpolyMethod>(state.range(0));
  const auto matrix = rsbf::build_rules_matrix(triple()).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(rsbf::minimal_polynomial(matrix, {method}));
  state.SetLabel(std::string(rsbf::to_string(method)));
}
BENCHMARK(BM_MinimalPolynomial)
    ->Arg(static_cast<int>(rsbf::MinpolyMethod::kDenseDependence))
    ->Arg(static_cast<int>(rsbf::MinpolyMethod::kVectorLcm))
    ->Arg(static_cast<int>(rsbf::MinpolyMethod::kModular))
    ->Unit(benchmark::kMillisecond);

void BM_MinimalPolynomialOrder145(benchmark::State& state) {
  const auto matrix = rsbf::build_rules_matrix(rsbf::parse_spec("1,3,11")).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(rsbf::minimal_polynomial(matrix, {rsbf::MinpolyMethod::kModular}));
}
BENCHMARK(BM_MinimalPolynomialOrder145)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
