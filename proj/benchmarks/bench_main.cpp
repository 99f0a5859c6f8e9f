#include <benchmark/benchmark.h>

#include "subgrad/checks.hpp"
#include "subgrad/rng.hpp"
#include "subgrad/solver.hpp"
#include "subgrad/svm.hpp"
#include "subgrad/zoo.hpp"

namespace {

using namespace subgrad;

void BM_ProjectBall(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto region = FeasibleRegion::ball(zeros(d), 1.0);
  Rng rng(1);
  Vector x(d);
  for (auto& v : x) v = 2.0 * rng.uniform01() - 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(region.project(x));
  }
}
BENCHMARK(BM_ProjectBall)->Arg(8)->Arg(64)->Arg(512);

void BM_ProjectBox(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto region = FeasibleRegion::box(Vector(d, -1.0), Vector(d, 1.0));
  Rng rng(1);
  Vector x(d);
  for (auto& v : x) v = 4.0 * rng.uniform01() - 2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(region.project(x));
  }
}
BENCHMARK(BM_ProjectBox)->Arg(8)->Arg(64)->Arg(512);

void BM_ScheduleStep(benchmark::State& state) {
  const auto schedule = StepSchedule::quadratic_growth(2.0, 4.0);
  std::int64_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(schedule.step(k % 10000));
    ++k;
  }
}
BENCHMARK(BM_ScheduleStep);

void BM_DeterministicRun(benchmark::State& state) {
  const std::int64_t horizon = state.range(0);
  Problem problem = make_additive_composite(8, 1.0, 1.0, 2.0);
  const auto schedule = StepSchedule::constant_deterministic(1.0, horizon);
  RunOptions options;
  options.start = Vector(8, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        run_deterministic(problem, schedule, horizon, options));
  }
  state.SetItemsProcessed(state.iterations() * (horizon + 1));
}
BENCHMARK(BM_DeterministicRun)->Arg(1000)->Arg(10000);

void BM_StochasticSvmRun(benchmark::State& state) {
  const std::int64_t horizon = state.range(0);
  Problem svm = make_svm(make_synthetic_svm(50, 5, 0.1, 7));
  const auto schedule = StepSchedule::quad_regularized_svm(0.1);
  RunOptions options;
  options.record_objective = false;
  options.max_stored_coordinates = 0;
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        run_stochastic(svm, schedule, horizon, seed++, options));
  }
  state.SetItemsProcessed(state.iterations() * (horizon + 1));
}
BENCHMARK(BM_StochasticSvmRun)->Arg(1000)->Arg(10000);

void BM_Lemma3Enumeration(benchmark::State& state) {
  Problem svm = make_svm(make_synthetic_svm(50, 5, 0.1, 7));
  const Vector x(5, 0.3);
  const Vector y(5, -0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_lemma3_step(svm, x, y, 0.05));
  }
}
BENCHMARK(BM_Lemma3Enumeration);

void BM_WeightedAverage(benchmark::State& state) {
  Problem problem = make_holder_power(8, 1.0, 1.0);
  const auto schedule = StepSchedule::classic_strongly_convex(1.0);
  const RunTrace trace = run_stochastic(problem, schedule, 10000, 3,
                                        [] {
                                          RunOptions o;
                                          o.start = Vector(8, 1.0);
                                          return o;
                                        }());
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        weighted_average(trace, {AverageKind::linear_two_minus_weighted, 2.0}));
  }
}
BENCHMARK(BM_WeightedAverage);

}  // namespace

BENCHMARK_MAIN();
