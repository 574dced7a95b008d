#include <benchmark/benchmark.h>

#include <memory>
#include <random>
#include <vector>

#include "circcop/circular_joint.hpp"
#include "circcop/copula.hpp"
#include "circcop/dependence.hpp"
#include "circcop/sampling.hpp"

using namespace circcop;

namespace {

std::vector<std::pair<double, double>> unit_points(std::size_t n) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::pair<double, double>> out(n);
  for (auto& [u, v] : out) {
    u = unit(gen);
    v = unit(gen);
  }
  return out;
}

void BM_EvalMardia(benchmark::State& state) {
  const MardiaMixture c(0.7, UnitValue(0.7), UnitValue(0.4));
  const auto pts = unit_points(1024);
  for (auto _ : state) {
    double s = 0.0;
    for (const auto& [u, v] : pts) s += c(u, v);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pts.size()));
}
BENCHMARK(BM_EvalMardia);

void BM_ShiftedCopulaEval(benchmark::State& state) {
  const JointPtr joint = make_joint(std::make_shared<UpperBoundCopula>(),
                                    make_cardioid(0.1, Angle(kPi)), make_cardioid(0.3, Angle(kPi / 3)));
  const ShiftedCopula c(joint, {Angle(5 * kPi / 4), Angle(kPi / 8)});
  const auto pts = unit_points(256);
  for (auto _ : state) {
    double s = 0.0;
    for (const auto& [u, v] : pts) s += c(u, v);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pts.size()));
}
BENCHMARK(BM_ShiftedCopulaEval);

void BM_CheckShiftedUpperBoundGrid51(benchmark::State& state) {
  const CdfPtr f = make_cardioid(0.1, Angle(kPi));
  const CdfPtr g = make_cardioid(0.3, Angle(kPi / 3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_theorem1(f, g, {Angle(1.0), Angle(4.0)}, Grid{51}));
  }
}
BENCHMARK(BM_CheckShiftedUpperBoundGrid51)->Unit(benchmark::kMillisecond);

void BM_SampleMixture(benchmark::State& state) {
  const MardiaMixture model(0.7, UnitValue(0.7), UnitValue(0.4));
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_copula_chunked(model, n, 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleMixture)->Arg(1 << 12)->Arg(1 << 16);

void BM_SimulateCardioid(benchmark::State& state) {
  SimulationParams p;
  p.n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(simulate(p));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateCardioid)->Arg(500)->Arg(10000);

void BM_CircularMonotone(benchmark::State& state) {
  const MardiaMixture model(1.0, UnitValue(0.7), UnitValue(0.4));
  const UniformCircularCdf uniform;
  const SupportSet support(to_circular(
      sample_copula_chunked(model, static_cast<std::size_t>(state.range(0)), 9), uniform, uniform));
  for (auto _ : state) benchmark::DoNotOptimize(circular_monotone(support));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CircularMonotone)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

}  // namespace

BENCHMARK_MAIN();
