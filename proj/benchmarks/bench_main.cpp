#include <benchmark/benchmark.h>

#include <memory>

#include "dtqft/bimodule.hpp"
#include "dtqft/diagram.hpp"
#include "dtqft/frobenius.hpp"
#include "dtqft/oc_tqft.hpp"
#include "dtqft/pivotal.hpp"
#include "dtqft/registry.hpp"
#include "dtqft/sampling.hpp"

using namespace dtqft;

namespace {

const Field Q = Field::rationals();

AlgebraPtr shared(FrobeniusAlgebra a) { return std::make_shared<const FrobeniusAlgebra>(std::move(a)); }

const AlgebraPtr& ground() {
  static const AlgebraPtr k = shared(trivial_algebra(Q));
  return k;
}
const AlgebraPtr& qs3() {
  static const AlgebraPtr a = shared(group_algebra(symmetric_group_3(), Q));
  return a;
}
const AlgebraPtr& m2() {
  static const AlgebraPtr a = shared(matrix_algebra(2, Q));
  return a;
}

BimodulePtr sample(std::uint64_t seed, const AlgebraPtr& b, const AlgebraPtr& a, std::size_t max_dim) {
  Rng rng(seed);
  return std::make_shared<const Bimodule>(random_bimodule(rng, b, a, ground(), max_dim, "x"));
}

void BM_TensorOverRegular(benchmark::State& state) {
  Bimodule r = regular_bimodule(qs3());
  for (auto _ : state) benchmark::DoNotOptimize(tensor_over(r, r));
}
BENCHMARK(BM_TensorOverRegular);

void BM_HomSpace(benchmark::State& state) {
  auto x = sample(static_cast<std::uint64_t>(state.range(0)), qs3(), m2(), static_cast<std::size_t>(state.range(0)));
  OneMorWord w({Letter{x, Sign::plus}});
  composite(w);
  state.counters["dim"] = static_cast<double>(x->dim());
  for (auto _ : state) benchmark::DoNotOptimize(hom_space(w, w));
}
BENCHMARK(BM_HomSpace)->Arg(4)->Arg(8)->Arg(12);

// Each iteration builds a new bimodule so the adjunction cache stays cold.
void BM_AdjunctionMapsCold(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state) {
    auto x = sample(seed++, qs3(), m2(), 8);
    benchmark::DoNotOptimize(adjunction_maps(x));
  }
}
BENCHMARK(BM_AdjunctionMapsCold)->Iterations(20);

void BM_LeftTrace(benchmark::State& state) {
  auto x = sample(3, qs3(), m2(), 8);
  OneMorWord w({Letter{x, Sign::plus}, Letter{x, Sign::minus}});
  Rng rng(4);
  TwoMorphism psi = random_morphism(rng, hom_space(w, w));
  left_trace(psi);
  for (auto _ : state) benchmark::DoNotOptimize(left_trace(psi));
}
BENCHMARK(BM_LeftTrace);

void BM_LeftTraceByComposite(benchmark::State& state) {
  auto x = sample(3, qs3(), m2(), 8);
  OneMorWord w({Letter{x, Sign::plus}, Letter{x, Sign::minus}});
  Rng rng(4);
  TwoMorphism psi = random_morphism(rng, hom_space(w, w));
  left_trace_by_composite(psi);
  for (auto _ : state) benchmark::DoNotOptimize(left_trace_by_composite(psi));
}
BENCHMARK(BM_LeftTraceByComposite);

void BM_ClosedSector(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(closed_sector(qs3()));
}
BENCHMARK(BM_ClosedSector);

void BM_CyclicCoinvariants(benchmark::State& state) {
  auto x = sample(9, qs3(), m2(), 8);
  DefectCircle c{{Letter{x, Sign::plus}, Letter{x, Sign::minus}}, qs3()};
  for (auto _ : state) benchmark::DoNotOptimize(cyclic_coinvariants(c));
}
BENCHMARK(BM_CyclicCoinvariants);

void BM_EvaluateZigzag(benchmark::State& state) {
  Registry reg(Q);
  reg.add_algebra(ground());
  reg.add_algebra(m2());
  std::vector<Matrix> left;
  for (std::size_t i = 0; i < 4; ++i) {
    Matrix e(Q, 2, 2);
    e(i / 2, i % 2) = Scalar(1);
    left.push_back(e);
  }
  reg.add_bimodule(std::make_shared<const Bimodule>("V", m2(), ground(), 2, left, std::vector<Matrix>{Matrix::identity(Q, 2)}));
  Diagram d = parse_diagram("id:V:- cupL:V\ncapL:V id:V:-");
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(d, reg));
}
BENCHMARK(BM_EvaluateZigzag);

}  // namespace

BENCHMARK_MAIN();
