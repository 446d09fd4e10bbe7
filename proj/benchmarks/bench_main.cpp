#include <benchmark/benchmark.h>

#include "schurpol/invariants.hpp"
#include "schurpol/polarization.hpp"
#include "schurpol/schur_module.hpp"
#include "schurpol/tableau.hpp"

using namespace schurpol;

namespace {

void BM_ssyt_enumerate(benchmark::State& state) {
  const Partition lambda{3, 2, 1};
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ssyt_enumerate(lambda, m).size());
}
BENCHMARK(BM_ssyt_enumerate)->DenseRange(3, 6);

template <class F>
void BM_realize_schur(benchmark::State& state, F field) {
  const Partition lambda{2, 1, 1};
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(realize_schur(lambda, m, field).space.dim());
}
BENCHMARK_CAPTURE(BM_realize_schur, q, Rationals{})->DenseRange(3, 5);
BENCHMARK_CAPTURE(BM_realize_schur, fp5, PrimeField(5))->DenseRange(3, 5);

void BM_gl_closure_sym_d(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  PrimeField f2(2);
  auto src = embed(realize_schur(Partition{d}, 1, f2), 3);
  for (auto _ : state) benchmark::DoNotOptimize(gl_closure(src.space, src.ambient).dim());
}
BENCHMARK(BM_gl_closure_sym_d)->DenseRange(2, 5);

void BM_polarization_check(benchmark::State& state) {
  const Partition lambda{2, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(polarization_equality_check(lambda, 2, static_cast<int>(state.range(0)),
                                                         FieldSpec::rationals()).equal);
  }
}
BENCHMARK(BM_polarization_check)->DenseRange(3, 4);

void BM_invariant_space_conj2(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  auto action = ActionSpec::gl_conjugation(2, 2, FieldSpec::rationals());
  for (auto _ : state) benchmark::DoNotOptimize(invariant_space(action, d, Rationals{}).dim());
}
BENCHMARK(BM_invariant_space_conj2)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_beta_scan_conj2(benchmark::State& state) {
  auto action = ActionSpec::gl_conjugation(2, static_cast<int>(state.range(0)), FieldSpec::prime(5));
  for (auto _ : state) benchmark::DoNotOptimize(beta_scan(action, 4).beta_lower);
}
BENCHMARK(BM_beta_scan_conj2)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
