#include <benchmark/benchmark.h>

#include "framekit/oracle.hpp"
#include "framekit/random.hpp"
#include "framekit/sweeps.hpp"

using namespace framekit;
using oracle::Execution;

namespace {

Execution exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::kSerial : Execution::kParallel;
}

void label(benchmark::State& state) {
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

// Full GF(5)^4 from four vectors: 625 combinations.
void BM_EnumSpan(benchmark::State& state) {
  const FieldSpec gf5 = FieldSpec::prime(5);
  Rng rng(1);
  const Frame frame = random_frame(gf5, 4, 4, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::enum_span(frame.seq(), {}, exec_of(state)));
  }
  label(state);
}
BENCHMARK(BM_EnumSpan)->Arg(0)->Arg(1);

void BM_MemberBruteforce(benchmark::State& state) {
  const FieldSpec gf5 = FieldSpec::prime(5);
  Rng rng(2);
  const VecSequence seq = random_sequence(gf5, 4, 4, rng);
  const Vector target = random_vector(gf5, 4, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::member_bruteforce(seq, target, {}, exec_of(state)));
  }
  label(state);
}
BENCHMARK(BM_MemberBruteforce)->Arg(0)->Arg(1);

// Every 4-sequence drawn from a 3-dimensional subspace of GF(3)^4 (27^4 of
// them) must stay at rank <= 3.
void BM_MaximalityBruteforce(benchmark::State& state) {
  const FieldSpec gf3 = FieldSpec::prime(3);
  Rng rng(3);
  const Frame frame = random_frame(gf3, 4, 3, rng);
  const Subspace sub = span_of(frame.seq());
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        oracle::maximality_bruteforce(frame, sub, 4, {}, exec_of(state)));
  }
  label(state);
}
BENCHMARK(BM_MaximalityBruteforce)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ExhaustiveSweep(benchmark::State& state) {
  const FieldSpec gf2 = FieldSpec::prime(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweeps::exhaustive_oracle_sweep(gf2, 3, 3, {}, exec_of(state)));
  }
  label(state);
}
BENCHMARK(BM_ExhaustiveSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_LemmaSweepRationals(benchmark::State& state) {
  const sweeps::RandomConfig config{FieldSpec::rationals(), 200, 7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweeps::lemma_sweep(config, true, exec_of(state)));
  }
  label(state);
}
BENCHMARK(BM_LemmaSweepRationals)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
