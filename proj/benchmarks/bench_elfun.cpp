#include <benchmark/benchmark.h>

#include <random>
#include <span>
#include <vector>

#include "elfun/integrals.hpp"
#include "elfun/jacobi.hpp"
#include "elfun/registry.hpp"
#include "elfun/theta.hpp"

namespace {

std::vector<double> uniform(double lo, double hi, std::size_t n, unsigned seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> d(lo, hi);
  std::vector<double> v(n);
  for (double& x : v) x = d(gen);
  return v;
}

void BM_melK(benchmark::State& state) {
  const auto m = uniform(-10, 0.999, 1024, 1);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(elfun::melK(m[i++ & 1023]));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_melK);

void BM_mpelF(benchmark::State& state) {
  const auto phi = uniform(-20, 20, 1024, 2);
  const auto m = uniform(-10, 0.999, 1024, 3);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(elfun::mpelF(phi[i & 1023], m[i & 1023]));
    ++i;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_mpelF);

void BM_mpelPi(benchmark::State& state) {
  const auto phi = uniform(-20, 20, 1024, 4);
  const auto nu = uniform(-5, 0.9, 1024, 5);
  const auto m = uniform(-10, 0.999, 1024, 6);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(elfun::mpelPi(phi[i & 1023], nu[i & 1023], m[i & 1023]));
    ++i;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_mpelPi);

// Argument magnitude controls how much work the period reduction does.
void BM_mjsn(benchmark::State& state) {
  const double scale = static_cast<double>(state.range(0));
  const auto x = uniform(-scale, scale, 1024, 7);
  const auto m = uniform(-10, 0.999, 1024, 8);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(elfun::mjsn(x[i & 1023], m[i & 1023]));
    ++i;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_mjsn)->Arg(1)->Arg(1000)->Arg(100000);

void BM_sncndn(benchmark::State& state) {
  const auto x = uniform(-10, 10, 1024, 9);
  const auto m = uniform(0, 0.999, 1024, 10);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(elfun::sncndn(x[i & 1023], m[i & 1023]));
    ++i;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_sncndn);

void BM_jtheta3(benchmark::State& state) {
  const auto x = uniform(-10, 10, 1024, 11);
  const auto q = uniform(0, 0.9, 1024, 12);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(elfun::jtheta3(x[i & 1023], q[i & 1023]));
    ++i;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_jtheta3);

void BM_broadcast_melK(benchmark::State& state) {
  const auto& f = elfun::lookup("melK");
  const elfun::Tensor arg = elfun::Tensor::vector(uniform(-10, 0.999, state.range(0), 13));
  for (auto _ : state) {
    auto out = elfun::broadcast_apply(f, std::span<const elfun::Tensor>(&arg, 1));
    benchmark::DoNotOptimize(out.data.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_broadcast_melK)->Arg(1 << 10)->Arg(1 << 16);

}  // namespace

BENCHMARK_MAIN();
