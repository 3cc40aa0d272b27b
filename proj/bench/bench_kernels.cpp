#include "dkp/evolve.hpp"
#include "dkp/fft.hpp"
#include "dkp/kernels.hpp"
#include "dkp/models.hpp"

#include <benchmark/benchmark.h>

#include <complex>
#include <numbers>
#include <random>
#include <vector>

using namespace dkp;

namespace {

std::vector<cplx> random_complex(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> N;
  std::vector<cplx> v(n);
  for (auto& z : v) z = {N(rng), N(rng)};
  return v;
}

std::vector<double> random_real(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> N;
  std::vector<double> v(n);
  for (auto& x : v) x = N(rng);
  return v;
}

template <bool Parallel>
void BM_etd_stage(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  auto e = random_complex(n, 1), v = random_complex(n, 2), q = random_complex(n, 3), nl = random_complex(n, 4);
  std::vector<cplx> out(n);
  for (auto _ : state) {
    if constexpr (Parallel)
      kernels::parallel::etd_stage(out, e, v, q, nl);
    else
      kernels::serial::etd_stage(out, e, v, q, nl);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * n * sizeof(cplx) * 5));
}

template <bool Parallel>
void BM_transformed_product(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  auto a = random_real(n, 1), g = random_real(n, 2), b = random_real(n, 3);
  std::vector<double> out(n);
  for (auto _ : state) {
    if constexpr (Parallel)
      kernels::parallel::transformed_product(out, a, g, b, 0.2);
    else
      kernels::serial::transformed_product(out, a, g, b, 0.2);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * n * sizeof(double) * 4));
}

template <bool Parallel>
void BM_krasny(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto src = random_complex(n, 5);
  std::vector<cplx> c(n);
  for (auto _ : state) {
    state.PauseTiming();
    c = src;
    state.ResumeTiming();
    std::size_t zeroed = Parallel ? kernels::parallel::krasny(c, 0.5) : kernels::serial::krasny(c, 0.5);
    benchmark::DoNotOptimize(zeroed);
  }
}

template <bool Parallel>
void BM_energy(benchmark::State& state) {
  const std::size_t nx = static_cast<std::size_t>(state.range(0)), nxh = nx / 2 + 1;
  const auto c = random_complex(nx * nxh, 6);
  for (auto _ : state) {
    double e = Parallel ? kernels::parallel::half_spectrum_energy(c, nxh, nx)
                        : kernels::serial::half_spectrum_energy(c, nxh, nx);
    benchmark::DoNotOptimize(e);
  }
}

// one advance() call, tableau construction included
void BM_etd_step(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  auto g = make_grid(n, n, 5 * std::numbers::pi, 5 * std::numbers::pi);
  ModelBinding model(ModelKind::transformed, g);
  const SpectralField f0 = forward(initial_profile({}, g));
  SpectralField f = f0;
  for (auto _ : state) {
    f = advance(model, f0, 0.1, 1e-4, 1e-10);
    benchmark::DoNotOptimize(f.data());
  }
}

}  // namespace

BENCHMARK(BM_etd_stage<false>)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_etd_stage<true>)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_transformed_product<false>)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_transformed_product<true>)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_krasny<false>)->Arg(1 << 20);
BENCHMARK(BM_krasny<true>)->Arg(1 << 20);
BENCHMARK(BM_energy<false>)->Arg(512)->Arg(2048);
BENCHMARK(BM_energy<true>)->Arg(512)->Arg(2048);
BENCHMARK(BM_etd_step)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
