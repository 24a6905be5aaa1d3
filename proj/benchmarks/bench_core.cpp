#include <benchmark/benchmark.h>

#include <cstddef>
#include <vector>

#include "lrd/fbm.hpp"
#include "lrd/linear_process.hpp"
#include "lrd/processes.hpp"
#include "lrd/rng.hpp"
#include "lrd/subordination.hpp"

namespace {

constexpr double kAlpha = 0.4;
constexpr std::size_t kM = 2048;

void BM_normals_fill(benchmark::State& state) {
  const lrd::normal_stream stream(1, 0);
  const std::size_t n = state.range(0);
  std::vector<double> out(n);
  for (auto _ : state) {
    stream.fill(0, n, out.data());
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_normals_fill)->Arg(1 << 12)->Arg(1 << 16);

void BM_linear_direct(benchmark::State& state) {
  const lrd::linear_model model(kAlpha, kM);
  const lrd::normal_stream stream(1, 0);
  const std::size_t n = state.range(0);
  for (auto _ : state) {
    auto eta = model.generate(n, stream, 0, lrd::conv_route::direct);
    benchmark::DoNotOptimize(eta.data());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_linear_direct)->Arg(1 << 10)->Arg(1 << 12)->Arg(1 << 14);

void BM_linear_fft(benchmark::State& state) {
  const lrd::linear_model model(kAlpha, kM);
  const lrd::normal_stream stream(1, 0);
  const std::size_t n = state.range(0);
  for (auto _ : state) {
    auto eta = model.generate(n, stream, 0, lrd::conv_route::fft);
    benchmark::DoNotOptimize(eta.data());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_linear_fft)->Arg(1 << 10)->Arg(1 << 12)->Arg(1 << 14);

void BM_fbm_cholesky(benchmark::State& state) {
  const std::size_t n = state.range(0);
  std::vector<double> times(n);
  for (std::size_t i = 0; i < n; ++i) times[i] = double(i + 1);
  const lrd::normal_stream stream(1, 1);
  for (auto _ : state) {
    auto w = lrd::fbm_exact_cholesky(times, 0.8, stream);
    benchmark::DoNotOptimize(w.data());
  }
}
BENCHMARK(BM_fbm_cholesky)->Arg(1 << 7)->Arg(1 << 9);

void BM_fbm_circulant(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const lrd::normal_stream stream(1, 1);
  for (auto _ : state) {
    auto w = lrd::fbm_circulant(n, 0.8, 1.0, stream);
    benchmark::DoNotOptimize(w.data());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_fbm_circulant)->Arg(1 << 9)->Arg(1 << 12)->Arg(1 << 14);

void BM_coupled_fbm(benchmark::State& state) {
  const std::size_t T = state.range(0);
  const lrd::normal_stream stream(1, 0);
  for (auto _ : state) {
    auto path = lrd::coupled_fbm_path(kAlpha, kM, T, stream);
    benchmark::DoNotOptimize(path.w.data());
  }
  state.SetItemsProcessed(state.iterations() * T);
}
BENCHMARK(BM_coupled_fbm)->Arg(1 << 10)->Arg(1 << 12);

void BM_hermite_coefficient(benchmark::State& state) {
  const lrd::subordinator sub = lrd::make_quantile_exponential(1.0);
  for (auto _ : state) {
    const double j3 = lrd::hermite_coefficient(sub, 3);
    benchmark::DoNotOptimize(j3);
  }
}
BENCHMARK(BM_hermite_coefficient);

void BM_limit_scale_bk(benchmark::State& state) {
  const lrd::subordinator sub = lrd::make_quantile_exponential(1.0);
  for (auto _ : state) {
    const double bk = lrd::limit_scale_bk(sub, 1, 0.5, 0.5);
    benchmark::DoNotOptimize(bk);
  }
}
BENCHMARK(BM_limit_scale_bk);

// Grid evaluation dominates the coupling experiment; the path is built once
// and only the sweep over integer horizons is timed.
void BM_grids(benchmark::State& state) {
  const std::size_t T = state.range(0);
  const lrd::linear_model model(kAlpha, kM);
  const lrd::normal_stream stream(1, 0);
  const lrd::subordinator sub = lrd::make_quantile_exponential(1.0);
  const auto eta = model.generate(2 * T, stream);
  std::vector<double> y(eta.size());
  for (std::size_t i = 0; i < eta.size(); ++i) y[i] = sub.g(eta[i]);
  const lrd::sample_path path(y, sub.mu);
  for (auto _ : state) {
    auto n_grid = path.N_grid(T);
    auto z_grid = path.Z_grid(T);
    benchmark::DoNotOptimize(n_grid.data());
    benchmark::DoNotOptimize(z_grid.data());
  }
  state.SetItemsProcessed(state.iterations() * T);
}
BENCHMARK(BM_grids)->Arg(1 << 10)->Arg(1 << 13);

}  // namespace

BENCHMARK_MAIN();
