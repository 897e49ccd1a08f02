// Serial reference path against the OpenMP kernels. The second benchmark
// argument selects the policy: 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include <random>

#include "abq/fp.hpp"
#include "abq/homology.hpp"
#include "abq/linalg.hpp"
#include "abq/quandle.hpp"

namespace {

using abq::Exec;
using abq::linalg::IntMatrix;

Exec policy(benchmark::State const& state) {
  return state.range(1) == 0 ? Exec::serial : Exec::parallel;
}

IntMatrix random_matrix(std::size_t rows, std::size_t cols) {
  std::mt19937_64 rng(rows * 131 + cols);
  std::uniform_int_distribution<long> d(-9, 9);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(rng);
  return m;
}

void BM_Smith(benchmark::State& state) {
  auto const n = static_cast<std::size_t>(state.range(0));
  auto const m = random_matrix(n, n);
  abq::linalg::SmithOptions opts;
  opts.exec = policy(state);
  for (auto _ : state) benchmark::DoNotOptimize(abq::linalg::smith_normal_form(m, opts));
}
BENCHMARK(BM_Smith)->ArgsProduct({{16, 32, 64}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Minors(benchmark::State& state) {
  auto const cols = static_cast<std::size_t>(state.range(0));
  auto const m = random_matrix(2 * cols + 2, cols);
  for (auto _ : state)
    benchmark::DoNotOptimize(abq::linalg::maximal_minors_gcd_by_expansion(m, policy(state)));
}
BENCHMARK(BM_Minors)->ArgsProduct({{3, 4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_HomologyGraphic(benchmark::State& state) {
  auto const q = state.range(0) == 0 ? abq::family_graphic({2, 4, 6, 2})
                                     : abq::family_u_starstar(4, 6);
  for (auto _ : state) benchmark::DoNotOptimize(abq::homology_h2(q, policy(state)));
}
BENCHMARK(BM_HomologyGraphic)->ArgsProduct({{0, 1}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_EnumerateQuandles(benchmark::State& state) {
  auto const n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(abq::enumerate_quandles(n, true, policy(state)));
}
BENCHMARK(BM_EnumerateQuandles)->ArgsProduct({{4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_EnumerateAbelian(benchmark::State& state) {
  auto const n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(abq::enumerate_abelian_quandles(n, std::nullopt, policy(state)));
}
BENCHMARK(BM_EnumerateAbelian)->ArgsProduct({{6, 8}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
