#include <benchmark/benchmark.h>

#include <random>

#include "fanokit/bounds.hpp"
#include "fanokit/hypersurface.hpp"
#include "fanokit/osculating.hpp"
#include "fanokit/semple.hpp"

using namespace fanokit;

namespace {

Matrix random_square(const Field& f, std::size_t n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = f.from_int(dist(rng));
  return m;
}

void BM_DeterminantRational(benchmark::State& state) {
  Matrix m = random_square(Field::rationals(), static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_DeterminantRational)->Arg(4)->Arg(8)->Arg(16);

void BM_DeterminantPrime(benchmark::State& state) {
  Matrix m = random_square(Field::prime(101), static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_DeterminantPrime)->Arg(4)->Arg(8)->Arg(16);

void BM_FermatLines(benchmark::State& state) {
  Hypersurface cubic = Hypersurface::parse("x0^3 + x1^3 + x2^3 + x3^3", 3, Field::prime(static_cast<std::uint64_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_planes(cubic, 1));
}
BENCHMARK(BM_FermatLines)->Arg(5)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_OsculatingRank(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(osculating_rank_empirical(k, 2 * k + 1, k));
}
BENCHMARK(BM_OsculatingRank)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_SempleMap(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const std::size_t n = 2 * k + 1;
  Field q = Field::rationals();
  SempleChartPoint c{q.one(), random_square(q, n - k, 3)};
  for (auto _ : state) benchmark::DoNotOptimize(semple_map(c));
}
BENCHMARK(BM_SempleMap)->DenseRange(1, 4);

void BM_Certify(benchmark::State& state) {
  CertifyInputs in;
  in.d = static_cast<unsigned>(state.range(0));
  in.r = 2;
  for (auto _ : state) benchmark::DoNotOptimize(certify(in));
}
BENCHMARK(BM_Certify)->DenseRange(3, 5);

}  // namespace
BENCHMARK_MAIN();
