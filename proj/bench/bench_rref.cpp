// Serial vs OpenMP row reduction over F_p on the dense systems that the
// degree-wise Ext computations produce.
#include <benchmark/benchmark.h>

#include <random>

#include "bigindec/linalg.hpp"

namespace {

bigindec::DenseMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint32_t seed) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<std::uint32_t> dist(0, bigindec::kDefaultPrime - 1);
  bigindec::DenseMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(gen);
  return m;
}

void BM_RrefSerial(benchmark::State& state) {
  bigindec::PrimeField f(bigindec::kDefaultPrime);
  auto n = static_cast<std::size_t>(state.range(0));
  auto m = random_matrix(n, n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(bigindec::rref_serial(m, f));
}

void BM_RrefParallel(benchmark::State& state) {
  bigindec::PrimeField f(bigindec::kDefaultPrime);
  auto n = static_cast<std::size_t>(state.range(0));
  auto m = random_matrix(n, n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(bigindec::rref_parallel(m, f));
}

}  // namespace

BENCHMARK(BM_RrefSerial)->Arg(64)->Arg(256)->Arg(512);
BENCHMARK(BM_RrefParallel)->Arg(64)->Arg(256)->Arg(512);

BENCHMARK_MAIN();
