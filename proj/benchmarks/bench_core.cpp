#include <benchmark/benchmark.h>

#include <kfin/curve_algebra.hpp>
#include <kfin/exact.hpp>
#include <kfin/multigraded.hpp>

#include <random>

using namespace kfin;

namespace {

BinaryForm mono(std::size_t s, std::size_t t) { return BinaryForm::monomial(s, t); }

Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-99, 99);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  }
  return m;
}

void BM_RrefFractionFree(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = random_matrix(n, n + 4, 42);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefFractionFree)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMillisecond);

void BM_RrefRational(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = random_matrix(n, n + 4, 42);
  for (auto _ : state) benchmark::DoNotOptimize(detail::rref_rational(m));
}
BENCHMARK(BM_RrefRational)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMillisecond);

// Builds the power-space tower from scratch up to level k.
void BM_PowerSpaceQuinticFamily(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    const CurveAlgebra c = new_curve(5, {mono(4, 1), mono(3, 2), mono(2, 3), mono(5, 0) + mono(0, 5)});
    benchmark::DoNotOptimize(c.power_space(k).dim());
  }
}
BENCHMARK(BM_PowerSpaceQuinticFamily)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

void BM_PowerSpaceGeneric(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-20, 20);
  std::vector<BinaryForm> basis;
  for (int i = 0; i < 4; ++i) {
    Vector c(7);
    for (auto& x : c) x = d(rng);
    basis.emplace_back(6, c);
  }
  for (auto _ : state) {
    const CurveAlgebra c = new_curve(6, basis);
    benchmark::DoNotOptimize(c.power_space(k).dim());
  }
}
BENCHMARK(BM_PowerSpaceGeneric)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_KfTestUnknown(benchmark::State& state) {
  for (auto _ : state) {
    const CurveAlgebra c = new_curve(5, {mono(4, 1), mono(3, 2), mono(2, 3), mono(5, 0) + mono(0, 5)});
    benchmark::DoNotOptimize(kf_test(c, PointP1(2, 3), 6));
  }
}
BENCHMARK(BM_KfTestUnknown)->Unit(benchmark::kMillisecond);

void BM_MultigradedKf(benchmark::State& state) {
  auto poly = [](std::vector<long> c) { return Poly(Vector(c.begin(), c.end())); };
  const MultigradedAlgebra alg(2, {{poly({1}), {1, 0}},
                                   {poly({-1, 1}), {1, 0}},
                                   {poly({-1, 3, -3, 1}), {1, 0}},
                                   {poly({0, 1}), {0, 1}},
                                   {poly({0, 0, 1}), {0, 1}},
                                   {poly({1, 0, 0, 1}), {0, 1}}});
  for (auto _ : state) benchmark::DoNotOptimize(multigraded_kf(alg, BigRational(1), 8));
}
BENCHMARK(BM_MultigradedKf)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
