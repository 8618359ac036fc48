#include <benchmark/benchmark.h>

#include "nlnf/dirichlet.hpp"
#include "nlnf/random.hpp"
#include "nlnf/signs.hpp"

using namespace nlnf;

namespace {

IntegerSeries random_series(std::size_t n, Mode mode, std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_int_distribution<int> coeff(-9, 9);
  IntegerSeries s(n, mode);
  for (std::size_t i = 1; i <= n; ++i) {
    const int c = i == 1 ? 1 : coeff(rng);
    s.set(i, mode == Mode::exact ? Coefficient(c) : Coefficient(std::complex<double>(c, 0)));
  }
  return s;
}

void BM_DconvApprox(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntegerSeries f = random_series(n, Mode::approx, 1), g = random_series(n, Mode::approx, 2);
  for (auto _ : state) benchmark::DoNotOptimize(dconv(f, g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DconvApprox)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity(benchmark::oNLogN);

void BM_DconvExact(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntegerSeries f = random_series(n, Mode::exact, 1), g = random_series(n, Mode::exact, 2);
  for (auto _ : state) benchmark::DoNotOptimize(dconv(f, g));
}
BENCHMARK(BM_DconvExact)->RangeMultiplier(4)->Range(1 << 10, 1 << 14);

void BM_MoebiusByInversion(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntegerSeries ones = IntegerSeries::ones(n, Mode::exact);
  const DivisorSieve sieve(n);
  for (auto _ : state) benchmark::DoNotOptimize(dinvert(ones, sieve));
}
BENCHMARK(BM_MoebiusByInversion)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

FieldPtr field_for(int which) {
  switch (which) {
    case 0: return NumberField::define(Polynomial{0, 1});
    case 1: return NumberField::define(Polynomial{-2, 0, 1});
    default: return NumberField::define(cyclotomic_polynomial(5));
  }
}

void BM_DirichletProduct(benchmark::State& state) {
  FieldPtr k = field_for(static_cast<int>(state.range(0)));
  Rng rng(3);
  const int terms = static_cast<int>(state.range(1));
  const AlgebraElement f = random_exact_element(k, rng, terms, IndexShape{});
  const AlgebraElement g = random_exact_element(k, rng, terms, IndexShape{});
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet_product(f, g));
}
BENCHMARK(BM_DirichletProduct)->ArgsProduct({{0, 1, 2}, {8, 32}});

void BM_CauchyProduct(benchmark::State& state) {
  FieldPtr k = field_for(static_cast<int>(state.range(0)));
  Rng rng(4);
  const AlgebraElement f = random_exact_element(k, rng, 32, IndexShape{});
  const AlgebraElement g = random_exact_element(k, rng, 32, IndexShape{});
  for (auto _ : state) benchmark::DoNotOptimize(cauchy_product(f, g));
}
BENCHMARK(BM_CauchyProduct)->DenseRange(0, 2);

void BM_DefineCyclotomic(benchmark::State& state) {
  const Polynomial p = cyclotomic_polynomial(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(NumberField::define(p));
}
BENCHMARK(BM_DefineCyclotomic)->Arg(5)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_DefineSextic(benchmark::State& state) {
  const Polynomial p{9, 9, 0, 3, 6, 3, 1};
  for (auto _ : state) benchmark::DoNotOptimize(NumberField::define(p));
}
BENCHMARK(BM_DefineSextic)->Unit(benchmark::kMillisecond);

void BM_SignOf(benchmark::State& state) {
  FieldPtr k = NumberField::define(Polynomial{9, 9, 0, 3, 6, 3, 1});
  Rng rng(5);
  std::vector<FieldElement> xs;
  for (int i = 0; i < 64; ++i) xs.push_back(random_index(k, rng, IndexShape{10, 3}));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sign_of(xs[i++ % xs.size()]));
}
BENCHMARK(BM_SignOf);

}  // namespace

BENCHMARK_MAIN();
