#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "fixtures.hpp"
#include "nlnf/dirichlet.hpp"
#include "nlnf/errors.hpp"
#include "nlnf/random.hpp"

using namespace nlnf;
using fixture::series;

namespace {

IntegerSeries exact(std::size_t n, std::vector<std::pair<std::size_t, long>> terms) {
  IntegerSeries s(n, Mode::exact);
  for (const auto& [i, c] : terms) s.set(i, Coefficient(c));
  return s;
}

// c_n = sum over i j = n by the double loop.
IntegerSeries brute_conv(const IntegerSeries& f, const IntegerSeries& g) {
  IntegerSeries out(f.bound(), f.mode());
  for (std::size_t i = 1; i <= f.bound(); ++i) {
    for (std::size_t j = 1; i * j <= f.bound(); ++j) out.set(i * j, out[i * j] + f[i] * g[j]);
  }
  return out;
}

}  // namespace

TEST(IntegerSeries, FromAlgebra) {
  auto q = fixture::rationals();
  IntegerSeries s = from_algebra(series(q, {{1, 1}, {2, 1}, {3, 1}}), 3);
  for (std::size_t n = 1; n <= 3; ++n) EXPECT_EQ(s[n], Coefficient(1));
  IntegerSeries six = from_algebra(series(q, {{6, 5}}), 8);
  EXPECT_EQ(six[6], Coefficient(5));
  EXPECT_TRUE(six[5].is_zero());
  EXPECT_THROW(from_algebra(monomial(q->from_rational(parse_rational("1/2")), Coefficient(1)), 8), domain_error);
  EXPECT_THROW(from_algebra(series(q, {{0, 1}}), 8), domain_error);
  EXPECT_THROW(from_algebra(series(q, {{9, 1}}), 8), domain_error);
  EXPECT_THROW(from_algebra(series(fixture::sqrt2(), {{1, 1}}), 8), domain_error);
  EXPECT_EQ(to_algebra(six, q), series(q, {{6, 5}}));
}

TEST(Sieve, DivisorsAndFactors) {
  DivisorSieve sieve(100);
  EXPECT_EQ(sieve.divisors(12), (std::vector<std::uint32_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(sieve.divisors(1), (std::vector<std::uint32_t>{1}));
  EXPECT_EQ(sieve.smallest_prime_factor(91), 7u);
  for (std::size_t n = 1; n <= 100; ++n) {
    std::size_t count = 0;
    for (std::size_t d = 1; d <= n; ++d) count += n % d == 0;
    EXPECT_EQ(sieve.divisors(n).size(), count);
  }
}

TEST(Dconv, Examples) {
  IntegerSeries ones = IntegerSeries::ones(12, Mode::exact);
  IntegerSeries tau = dconv(ones, ones);
  EXPECT_EQ(tau[6], Coefficient(4));
  EXPECT_EQ(tau[12], Coefficient(6));
  EXPECT_TRUE(tau.truncation_defect());

  IntegerSeries f = exact(8, {{1, 2}, {2, 1}});
  EXPECT_EQ(dconv(f, IntegerSeries::delta(8, Mode::exact)), f);
  IntegerSeries g = exact(8, {{1, 1}, {2, 5}});
  IntegerSeries c = dconv(f, g);
  EXPECT_EQ(c[1], Coefficient(2));
  EXPECT_EQ(c[2], Coefficient(11));
  EXPECT_EQ(c[4], Coefficient(5));
  EXPECT_FALSE(c.truncation_defect());
}

TEST(Dconv, AgreesWithBruteForceAndTheAlgebraProduct) {
  auto q = fixture::rationals();
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 60;
    IntegerSeries f(n, Mode::exact), g(n, Mode::exact);
    for (std::size_t i = 1; i <= 7; ++i) {
      f.set(i, Coefficient(coeff(rng)));
      g.set(i, Coefficient(coeff(rng)));
    }
    IntegerSeries c = dconv(f, g);
    EXPECT_EQ(c, brute_conv(f, g));
    EXPECT_EQ(c.truncation_defect(), f.max_support() * g.max_support() > n);
    EXPECT_EQ(to_algebra(c, q), dirichlet_product(to_algebra(f, q), to_algebra(g, q)));
  }
}

TEST(Dinvert, MoebiusAndSmallCases) {
  IntegerSeries mu = dinvert(IntegerSeries::ones(1000, Mode::exact));
  const long expected[] = {1, -1, -1, 0, -1, 1};
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(mu[n], Coefficient(expected[n - 1]));
  for (std::size_t n = 1; n <= 1000; ++n) EXPECT_EQ(mu[n], Coefficient(oracle::mobius(n))) << n;
  EXPECT_EQ(dconv(IntegerSeries::ones(1000, Mode::exact), mu), IntegerSeries::delta(1000, Mode::exact));

  EXPECT_EQ(dinvert(IntegerSeries::delta(10, Mode::exact)), IntegerSeries::delta(10, Mode::exact));
  IntegerSeries two = exact(10, {{1, 2}});
  IntegerSeries half(10, Mode::exact);
  half.set(1, Coefficient(GaussianRational(parse_rational("1/2"))));
  EXPECT_EQ(dinvert(two), half);
  EXPECT_THROW(dinvert(exact(10, {{2, 1}})), not_invertible);
}

TEST(Dinvert, RandomSeriesInvertExactly) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> coeff(-3, 3);
  DivisorSieve sieve(300);
  for (int trial = 0; trial < 10; ++trial) {
    IntegerSeries f(300, Mode::exact);
    f.set(1, Coefficient(GaussianRational(Rational(coeff(rng) | 1), Rational(coeff(rng)))));
    for (std::size_t i = 2; i <= 300; ++i) f.set(i, Coefficient(coeff(rng)));
    EXPECT_EQ(dconv(f, dinvert(f, sieve)), IntegerSeries::delta(300, Mode::exact));
  }
}

TEST(Dinvert, MultiplicativeInputsGiveMultiplicativeInverses) {
  // sigma_0, the divisor count, is multiplicative with value 1 at 1.
  const std::size_t n = 400;
  IntegerSeries tau = dconv(IntegerSeries::ones(n, Mode::exact), IntegerSeries::ones(n, Mode::exact));
  IntegerSeries inv = dinvert(tau);
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<std::size_t> pick(1, 20);
  int checked = 0;
  while (checked < 60) {
    std::size_t a = pick(rng), b = pick(rng);
    if (std::gcd(a, b) != 1 || a * b > n) continue;
    EXPECT_EQ(inv[a * b], inv[a] * inv[b]) << a << " " << b;
    ++checked;
  }
}

TEST(Mellin, Examples) {
  IntegerSeries f = exact(20, {{1, 2}, {4, -1}, {9, 3}});
  EXPECT_NEAR(std::abs(mellin_eval(f, 0) - 4.0), 0, 1e-15);
  EXPECT_NEAR(std::abs(mellin_eval(IntegerSeries::delta(20, Mode::exact), 0.77) - 1.0), 0, 1e-15);
  // all ones at N = 100, y = 0.3, against a long double sum
  const double y = 0.3;
  std::complex<long double> sum = 0;
  for (int n = 1; n <= 100; ++n) {
    long double phase = -2 * std::numbers::pi_v<long double> * y * std::log(static_cast<long double>(n));
    sum += std::complex<long double>(std::cos(phase), std::sin(phase));
  }
  std::complex<double> got = mellin_eval(IntegerSeries::ones(100, Mode::exact), y);
  EXPECT_NEAR(got.real(), static_cast<double>(sum.real()), 1e-12);
  EXPECT_NEAR(got.imag(), static_cast<double>(sum.imag()), 1e-12);
}

TEST(Mellin, BridgeIdentity) {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> ys(-5, 5), cs(-1, 1);
  for (int trial = 0; trial < 10; ++trial) {
    IntegerSeries f(100, Mode::approx), g(100, Mode::approx);
    for (std::size_t i = 1; i <= 10; ++i) {
      f.set(i, Coefficient(std::complex<double>(cs(rng), cs(rng))));
      g.set(i, Coefficient(std::complex<double>(cs(rng), cs(rng))));
    }
    IntegerSeries c = dconv(f, g);
    ASSERT_FALSE(c.truncation_defect());
    for (int k = 0; k < 10; ++k) {
      const double y = ys(rng);
      EXPECT_LT(std::abs(mellin_eval(c, y) - mellin_eval(f, y) * mellin_eval(g, y)), 1e-9);
    }
  }
}

TEST(IntegerSeries, RejectsOutOfRangeAndMixedModes) {
  IntegerSeries s(5, Mode::exact);
  EXPECT_THROW(s.set(0, Coefficient(1)), domain_error);
  EXPECT_THROW(s.set(6, Coefficient(1)), domain_error);
  EXPECT_THROW(s.set(2, Coefficient(std::complex<double>(1))), mode_mismatch);
  EXPECT_EQ(s.max_support(), 0u);
}
