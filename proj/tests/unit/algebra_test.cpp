#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "nlnf/errors.hpp"
#include "nlnf/random.hpp"

using namespace nlnf;
using fixture::mono;
using fixture::series;

namespace {

Coefficient gq(long re, long im) { return Coefficient(GaussianRational(Rational(re), Rational(im))); }

}  // namespace

TEST(Monomial, IdentitiesAndZero) {
  auto q = fixture::rationals();
  EXPECT_EQ(monomial(q->zero(), Coefficient(1)), cauchy_identity(q, Mode::exact));
  EXPECT_EQ(monomial(q->one(), Coefficient(1)), dirichlet_identity(q, Mode::exact));
  EXPECT_TRUE(monomial(q->one(), Coefficient(0)).is_zero());
  auto k = fixture::sqrt2();
  AlgebraElement f = monomial(k->generator(), gq(2, 1));
  EXPECT_EQ(f.size(), 1u);
  EXPECT_EQ(f.coeff(k->generator()), gq(2, 1));
}

TEST(Cauchy, Examples) {
  auto q = fixture::rationals();
  EXPECT_EQ(cauchy_product(series(q, {{2, 1}}), series(q, {{5, 1}})), series(q, {{7, 1}}));
  EXPECT_EQ(cauchy_product(series(q, {{0, 1}, {1, 1}}), series(q, {{0, 1}, {1, -1}})), series(q, {{0, 1}, {2, -1}}));
}

TEST(Cauchy, RejectsMixedFieldsAndModes) {
  auto q = fixture::rationals();
  auto k = fixture::sqrt2();
  EXPECT_THROW(cauchy_product(series(q, {{1, 1}}), series(k, {{1, 1}})), field_mismatch);
  AlgebraElement approx = series(q, {{1, 1}}).in_mode(Mode::approx);
  EXPECT_THROW(dirichlet_product(series(q, {{1, 1}}), approx), mode_mismatch);
  EXPECT_THROW(approx.constant().exact(), mode_mismatch);
}

TEST(Dirichlet, Examples) {
  auto q = fixture::rationals();
  EXPECT_EQ(dirichlet_product(series(q, {{2, 1}}), series(q, {{5, 1}})), series(q, {{10, 1}}));
  AlgebraElement f = series(q, {{0, 2}, {3, 1}});
  AlgebraElement g = series(q, {{0, 1}, {2, 5}});
  EXPECT_EQ(dirichlet_product(f, g), series(q, {{0, 13}, {6, 5}}));
  EXPECT_EQ(dirichlet_product(f, cauchy_identity(q, Mode::exact)), series(q, {{0, 3}}));
}

TEST(Dirichlet, MatchesPointwiseForm) {
  // (f (x) g) = sum a_alpha g(z^alpha), where g(z^0) is the constant T(g) z^0.
  auto q = fixture::rationals();
  AlgebraElement f = series(q, {{0, 2}, {3, 1}});
  AlgebraElement g = series(q, {{0, 1}, {2, 5}});
  AlgebraElement pointwise = zero_element(q, Mode::exact);
  for (const auto& [alpha, a] : f.terms()) {
    AlgebraElement image = alpha.is_zero() ? monomial(q->zero(), trace_functional(g)) : monomial_compose(g, alpha);
    pointwise += image * a;
  }
  EXPECT_EQ(dirichlet_product(f, g), pointwise);
}

TEST(Trace, Examples) {
  auto q = fixture::rationals();
  EXPECT_EQ(trace_functional(series(q, {{0, 2}, {3, 1}})), Coefficient(3));
  EXPECT_EQ(trace_functional(dirichlet_identity(q, Mode::exact)), Coefficient(1));
  EXPECT_TRUE(is_in_ideal(series(q, {{1, 1}, {2, -1}})));
  EXPECT_FALSE(is_in_ideal(dirichlet_identity(q, Mode::exact)));
}

TEST(Projective, NormalizeAndCompare) {
  auto q = fixture::rationals();
  ProjectiveClass c = projectivize(series(q, {{0, 2}, {3, 1}}));
  EXPECT_EQ(c.representative().coeff(q->zero()), Coefficient(GaussianRational(parse_rational("2/3"))));
  EXPECT_EQ(c.representative().coeff(fixture::integer(q, 3)), Coefficient(GaussianRational(parse_rational("1/3"))));
  EXPECT_EQ(projectivize(monomial(fixture::integer(q, 7), gq(3, -4))).representative(), series(q, {{7, 1}}));
  EXPECT_THROW(projectivize(series(q, {{1, 1}, {2, -1}})), not_projectivizable);

  EXPECT_TRUE(projective_eq(series(q, {{0, 2}, {3, 1}}), series(q, {{0, 6}, {3, 3}})));
  EXPECT_FALSE(projective_eq(series(q, {{1, 1}}), series(q, {{2, 1}})));
  EXPECT_TRUE(projective_eq(series(q, {{1, 1}, {2, -1}}), series(q, {{1, 5}, {2, -5}})));
  EXPECT_FALSE(projective_eq(series(q, {{1, 1}, {2, -1}}), series(q, {{1, 1}, {2, 1}})));
}

TEST(MonomialCompose, Examples) {
  auto q = fixture::rationals();
  EXPECT_EQ(monomial_compose(series(q, {{1, 1}, {2, 1}}), fixture::integer(q, 3)), series(q, {{3, 1}, {6, 1}}));
  AlgebraElement f = series(q, {{-4, 2}, {1, 3}, {9, -1}});
  EXPECT_EQ(monomial_compose(f, q->one()), f);
  EXPECT_THROW(monomial_compose(f, q->zero()), domain_error);
}

TEST(AlgebraElement, NoStoredZeros) {
  auto q = fixture::rationals();
  AlgebraElement f = series(q, {{1, 1}});
  f.add_term(q->one(), Coefficient(-1));
  EXPECT_TRUE(f.is_zero());
  AlgebraElement g = series(q, {{1, 1}, {2, 1}}) - series(q, {{1, 1}});
  EXPECT_EQ(g.size(), 1u);
}

class AlgebraProperties : public ::testing::TestWithParam<int> {
 protected:
  FieldPtr field() const {
    switch (GetParam()) {
      case 0: return fixture::rationals();
      case 1: return fixture::sqrt2();
      case 2: return fixture::gaussian();
      default: return fixture::zeta5();
    }
  }
};

TEST_P(AlgebraProperties, ProductsMatchBruteForce) {
  auto k = field();
  Rng rng(11 + GetParam());
  const IndexShape shape{20, 1};
  for (int trial = 0; trial < 150; ++trial) {
    AlgebraElement f = random_exact_element(k, rng, 8, shape);
    AlgebraElement g = random_exact_element(k, rng, 8, shape);
    const auto ff = fixture::to_series(f), gg = fixture::to_series(g);
    EXPECT_EQ(fixture::to_map(dirichlet_product(f, g)), oracle::dirichlet(ff, gg, fixture::monic_coeffs(k)));
    EXPECT_EQ(fixture::to_map(cauchy_product(f, g)), oracle::cauchy(ff, gg));
  }
}

TEST_P(AlgebraProperties, CommutativeAssociativeAndTraceMultiplicative) {
  auto k = field();
  Rng rng(101 + GetParam());
  const IndexShape shape{6, 2};
  for (int trial = 0; trial < 40; ++trial) {
    AlgebraElement f = random_exact_element(k, rng, 4, shape);
    AlgebraElement g = random_exact_element(k, rng, 4, shape);
    AlgebraElement h = random_exact_element(k, rng, 4, shape);
    EXPECT_EQ(cauchy_product(f, g), cauchy_product(g, f));
    EXPECT_EQ(dirichlet_product(f, g), dirichlet_product(g, f));
    EXPECT_EQ(cauchy_product(cauchy_product(f, g), h), cauchy_product(f, cauchy_product(g, h)));
    EXPECT_EQ(dirichlet_product(dirichlet_product(f, g), h), dirichlet_product(f, dirichlet_product(g, h)));
    EXPECT_EQ(trace_functional(cauchy_product(f, g)), trace_functional(f) * trace_functional(g));
    EXPECT_EQ(trace_functional(dirichlet_product(f, g)), trace_functional(f) * trace_functional(g));
    // (x) distributes over coefficient addition
    EXPECT_EQ(dirichlet_product(f, g + h), dirichlet_product(f, g) + dirichlet_product(f, h));
    // identities
    EXPECT_EQ(cauchy_product(f, cauchy_identity(k, Mode::exact)), f);
    EXPECT_EQ(dirichlet_product(f, dirichlet_identity(k, Mode::exact)), f);
  }
}

TEST_P(AlgebraProperties, AnnihilatorIdealAndProjectivization) {
  auto k = field();
  Rng rng(202 + GetParam());
  const IndexShape shape{10, 3};
  const AlgebraElement unit_sum = cauchy_identity(k, Mode::exact);
  for (int trial = 0; trial < 40; ++trial) {
    AlgebraElement f = random_exact_element(k, rng, 5, shape);
    AlgebraElement g = random_exact_element(k, rng, 5, shape);
    EXPECT_EQ(dirichlet_product(f, unit_sum), unit_sum * trace_functional(f));
    if (!trace_functional(f).is_zero()) {
      EXPECT_TRUE(projective_eq(dirichlet_product(f, unit_sum), unit_sum));
      ProjectiveClass c = projectivize(f);
      EXPECT_EQ(trace_functional(c.representative()), Coefficient(1));
      EXPECT_EQ(projectivize(c.representative()).representative(), c.representative());
      EXPECT_TRUE(projective_eq(f, c.representative()));
    }
    AlgebraElement in_ideal = f - unit_sum * trace_functional(f);
    EXPECT_TRUE(is_in_ideal(in_ideal));
    EXPECT_TRUE(is_in_ideal(cauchy_product(in_ideal, g)));
    EXPECT_TRUE(is_in_ideal(dirichlet_product(in_ideal, g)));
    FieldElement alpha = random_index(k, rng, shape);
    EXPECT_EQ(monomial_compose(f, alpha), dirichlet_product(f, monomial(alpha, Coefficient(1))));
  }
}

TEST_P(AlgebraProperties, ClearingDenominatorsByMonomial) {
  auto k = field();
  Rng rng(303 + GetParam());
  for (int trial = 0; trial < 30; ++trial) {
    AlgebraElement f = random_exact_element(k, rng, 5, IndexShape{12, 6}, false);
    Integer n = 1;
    for (const auto& term : f.terms()) {
      for (const auto& c : term.first.coords()) n = lcm(n, Integer(c.get_den()));
    }
    AlgebraElement cleared = dirichlet_product(monomial(k->from_rational(Rational(n)), Coefficient(1)), f);
    for (const auto& term : cleared.terms()) EXPECT_TRUE(term.first.is_integral()) << cleared.to_string();
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, AlgebraProperties, ::testing::Values(0, 1, 2, 3));

TEST(AlgebraWitness, DirichletDoesNotDistributeOverCauchy) {
  auto q = fixture::rationals();
  AlgebraElement f = series(q, {{1, 1}});
  AlgebraElement h = series(q, {{1, 1}, {2, 1}});
  AlgebraElement left = dirichlet_product(cauchy_product(f, f), h);
  AlgebraElement right = cauchy_product(dirichlet_product(f, h), dirichlet_product(f, h));
  EXPECT_EQ(left, series(q, {{2, 1}, {4, 1}}));
  EXPECT_EQ(right, series(q, {{2, 1}, {3, 2}, {4, 1}}));
  EXPECT_NE(left, right);
}

TEST(AlgebraText, PrintsSortedTerms) {
  auto q = fixture::rationals();
  EXPECT_EQ(series(q, {{3, 1}, {0, 2}}).to_string(), "2*z^{0} + 1*z^{3}");
}
