#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fixtures.hpp"
#include "nlnf/errors.hpp"
#include "nlnf/galois.hpp"
#include "nlnf/hardy.hpp"

using namespace nlnf;
using fixture::series;

namespace {

ComplexSign cs(const char* text) { return parse_complex_sign(text); }

Automorphism power_map(const FieldPtr& k, long e) { return Automorphism::make(k, k->generator().pow(e)); }

std::complex<double> only_coefficient(const AlgebraElement& f) { return f.terms().begin()->second.value(); }

AlgebraElement approx_series(const FieldPtr& k, std::vector<std::pair<long, long>> terms) {
  return series(k, terms).in_mode(Mode::approx);
}

}  // namespace

TEST(Automorphism, ConstructionAndOrder) {
  auto k = fixture::sqrt2();
  Automorphism conj = Automorphism::make(k, -k->generator());
  EXPECT_EQ(conj.order(), 2);
  EXPECT_EQ(conj.inverse(), conj);
  EXPECT_EQ(conj.apply(k->one() + k->generator()), k->one() - k->generator());

  auto z5 = fixture::zeta5();
  Automorphism sq = power_map(z5, 2);
  EXPECT_EQ(sq.order(), 4);
  Automorphism fourth = sq.compose(sq).compose(sq).compose(sq);
  EXPECT_TRUE(fourth.is_identity());
  EXPECT_EQ(sq.compose(sq.inverse()), Automorphism::identity(z5));

  auto cubic = NumberField::define(Polynomial{-2, 0, 0, 1});
  EXPECT_THROW(Automorphism::make(cubic, -cubic->generator()), not_an_automorphism);
  EXPECT_THROW(Automorphism::make(z5, z5->generator() + z5->one()), not_an_automorphism);
}

TEST(Automorphism, IsAFieldHomomorphism) {
  auto k = fixture::zeta8();
  Automorphism s = power_map(k, 3);
  Rng rng(2);
  for (int n = 0; n < 50; ++n) {
    FieldElement a = random_index(k, rng, IndexShape{5, 3}), b = random_index(k, rng, IndexShape{5, 3});
    EXPECT_EQ(s.apply(a * b), s.apply(a) * s.apply(b));
    EXPECT_EQ(s.apply(a + b), s.apply(a) + s.apply(b));
    EXPECT_EQ(s.inverse().apply(s.apply(a)), a);
  }
}

TEST(GaloisGroup, Families) {
  GaloisGroup gi = group_from_family(fixture::gaussian(), GroupFamily::quadratic());
  EXPECT_EQ(gi.order(), 2u);
  EXPECT_TRUE(gi.verify_table());

  GaloisGroup g5 = group_from_family(fixture::zeta5(), GroupFamily::cyclotomic(5));
  EXPECT_EQ(g5.order(), 4u);
  EXPECT_TRUE(g5.verify_table());
  EXPECT_EQ(g5.exponent(), 4);

  GaloisGroup g8 = group_from_family(fixture::zeta8(), GroupFamily::cyclotomic(8));
  EXPECT_EQ(g8.order(), 4u);
  EXPECT_TRUE(g8.verify_table());
  EXPECT_EQ(g8.exponent(), 2);

  auto z5 = fixture::zeta5();
  GaloisGroup closure = group_from_family(z5, GroupFamily::explicit_images({z5->generator().pow(2)}));
  EXPECT_EQ(closure.order(), 4u);
  EXPECT_TRUE(closure.verify_table());

  EXPECT_THROW(group_from_family(fixture::zeta5(), GroupFamily::cyclotomic(8)), domain_error);
  EXPECT_THROW(group_from_family(fixture::zeta5(), GroupFamily::quadratic()), domain_error);
}

TEST(GaloisAction, ReindexesAndActsAsAGroup) {
  auto k = fixture::sqrt2();
  Automorphism conj = Automorphism::make(k, -k->generator());
  AlgebraElement f = monomial(k->generator(), Coefficient(1));
  EXPECT_EQ(apply_to_algebra(conj, f), monomial(-k->generator(), Coefficient(1)));
  EXPECT_EQ(apply_to_algebra(Automorphism::identity(k), f), f);

  auto z8 = fixture::zeta8();
  GaloisGroup g = group_from_family(z8, GroupFamily::cyclotomic(8));
  Rng rng(6);
  for (int n = 0; n < 20; ++n) {
    AlgebraElement h = random_exact_element(z8, rng, 5, IndexShape{5, 2});
    for (const auto& s : g.elements) {
      EXPECT_DOUBLE_EQ(l2_norm(apply_to_algebra(s, h)), l2_norm(h));
      for (const auto& t : g.elements) {
        EXPECT_EQ(apply_to_algebra(s.compose(t), h), apply_to_algebra(s, apply_to_algebra(t, h)));
      }
    }
  }
}

TEST(NonlinearAutomorphism, QuadraticConjugationSwapsRealSigns) {
  auto k = fixture::sqrt2();
  AutomorphismReport r = verify_nonlinear_automorphism(Automorphism::make(k, -k->generator()), 100, 1);
  EXPECT_TRUE(r.report.ok());
  EXPECT_EQ(r.report.samples, 100u);
  SignVector pm{{RealSign::plus, RealSign::minus}, {}}, mp{{RealSign::minus, RealSign::plus}, {}};
  ASSERT_TRUE(r.iota.count(pm));
  ASSERT_TRUE(r.iota.count(mp));
  EXPECT_EQ(r.iota.at(pm), mp);
  EXPECT_EQ(r.iota.at(mp), pm);
}

TEST(NonlinearAutomorphism, GaussianConjugationReflectsSigns) {
  auto k = fixture::gaussian();
  AutomorphismReport r = verify_nonlinear_automorphism(Automorphism::make(k, -k->generator()), 100, 2);
  EXPECT_TRUE(r.report.ok());
  for (const auto& [from, to] : r.iota) {
    ASSERT_EQ(from.complex.size(), 1u);
    EXPECT_EQ(to.complex[0], from.complex[0].conj());
  }
  auto image = [&](const char* s) { return r.iota.at(SignVector{{}, {cs(s)}}).complex[0]; };
  EXPECT_EQ(image("sqrt-e"), cs("-e"));
  EXPECT_EQ(image("+e"), cs("-sqrt-e"));
  EXPECT_EQ(image("sqrt-"), cs("-sqrt-"));
}

TEST(NonlinearAutomorphism, IdentityAndCyclotomicElements) {
  for (unsigned n : {5u, 8u}) {
    auto k = NumberField::define(cyclotomic_polynomial(n));
    AutomorphismReport id = verify_nonlinear_automorphism(Automorphism::identity(k), 30, 3);
    EXPECT_TRUE(id.report.ok());
    for (const auto& [from, to] : id.iota) EXPECT_EQ(from, to);
    GaloisGroup g = group_from_family(k, GroupFamily::cyclotomic(n));
    for (const auto& s : g.elements) EXPECT_TRUE(verify_nonlinear_automorphism(s, 30, 4).report.ok());
  }
}

TEST(Tower, FixedFieldOfSqrt2InsideZeta8) {
  auto k = fixture::sqrt2();
  auto l = fixture::zeta8();
  FieldElement z = l->generator();
  TowerEmbedding tower(k, l, z - z.pow(3));
  EXPECT_EQ(tower.map(k->generator()) * tower.map(k->generator()), fixture::integer(l, 2));
  EXPECT_THROW(TowerEmbedding(k, l, z), domain_error);

  EXPECT_EQ(power_map(l, 3).apply(tower.image()), -tower.image());
  EXPECT_FALSE(fixed_field_check(power_map(l, 3), tower, 20, 5).ok());
  EXPECT_TRUE(fixed_field_check(power_map(l, 7), tower, 20, 5).ok());
  EXPECT_TRUE(fixed_field_check(Automorphism::identity(l), tower, 20, 5).ok());
}

TEST(Tower, QuadraticSubfieldOfZeta5) {
  auto l = fixture::zeta5();
  FieldElement z = l->generator();
  FieldElement eta = z + z.pow(4);
  // eta = (-1 + sqrt5) / 2 satisfies x^2 + x - 1
  auto k = NumberField::define(Polynomial{-1, 1, 1});
  TowerEmbedding tower(k, l, eta);
  EXPECT_EQ(power_map(l, 4).apply(eta), eta);
  EXPECT_TRUE(fixed_field_check(power_map(l, 4), tower, 20, 6).ok());
  EXPECT_FALSE(fixed_field_check(power_map(l, 2), tower, 20, 6).ok());
}

TEST(RelativeTrace, Examples) {
  auto z8 = fixture::zeta8();
  GaloisGroup g8 = group_from_family(z8, GroupFamily::cyclotomic(8));
  EXPECT_EQ(relative_trace(z8->generator(), g8.elements), z8->zero());
  auto z5 = fixture::zeta5();
  GaloisGroup g5 = group_from_family(z5, GroupFamily::cyclotomic(5));
  EXPECT_EQ(relative_trace(z5->generator(), g5.elements), fixture::integer(z5, -1));
  FieldElement a = z5->generator() * Rational(3) + z5->one();
  EXPECT_EQ(relative_trace(a, {Automorphism::identity(z5)}), a);
  // over the quadratic subfield: the sum lands in the fixed field
  std::vector<Automorphism> sub = {Automorphism::identity(z5), power_map(z5, 4)};
  FieldElement t = relative_trace(a, sub);
  EXPECT_EQ(power_map(z5, 4).apply(t), t);
  EXPECT_EQ(relative_trace(a, g5.elements), z5->from_rational(absolute_trace(a)));
}

TEST(TraceCollapse, PowerOfTwoCyclotomics) {
  auto rows = cyclotomic_trace_collapse(5);
  ASSERT_EQ(rows.size(), 4u);
  for (const auto& row : rows) {
    EXPECT_TRUE(row.ok);
    EXPECT_EQ(row.degree, 1 << (row.k - 1));
    EXPECT_EQ(row.image_generator, row.degree);
    EXPECT_EQ(row.traces[0], row.degree);
    for (std::size_t j = 1; j < row.traces.size(); ++j) EXPECT_EQ(row.traces[j], 0);
  }
  EXPECT_EQ(rows[0].image_generator, 2);
  EXPECT_EQ(rows[1].image_generator, 4);
  EXPECT_EQ(rows[3].image_generator, 16);
}

TEST(Flows, Examples) {
  auto q = fixture::rationals();
  const double tau = 2 * std::numbers::pi;
  KInfVector third{{1.0 / 3}, {}};
  std::complex<double> m = only_coefficient(flow_phi(third, approx_series(q, {{1, 1}})));
  EXPECT_NEAR(std::abs(m - std::polar(1.0, tau / 3)), 0, 1e-15);
  AlgebraElement f = approx_series(q, {{0, 2}, {1, 1}, {5, -3}});
  EXPECT_EQ(flow_phi(KInfVector{{0.0}, {}}, f), f);
  EXPECT_EQ(flow_psi(KInfVector{{0.0}, {}}, f), f);
  EXPECT_TRUE(projective_eq(flow_phi(third, approx_series(q, {{7, 1}})), approx_series(q, {{7, 1}})));

  KInfVector one{{1.0}, {}};
  std::complex<double> p = only_coefficient(flow_psi(one, approx_series(q, {{2, 1}})));
  EXPECT_NEAR(std::abs(p - std::polar(1.0, tau * std::log(2.0))), 0, 1e-14);
  EXPECT_EQ(only_coefficient(flow_psi(one, approx_series(q, {{1, 1}}))), std::complex<double>(1.0));
  EXPECT_EQ(flow_psi(one, approx_series(q, {{0, 4}})), approx_series(q, {{0, 4}}));

  EXPECT_THROW(flow_phi(one, series(q, {{1, 1}})), mode_mismatch);
  EXPECT_THROW(flow_psi(one, series(q, {{1, 1}})), mode_mismatch);
}

TEST(Flows, VerificationSuitesPass) {
  for (auto k : {fixture::rationals(), fixture::sqrt2(), fixture::gaussian(), fixture::zeta5()}) {
    auto reports = verify_flows(k, 40, 9);
    ASSERT_EQ(reports.size(), 8u);
    for (const auto& r : reports) {
      EXPECT_TRUE(r.ok()) << r.check << ": " << (r.failures.empty() ? "" : r.failures.front().inputs);
      EXPECT_EQ(r.samples, 40u);
    }
  }
}

TEST(Flows, PsiBreaksTheProductWhenConstantsAreNonzero) {
  auto q = fixture::rationals();
  AlgebraElement f = approx_series(q, {{0, 1}, {2, 1}});
  AlgebraElement g = approx_series(q, {{0, 1}, {3, 1}});
  KInfVector r{{0.37}, {}};
  double delta = max_abs_difference(flow_psi(r, dirichlet_product(f, g)),
                                    dirichlet_product(flow_psi(r, f), flow_psi(r, g)));
  EXPECT_GT(delta, 1e-3);
}
