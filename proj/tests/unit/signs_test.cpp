#include <gtest/gtest.h>

#include <algorithm>
#include <complex>

#include "fixtures.hpp"
#include "nlnf/errors.hpp"
#include "nlnf/random.hpp"
#include "nlnf/signs.hpp"

using namespace nlnf;
using fixture::series;

namespace {

const RealSign P = RealSign::plus;
const RealSign M = RealSign::minus;

ComplexSign cs(const char* text) { return parse_complex_sign(text); }

SignVector real_vector(std::vector<RealSign> v) { return {std::move(v), {}}; }
SignVector complex_vector(std::vector<ComplexSign> v) { return {{}, std::move(v)}; }

}  // namespace

TEST(SignText, RoundTrip) {
  for (const auto& s : all_complex_signs()) EXPECT_EQ(parse_complex_sign(to_string(s)), s);
  EXPECT_EQ(to_string(ComplexSign::singular(1)), "sqrt-");
  EXPECT_EQ(to_string(ComplexSign::sector(3)), "-sqrt-e");
  EXPECT_EQ(parse_real_sign("-"), M);
  EXPECT_THROW(parse_complex_sign("sqrt+"), domain_error);
}

TEST(SignOf, QuadraticExamples) {
  auto k = fixture::sqrt2();
  // places in ascending order: -sqrt2 then +sqrt2
  EXPECT_EQ(sign_of(k->one() + k->generator()), real_vector({M, P}));
  EXPECT_EQ(sign_of(fixture::integer(k, 3)), real_vector({P, P}));
  EXPECT_EQ(sign_of(k->generator()), real_vector({M, P}));
  auto g = fixture::gaussian();
  EXPECT_EQ(sign_of(g->generator()), complex_vector({cs("sqrt-")}));
  EXPECT_EQ(sign_of(g->one() + g->generator()), complex_vector({cs("+e")}));
  EXPECT_EQ(sign_of(-g->one()), complex_vector({cs("-")}));
  EXPECT_THROW(sign_of(k->zero()), signless_element);
}

TEST(SignOf, AxisDecidedExactlyInCyclotomicFields) {
  auto k = fixture::zeta8();
  FieldElement z = k->generator();
  // zeta8^2 = i at the place of the root exp(i pi/4); at exp(3 i pi/4) it is -i.
  SignVector v = sign_of(z * z);
  for (const auto& s : v.complex) EXPECT_FALSE(s.quadrant);
  // zeta + zeta^-1 = sqrt2 times a sign: real at every place
  SignVector w = sign_of(z - z * z * z);
  for (const auto& s : w.complex) EXPECT_TRUE(s == cs("+") || s == cs("-"));
  // a huge real element near the axis is still real
  FieldElement r = (z - z * z * z) * Rational(1000000) + k->one();
  for (const auto& s : sign_of(r).complex) EXPECT_FALSE(s.quadrant);
}

TEST(SignOf, CubeRootInSplittingField) {
  auto k = fixture::cube_root_splitting();
  FieldElement c = fixture::real_cube_root(k);
  ASSERT_EQ(c * c * c, fixture::integer(k, 2));
  SignVector v = sign_of(c);
  ASSERT_EQ(v.complex.size(), 3u);
  // Representatives are the roots in the upper half plane. The pairs ordered by
  // (Re, Im) carry cbrt2 * omega, cbrt2 * omega and cbrt2.
  EXPECT_EQ(v, complex_vector({cs("sqrt-e"), cs("sqrt-e"), cs("+")})) << to_string(v);
  // With the conjugate representative at one pair the vector reads (+, sqrt-e, -e).
  SignVector flipped = v;
  flipped.complex[1] = flipped.complex[1].conj();
  std::vector<ComplexSign> got = flipped.complex, want = {cs("+"), cs("sqrt-e"), cs("-e")};
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  EXPECT_EQ(got, want);
}

TEST(SignProduct, TableExamples) {
  EXPECT_EQ(sign_product(cs("sqrt-"), cs("sqrt-")), std::set<ComplexSign>{cs("-")});
  EXPECT_EQ(sign_product(cs("-"), cs("+e")), std::set<ComplexSign>{cs("-e")});
  EXPECT_EQ(sign_product(cs("+e"), cs("+e")), (std::set<ComplexSign>{cs("+e"), cs("sqrt-"), cs("sqrt-e")}));
  EXPECT_EQ(sign_product(cs("-sqrt-e"), cs("sqrt-e")), (std::set<ComplexSign>{cs("+e"), cs("sqrt-"), cs("sqrt-e")}));
  for (const auto& a : all_complex_signs()) {
    for (const auto& b : all_complex_signs()) {
      auto s = sign_product(a, b);
      EXPECT_EQ(s.size(), a.quadrant && b.quadrant ? 3u : 1u);
      if (!a.quadrant && !b.quadrant) EXPECT_FALSE(s.begin()->quadrant);
      EXPECT_EQ(s, sign_product(b, a));
    }
  }
}

TEST(SignProduct, SamplingOracleSeesExactlyThePredictedSets) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coord(1, 9);
  auto sample = [&](const ComplexSign& s) {
    GaussianRational unit = std::vector<GaussianRational>{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}[s.rotation];
    GaussianRational base = s.quadrant ? GaussianRational(coord(rng), coord(rng)) : GaussianRational(coord(rng), 0);
    return base * unit;
  };
  for (const auto& a : all_complex_signs()) {
    for (const auto& b : all_complex_signs()) {
      std::set<ComplexSign> seen;
      for (int n = 0; n < 2000; ++n) {
        GaussianRational x = sample(a), y = sample(b);
        ASSERT_EQ(sign_of_gaussian(x), a);
        seen.insert(sign_of_gaussian(x * y));
      }
      EXPECT_EQ(seen, sign_product(a, b)) << to_string(a) << " * " << to_string(b);
    }
  }
}

TEST(SignProduct, ConjugationReflectsAcrossTheRealAxis) {
  EXPECT_EQ(cs("+e").conj(), cs("-sqrt-e"));
  EXPECT_EQ(cs("sqrt-e").conj(), cs("-e"));
  EXPECT_EQ(cs("sqrt-").conj(), cs("-sqrt-"));
  EXPECT_EQ(cs("-").conj(), cs("-"));
  for (const auto& s : all_complex_signs()) EXPECT_EQ(s.conj().conj(), s);
}

TEST(SignOf, MultiplicativeAtRealPlacesAndContainedAtComplexPairs) {
  for (auto k : {fixture::sqrt2(), fixture::gaussian(), fixture::zeta5(), fixture::zeta8(),
                 NumberField::define(Polynomial{-2, 0, 0, 1})}) {
    Rng rng(17);
    const IndexShape shape{6, 1};
    for (int n = 0; n < 1000; ++n) {
      FieldElement a = random_index(k, rng, shape), b = random_index(k, rng, shape);
      SignVector sa = sign_of(a), sb = sign_of(b), sab = sign_of(a * b);
      for (std::size_t i = 0; i < sa.real.size(); ++i) EXPECT_EQ(sab.real[i], sa.real[i] * sb.real[i]);
      for (std::size_t j = 0; j < sa.complex.size(); ++j) {
        auto allowed = sign_product(sa.complex[j], sb.complex[j]);
        EXPECT_TRUE(allowed.count(sab.complex[j])) << a.to_string() << " * " << b.to_string();
      }
      if (sa.singular_homogeneous() && sb.singular_homogeneous()) EXPECT_TRUE(sab.singular_homogeneous());
    }
  }
}

TEST(Grade, Examples) {
  auto k = fixture::sqrt2();
  AlgebraElement f = series(k, {{0, 1}, {3, 1}});
  f.add_term(k->generator(), Coefficient(1));
  GradedDecomposition g = grade(f);
  EXPECT_EQ(g.constant, Coefficient(1));
  ASSERT_EQ(g.components.size(), 2u);
  EXPECT_EQ(g.components.at(real_vector({P, P})), series(k, {{3, 1}}));
  EXPECT_EQ(g.components.at(real_vector({M, P})), monomial(k->generator(), Coefficient(1)));

  auto q = fixture::rationals();
  GradedDecomposition h = grade(series(q, {{2, 1}, {-1, 1}}));
  EXPECT_EQ(h.components.at(real_vector({P})), series(q, {{2, 1}}));
  EXPECT_EQ(h.components.at(real_vector({M})), series(q, {{-1, 1}}));
  EXPECT_EQ(restrict(series(q, {{1, 1}, {-1, 1}}), real_vector({P})), series(q, {{1, 1}}));
  EXPECT_TRUE(restrict(series(q, {{1, 1}}), real_vector({M})).is_zero());
}

TEST(Grade, PartitionAndLinearity) {
  for (auto k : {fixture::sqrt2(), fixture::gaussian(), fixture::zeta5()}) {
    Rng rng(23);
    for (int n = 0; n < 50; ++n) {
      AlgebraElement f = random_exact_element(k, rng, 6, IndexShape{8, 2});
      AlgebraElement g = random_exact_element(k, rng, 6, IndexShape{8, 2});
      GradedDecomposition gf = grade(f), gg = grade(g), gsum = grade(f + g);
      EXPECT_EQ(gf.reassemble(k, Mode::exact), f);
      std::size_t total = gf.constant.is_zero() ? 0 : 1;
      for (const auto& [v, part] : gf.components) {
        total += part.size();
        EXPECT_EQ(restrict(f, v), part);
      }
      EXPECT_EQ(total, f.size());
      for (const auto& [v, part] : gsum.components) EXPECT_EQ(part, restrict(f, v) + restrict(g, v));
      EXPECT_EQ(gsum.constant, gf.constant + gg.constant);
      for (const auto& term : f.terms()) {
        if (!term.first.is_zero()) EXPECT_EQ(grade(monomial(term.first, term.second)).components.size(), 1u);
      }
    }
  }
}

TEST(Grade, CauchyProductLeavesTheGrading) {
  auto q = fixture::rationals();
  AlgebraElement f = series(q, {{1, 1}, {3, 1}});
  AlgebraElement g = series(q, {{-2, 1}});
  EXPECT_EQ(grade(f).components.size(), 1u);
  EXPECT_EQ(grade(g).components.size(), 1u);
  EXPECT_EQ(grade(cauchy_product(f, g)).components.size(), 2u);
}

TEST(GradedLaw, RealAndComplexLawsHold) {
  for (auto k : {fixture::sqrt2(), fixture::gaussian(), fixture::zeta5()}) {
    Rng rng(29);
    for (int n = 0; n < 60; ++n) {
      AlgebraElement f = random_exact_element(k, rng, 5, IndexShape{8, 2});
      AlgebraElement g = random_exact_element(k, rng, 5, IndexShape{8, 2});
      GradedLawReport r = check_graded_dirichlet_law(f, g);
      EXPECT_TRUE(r.ok) << (r.mismatches.empty() ? "" : r.mismatches.front());
    }
  }
}

TEST(GradedLaw, ConstantTermErratumPair) {
  auto q = fixture::rationals();
  GradedLawReport r = check_graded_dirichlet_law(series(q, {{0, 2}, {3, 1}}), series(q, {{0, 1}, {2, 5}}));
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.constant, Coefficient(13));
  EXPECT_EQ(r.constant_rule, Coefficient(13));
  EXPECT_EQ(r.constant_alternative, Coefficient(16));
}
