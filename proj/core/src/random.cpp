#include "nlnf/random.hpp"

namespace nlnf {

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

}  // namespace

FieldElement random_index(const FieldPtr& field, Rng& rng, const IndexShape& shape) {
  for (;;) {
    std::vector<Rational> coords;
    for (int i = 0; i < field->degree(); ++i) {
      // about a third of the coordinates vanish, which keeps axis and rational indices common
      if (uniform(rng, 0, 2) == 0) {
        coords.emplace_back(0);
        continue;
      }
      Rational q(uniform(rng, -shape.height, shape.height), uniform(rng, 1, shape.max_denominator));
      q.canonicalize();
      coords.push_back(q);
    }
    FieldElement a = field->element(std::move(coords));
    if (!a.is_zero()) return a;
  }
}

GaussianRational random_gaussian(Rng& rng, int height) {
  Rational re(uniform(rng, -height, height), uniform(rng, 1, 3));
  Rational im(0);
  if (uniform(rng, 0, 1) == 1) im = Rational(uniform(rng, -height, height), uniform(rng, 1, 3));
  re.canonicalize();
  im.canonicalize();
  return {re, im};
}

namespace {

AlgebraElement random_element(const FieldPtr& field, Rng& rng, int max_terms, const IndexShape& shape,
                              bool allow_constant, Mode mode) {
  AlgebraElement f(field, mode);
  const long terms = uniform(rng, 1, max_terms);
  for (long k = 0; k < terms; ++k) {
    FieldElement alpha = allow_constant && uniform(rng, 0, 5) == 0 ? field->zero() : random_index(field, rng, shape);
    if (mode == Mode::exact) {
      GaussianRational c = random_gaussian(rng, 5);
      if (c.is_zero()) c = GaussianRational(1);
      f.add_term(alpha, Coefficient(c));
    } else {
      std::uniform_real_distribution<double> unit(-1.0, 1.0);
      f.add_term(alpha, Coefficient(std::complex<double>(unit(rng), unit(rng))));
    }
  }
  return f;
}

}  // namespace

AlgebraElement random_exact_element(const FieldPtr& field, Rng& rng, int max_terms, const IndexShape& shape,
                                    bool allow_constant) {
  return random_element(field, rng, max_terms, shape, allow_constant, Mode::exact);
}

AlgebraElement random_approx_element(const FieldPtr& field, Rng& rng, int max_terms, const IndexShape& shape,
                                     bool allow_constant) {
  return random_element(field, rng, max_terms, shape, allow_constant, Mode::approx);
}

KInfVector random_kinf(const FieldPtr& field, Rng& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  KInfVector v;
  for (int i = 0; i < field->real_places(); ++i) v.real.push_back(unit(rng));
  for (int j = 0; j < field->complex_pairs(); ++j) v.complex.emplace_back(unit(rng), unit(rng));
  return v;
}

}  // namespace nlnf
