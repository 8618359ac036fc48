// Shared desk fields and conversions between library values and oracle values.
#pragma once

#include <map>
#include <vector>

#include "nlnf/algebra.hpp"
#include "nlnf/number_field.hpp"
#include "oracles.hpp"

namespace fixture {

using namespace nlnf;

inline FieldPtr rationals() { return NumberField::define(Polynomial{0, 1}); }
inline FieldPtr sqrt2() { return NumberField::define(Polynomial{-2, 0, 1}); }
inline FieldPtr gaussian() { return NumberField::define(Polynomial{1, 0, 1}); }
inline FieldPtr zeta5() { return NumberField::define(cyclotomic_polynomial(5)); }
inline FieldPtr zeta8() { return NumberField::define(cyclotomic_polynomial(8)); }
// Splitting field of x^3 - 2, generated by cbrt(2) + omega.
inline FieldPtr cube_root_splitting() { return NumberField::define(Polynomial{9, 9, 0, 3, 6, 3, 1}); }

// The real cube root of 2 in the splitting field's power basis.
inline FieldElement real_cube_root(const FieldPtr& k) {
  auto q = [](const char* s) { return parse_rational(s); };
  return k->element({q("2"), q("1"), q("-2/3"), q("2/3"), q("1/3"), q("2/9")});
}

inline FieldElement integer(const FieldPtr& k, long n) { return k->from_rational(Rational(n)); }

inline AlgebraElement mono(const FieldElement& alpha, long c) { return monomial(alpha, Coefficient(c)); }

// Integer-indexed element over a field: sum c_n z^n.
inline AlgebraElement series(const FieldPtr& k, const std::vector<std::pair<long, long>>& terms) {
  AlgebraElement f = zero_element(k, Mode::exact);
  for (const auto& [n, c] : terms) f.add_term(integer(k, n), Coefficient(c));
  return f;
}

inline oracle::Vec coords(const FieldElement& a) { return oracle::Vec(a.coords().begin(), a.coords().end()); }

inline oracle::Vec monic_coeffs(const FieldPtr& k) {
  const auto& c = k->minpoly().coeffs();
  return oracle::Vec(c.begin(), c.end());
}

inline oracle::Series to_series(const AlgebraElement& f) {
  oracle::Series s;
  for (const auto& [alpha, c] : f.terms()) s.emplace_back(coords(alpha), oracle::GQ{c.exact().re, c.exact().im});
  return s;
}

inline std::map<oracle::Vec, oracle::GQ> to_map(const AlgebraElement& f) { return oracle::normalize(to_series(f)); }

}  // namespace fixture
