#ifndef NLNF_SIGNS_HPP
#define NLNF_SIGNS_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "nlnf/algebra.hpp"

namespace nlnf {

enum class RealSign { plus, minus };

RealSign operator*(RealSign a, RealSign b);

/// A complex sign. `rotation` k stands for the unit i^k, so 0..3 are
/// +, sqrt-, -, -sqrt-. A quadrant sign k-eps covers the open sector between
/// the axes i^k and i^(k+1); the axis ones are the singular signs.
struct ComplexSign {
  int rotation = 0;
  bool quadrant = false;

  static ComplexSign singular(int k) { return {((k % 4) + 4) % 4, false}; }
  static ComplexSign sector(int k) { return {((k % 4) + 4) % 4, true}; }

  /// The singular sign e(v) of the same rotation.
  ComplexSign singular_part() const { return singular(rotation); }
  /// Sign of the complex conjugate.
  ComplexSign conj() const { return quadrant ? sector(3 - rotation) : singular(-rotation); }

  friend bool operator==(const ComplexSign& a, const ComplexSign& b) {
    return a.rotation == b.rotation && a.quadrant == b.quadrant;
  }
  friend bool operator!=(const ComplexSign& a, const ComplexSign& b) { return !(a == b); }
  friend bool operator<(const ComplexSign& a, const ComplexSign& b) {
    return a.quadrant != b.quadrant ? !a.quadrant : a.rotation < b.rotation;
  }
};

/// All eight complex signs: the four singular ones, then the four quadrants.
std::vector<ComplexSign> all_complex_signs();

/// Singular x singular and singular x quadrant give one sign; two quadrants
/// give three: the rotated quadrant, the axis after it, and the next quadrant.
std::set<ComplexSign> sign_product(const ComplexSign& a, const ComplexSign& b);

/// The complex sign of a nonzero Gaussian rational, decided exactly.
ComplexSign sign_of_gaussian(const GaussianRational& z);

struct SignVector {
  std::vector<RealSign> real;
  std::vector<ComplexSign> complex;

  /// Quadrant flags per complex pair (true where the sign is a quadrant).
  std::vector<bool> type_vector() const;
  bool singular_homogeneous() const;

  friend bool operator==(const SignVector& a, const SignVector& b) {
    return a.real == b.real && a.complex == b.complex;
  }
  friend bool operator!=(const SignVector& a, const SignVector& b) { return !(a == b); }
  friend bool operator<(const SignVector& a, const SignVector& b) {
    if (a.real != b.real) return a.real < b.real;
    return a.complex < b.complex;
  }
};

/// All sign vectors v with v_i in a_i * b_i for every place.
std::set<SignVector> sign_product(const SignVector& a, const SignVector& b);

/// "+", "-", "sqrt-", "-sqrt-", "+e", "sqrt-e", "-e", "-sqrt-e".
std::string to_string(RealSign s);
std::string to_string(const ComplexSign& s);
std::string to_string(const SignVector& v);
RealSign parse_real_sign(const std::string& text);
ComplexSign parse_complex_sign(const std::string& text);

/// Certified sign vector of a nonzero element. Axis membership at complex
/// places is decided exactly through the minimal polynomial of alpha and alpha^2.
/// Throws signless_element for zero.
SignVector sign_of(const FieldElement& alpha);

struct GradedDecomposition {
  std::map<SignVector, AlgebraElement> components;
  Coefficient constant;

  /// Sum of all components plus the constant.
  AlgebraElement reassemble(const FieldPtr& field, Mode mode) const;
};

GradedDecomposition grade(const AlgebraElement& f);

/// Terms of f whose index has sign vector v.
AlgebraElement restrict(const AlgebraElement& f, const SignVector& v);

struct GradedLawReport {
  bool ok = true;
  std::vector<std::string> mismatches;
  /// Constant term of f (x) g as computed.
  Coefficient constant;
  /// a_0 sum' b + b_0 sum' a + a_0 b_0.
  Coefficient constant_rule;
  /// F(1)G(1) - F_0 G_0, the alternative closed form.
  Coefficient constant_alternative;
};

/// Checks (F (x) G)_v = sum over v in v1 v2 of (F_v1 (x) G_v2)|_v for every sign
/// vector v and the constant-term rule.
GradedLawReport check_graded_dirichlet_law(const AlgebraElement& f, const AlgebraElement& g);

}  // namespace nlnf

#endif  // NLNF_SIGNS_HPP
