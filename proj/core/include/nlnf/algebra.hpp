#ifndef NLNF_ALGEBRA_HPP
#define NLNF_ALGEBRA_HPP

#include <complex>
#include <map>
#include <string>

#include "nlnf/number_field.hpp"
#include "nlnf/rational.hpp"

namespace nlnf {

enum class Mode { exact, approx };

std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);

/// A coefficient in C: an exact Gaussian rational or a double-precision complex.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(GaussianRational z) : mode_(Mode::exact), exact_(std::move(z)) {}
  Coefficient(std::complex<double> z) : mode_(Mode::approx), approx_(z) {}
  Coefficient(long n) : Coefficient(GaussianRational(n)) {}

  static Coefficient zero(Mode mode);
  static Coefficient one(Mode mode);

  Mode mode() const { return mode_; }
  const GaussianRational& exact() const;
  std::complex<double> approx() const { return approx_; }
  /// Value as a complex double regardless of mode.
  std::complex<double> value() const;
  bool is_zero() const;

  /// Same value carried in the requested mode; approx -> exact is rejected.
  Coefficient in_mode(Mode mode) const;

  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient& operator*=(const Coefficient& o);
  Coefficient inverse() const;

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator/(const Coefficient& a, const Coefficient& b) { return a * b.inverse(); }
  friend Coefficient operator-(const Coefficient& a) { return Coefficient::zero(a.mode_) - a; }
  /// Exact comparison (bitwise for approx values).
  friend bool operator==(const Coefficient& a, const Coefficient& b);
  friend bool operator!=(const Coefficient& a, const Coefficient& b) { return !(a == b); }

 private:
  void check(const Coefficient& o) const;
  Mode mode_ = Mode::exact;
  GaussianRational exact_;
  std::complex<double> approx_;
};

std::string to_string(const Coefficient& c);

/// Finitely supported sum of monomials z^alpha with alpha in K.
class AlgebraElement {
 public:
  using Terms = std::map<FieldElement, Coefficient>;

  AlgebraElement() = default;
  AlgebraElement(FieldPtr field, Mode mode) : field_(std::move(field)), mode_(mode) {}

  const FieldPtr& field() const { return field_; }
  Mode mode() const { return mode_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient at alpha (zero if absent).
  Coefficient coeff(const FieldElement& alpha) const;
  /// Constant coefficient a_0.
  Coefficient constant() const;
  /// Adds c to the coefficient at alpha, dropping it if the result is zero.
  void add_term(const FieldElement& alpha, const Coefficient& c);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Coefficient& c);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const Coefficient& c) { return a *= c; }
  friend AlgebraElement operator*(const Coefficient& c, AlgebraElement a) { return a *= c; }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

  /// Same support, coefficients converted to `mode`.
  AlgebraElement in_mode(Mode mode) const;

  /// e.g. "2*z^{0} + (1+1i)*z^{a/2}"
  std::string to_string() const;

  void check_compatible(const AlgebraElement& o) const;

 private:
  FieldPtr field_;
  Mode mode_ = Mode::exact;
  Terms terms_;
};

AlgebraElement monomial(const FieldElement& alpha, const Coefficient& c);
AlgebraElement zero_element(const FieldPtr& field, Mode mode);
/// id for the Cauchy product: z^0.
AlgebraElement cauchy_identity(const FieldPtr& field, Mode mode);
/// id for the Dirichlet product: z^1.
AlgebraElement dirichlet_identity(const FieldPtr& field, Mode mode);

/// c_alpha = sum over alpha1 + alpha2 = alpha of a_alpha1 b_alpha2.
AlgebraElement cauchy_product(const AlgebraElement& f, const AlgebraElement& g);

/// d_alpha = sum over alpha1 * alpha2 = alpha (both nonzero) of a_alpha1 b_alpha2 for alpha != 0;
/// d_0 = a_0 * sum_{alpha != 0} b_alpha + b_0 * sum_{alpha != 0} a_alpha + a_0 b_0.
AlgebraElement dirichlet_product(const AlgebraElement& f, const AlgebraElement& g);

/// T(f): the coefficient sum.
Coefficient trace_functional(const AlgebraElement& f);

/// T(f) == 0 exactly; in approx mode |T(f)| <= tol.
bool is_in_ideal(const AlgebraElement& f, double tol = 1e-12);

/// Trace-normalized representative of [f].
class ProjectiveClass {
 public:
  const AlgebraElement& representative() const { return rep_; }

 private:
  friend ProjectiveClass projectivize(const AlgebraElement& f);
  explicit ProjectiveClass(AlgebraElement rep) : rep_(std::move(rep)) {}
  AlgebraElement rep_;
};

/// Throws not_projectivizable when T(f) = 0.
ProjectiveClass projectivize(const AlgebraElement& f);

/// f = lambda g for some nonzero lambda. Approx mode compares within tol.
bool projective_eq(const AlgebraElement& f, const AlgebraElement& g, double tol = 1e-12);

/// Reindexes a_beta z^beta to a_beta z^(beta * alpha); alpha must be nonzero.
AlgebraElement monomial_compose(const AlgebraElement& f, const FieldElement& alpha);

/// max |f_alpha - g_alpha| over the union of supports.
double max_abs_difference(const AlgebraElement& f, const AlgebraElement& g);

}  // namespace nlnf

#endif  // NLNF_ALGEBRA_HPP
