#ifndef NLNF_POLYNOMIAL_HPP
#define NLNF_POLYNOMIAL_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "nlnf/rational.hpp"

namespace nlnf {

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// The zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<long> coeffs);
  explicit Polynomial(const Rational& constant);

  static Polynomial monomial(const Rational& c, std::size_t degree);
  static Polynomial x() { return monomial(Rational(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i; zero beyond the degree.
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }

  Polynomial monic() const;
  Polynomial derivative() const;
  Rational eval(const Rational& x) const;

  /// Horner evaluation over any ring T that accepts Rational coefficients
  /// through `lift`.
  template <class T, class Lift>
  T eval_with(const T& x, const T& zero, Lift lift) const {
    T acc = zero;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + lift(*it);
    return acc;
  }

  Polynomial compose(const Polynomial& inner) const;
  /// p(x + shift)
  Polynomial shift(const Rational& s) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator-(const Polynomial& a) { return a * Rational(-1); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Quotient and remainder; throws division_by_zero for a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  Polynomial operator%(const Polynomial& divisor) const { return divmod(divisor).second; }
  Polynomial operator/(const Polynomial& divisor) const { return divmod(divisor).first; }

  /// Text with variable `var`, highest degree first, e.g. "x^2 - 2".
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtendedGcd {
  Polynomial g, s, t;
};
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);

/// p / gcd(p, p'), made monic.
Polynomial square_free_part(const Polynomial& p);

/// Integer multiple of p with coprime integer coefficients and positive leading term.
std::vector<Integer> primitive_integer_coeffs(const Polynomial& p);

/// Rational roots of p (each listed once).
std::vector<Rational> rational_roots(const Polynomial& p);

/// n-th cyclotomic polynomial.
Polynomial cyclotomic_polynomial(unsigned n);

/// Sturm-sequence root count and Cauchy bound helpers for real isolation.
std::vector<Polynomial> sturm_sequence(const Polynomial& p);
int sign_variations(const std::vector<Polynomial>& seq, const Rational& x);
/// Strict bound: every complex root z satisfies |z| < cauchy_bound(p).
Rational cauchy_bound(const Polynomial& p);

}  // namespace nlnf

#endif  // NLNF_POLYNOMIAL_HPP
