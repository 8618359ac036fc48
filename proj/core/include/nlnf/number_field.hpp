#ifndef NLNF_NUMBER_FIELD_HPP
#define NLNF_NUMBER_FIELD_HPP

#include <complex>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "nlnf/interval.hpp"
#include "nlnf/polynomial.hpp"
#include "nlnf/roots.hpp"

namespace nlnf {

class NumberField;
class FieldElement;
using FieldPtr = std::shared_ptr<const NumberField>;

enum class PlaceKind { real, complex_pair };

/// An archimedean place. Real places come first (ascending root), then one
/// entry per conjugate pair, represented by the root with positive imaginary part.
struct Place {
  PlaceKind kind;
  std::size_t index;  // position among places of the same kind
};

/// Rectangle with rational endpoints, certified to contain its target.
struct CertifiedBox {
  ComplexInterval box;
  Rational width() const { return box.width(); }
  bool contains(const GaussianRational& z) const { return box.contains(z); }
};

/// A point of K_infinity: r real coordinates, then s complex coordinates
/// (one per pair representative).
struct KInfVector {
  std::vector<double> real;
  std::vector<std::complex<double>> complex;
};

struct FieldOptions {
  PrecisionOptions precision;
  int max_degree = 16;
};

/// K = Q[x]/(p) for monic irreducible p, with certified root isolation.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  /// Validates p (monic, irreducible) and isolates its roots.
  static FieldPtr define(const Polynomial& minpoly, FieldOptions opts = {});

  const Polynomial& minpoly() const { return minpoly_; }
  int degree() const { return minpoly_.degree(); }
  int real_places() const { return static_cast<int>(iso_.real_count()); }
  int complex_pairs() const { return static_cast<int>(iso_.pair_count()); }
  const std::vector<Place>& places() const { return places_; }
  const FieldOptions& options() const { return opts_; }

  /// Box of width <= w around the generator's image at `place`.
  CertifiedBox root_box(const Place& place, const Rational& w) const;
  /// Pairwise-disjointness of the current root boxes (including conjugates).
  bool boxes_disjoint() const;

  /// Tr(a^i) for i = 0..d-1 where a is the generator.
  const std::vector<Rational>& power_traces() const { return power_traces_; }
  /// Multiplication-by-x matrix in the power basis, column j = x * x^j.
  const std::vector<std::vector<Rational>>& companion() const { return companion_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement generator() const;
  FieldElement from_rational(const Rational& q) const;
  FieldElement element(std::vector<Rational> coords) const;

  bool same_as(const NumberField& other) const { return this == &other || minpoly_ == other.minpoly_; }

  /// Leading root isolator; exposed for diagnostics.
  RootIsolator isolator_snapshot() const;

 private:
  NumberField(Polynomial p, FieldOptions opts);

  Polynomial minpoly_;
  FieldOptions opts_;
  std::vector<Place> places_;
  std::vector<Rational> power_traces_;
  std::vector<std::vector<Rational>> companion_;
  mutable std::mutex mutex_;
  mutable RootIsolator iso_;
};

/// Element of K in the power basis 1, a, ..., a^{d-1}.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr field, std::vector<Rational> coords);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }
  bool is_zero() const;
  bool is_rational() const;
  bool is_integral() const;  // all coordinates in Z, i.e. in Z[a]
  /// Coordinate polynomial c0 + c1 x + ... .
  Polynomial as_polynomial() const { return Polynomial(coords_); }

  FieldElement inverse() const;
  FieldElement pow(long exponent) const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator*=(const Rational& q);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator*(FieldElement a, const Rational& q) { return a *= q; }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }
  friend FieldElement operator-(const FieldElement& a) { return a * Rational(-1); }

  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
  /// Lexicographic order on coordinates.
  friend bool operator<(const FieldElement& a, const FieldElement& b) { return a.coords_ < b.coords_; }

  /// e.g. "1 + a", "-1/2*a^2", "0"; the generator prints as `var`.
  std::string to_string(const std::string& var = "a") const;

 private:
  void check_same_field(const FieldElement& o) const;
  FieldPtr field_;
  std::vector<Rational> coords_;
};

enum class ElementOp { add, sub, mul, inv };
FieldElement elem_arith(ElementOp op, const FieldElement& a, const FieldElement* b = nullptr);

/// Matrix of multiplication by a, column j = coords of a * x^j.
std::vector<std::vector<Rational>> multiplication_matrix(const FieldElement& a);
/// Characteristic polynomial of the multiplication matrix.
Polynomial characteristic_polynomial(const FieldElement& a);

Rational absolute_trace(const FieldElement& a);
Polynomial minimal_polynomial_of(const FieldElement& a);

/// Box of width <= w containing the image of a under `place`.
CertifiedBox embed(const FieldElement& a, const Place& place, const Rational& w);
/// Boxes for every place, in place order.
std::vector<CertifiedBox> embed_all(const FieldElement& a, const Rational& w);
/// Floating-point image of a (boxes refined to 2^-60).
KInfVector numeric_embedding(const FieldElement& a);

/// Tr(a * x^j) in Z for j = 0..d-1, with O_K taken as the equation order Z[x].
bool is_in_inverse_different(const FieldElement& a);
/// p'(x) * a in Z[x].
bool is_in_inverse_different_monogenic(const FieldElement& a);

/// Sum of real coordinates plus twice the real part of each complex coordinate.
double trace_on_infinity(const KInfVector& v);
/// Certified analogue over embedding boxes (complex pairs contribute 2 Re).
Interval trace_on_infinity(const FieldPtr& field, const std::vector<CertifiedBox>& boxes);

/// Coordinatewise product on K_infinity.
KInfVector multiply(const KInfVector& x, const KInfVector& y);
KInfVector operator+(const KInfVector& x, const KInfVector& y);

}  // namespace nlnf

#endif  // NLNF_NUMBER_FIELD_HPP
