#ifndef NLNF_GALOIS_HPP
#define NLNF_GALOIS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nlnf/random.hpp"
#include "nlnf/signs.hpp"

namespace nlnf {

/// A field automorphism given by the image of the generator.
class Automorphism {
 public:
  /// Throws not_an_automorphism unless minpoly(image) equals the field's minpoly.
  static Automorphism make(const FieldPtr& field, const FieldElement& image);
  static Automorphism identity(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const FieldElement& image() const { return image_; }
  const FieldElement& inverse_image() const { return inverse_image_; }
  int order() const { return order_; }
  bool is_identity() const { return image_ == field_->generator(); }

  FieldElement apply(const FieldElement& a) const;
  /// (this o other)(a) = this(other(a)).
  Automorphism compose(const Automorphism& other) const;
  Automorphism inverse() const;

  friend bool operator==(const Automorphism& a, const Automorphism& b) { return a.image_ == b.image_; }

 private:
  Automorphism(FieldPtr field, FieldElement image) : field_(std::move(field)), image_(std::move(image)) {}
  void complete();
  FieldPtr field_;
  FieldElement image_;
  FieldElement inverse_image_;
  int order_ = 1;
};

struct GaloisGroup {
  std::vector<Automorphism> elements;  // elements[0] is the identity
  std::vector<std::vector<std::size_t>> table;  // table[i][j] = index of elements[i] o elements[j]

  std::size_t order() const { return elements.size(); }
  /// Closure, associativity, identity and inverses from the table.
  bool verify_table() const;
  /// Least common multiple of the element orders.
  int exponent() const;
};

struct GroupFamily {
  enum class Kind { quadratic, cyclotomic, explicit_images } kind = Kind::quadratic;
  unsigned n = 0;
  std::vector<FieldElement> images;

  static GroupFamily quadratic() { return {Kind::quadratic, 0, {}}; }
  static GroupFamily cyclotomic(unsigned n) { return {Kind::cyclotomic, n, {}}; }
  static GroupFamily explicit_images(std::vector<FieldElement> images) {
    return {Kind::explicit_images, 0, std::move(images)};
  }
};

/// Throws domain_error when the family does not apply to the field.
GaloisGroup group_from_family(const FieldPtr& field, const GroupFamily& family);

/// Reindexes z^alpha to z^sigma(alpha).
AlgebraElement apply_to_algebra(const Automorphism& sigma, const AlgebraElement& f);

/// Sign vector of sigma(alpha) as a function of the sign vector of alpha,
/// for alpha ranging over observed indices.
using SignPermutation = std::map<SignVector, SignVector>;

struct CheckFailure {
  std::string inputs;
  std::string lhs;
  std::string rhs;
  double delta = 0;
};

struct CheckReport {
  std::string check;
  std::size_t samples = 0;
  std::vector<CheckFailure> failures;
  bool ok() const { return failures.empty(); }
};

struct AutomorphismReport {
  CheckReport report;
  SignPermutation iota;
};

/// Checks on `samples` random pairs that sigma commutes with both products,
/// preserves T, and permutes the grading through a single consistent map.
AutomorphismReport verify_nonlinear_automorphism(const Automorphism& sigma, std::size_t samples,
                                                 std::uint64_t seed);

/// K embedded in L through the image of K's generator.
class TowerEmbedding {
 public:
  /// Throws domain_error unless K.minpoly(image) = 0 in L.
  TowerEmbedding(FieldPtr base, FieldPtr extension, FieldElement image);

  const FieldPtr& base() const { return base_; }
  const FieldPtr& extension() const { return extension_; }
  const FieldElement& image() const { return image_; }
  FieldElement map(const FieldElement& a) const;

 private:
  FieldPtr base_;
  FieldPtr extension_;
  FieldElement image_;
};

/// Whether sigma fixes the embedded base field, checked on sampled monomials,
/// together with the automorphism checks.
CheckReport fixed_field_check(const Automorphism& sigma, const TowerEmbedding& tower, std::size_t samples,
                              std::uint64_t seed);

/// Sum of sigma(alpha) over the supplied automorphisms.
FieldElement relative_trace(const FieldElement& alpha, const std::vector<Automorphism>& group);

struct TraceCollapseRow {
  int k = 0;
  int degree = 0;
  std::vector<Rational> traces;  // Tr(zeta^j), j = 0..d-1
  Integer image_generator;       // generator of the trace image of Z[zeta]
  bool ok = false;
};

/// For k = 2..k_max in Q(zeta_{2^k}): Tr(zeta^j) = 0 for 0 < j < d and Tr(1) = d.
std::vector<TraceCollapseRow> cyclotomic_trace_collapse(int k_max);

/// Multiplies each a_alpha by exp(2 pi i Tr(alpha r)). Requires approx mode.
AlgebraElement flow_phi(const KInfVector& r, const AlgebraElement& f);

/// Multiplies each a_alpha (alpha != 0) by exp(2 pi i Tr(r log|alpha|)); the
/// complex coordinates contribute 2 Re(r_mu) log|alpha_mu|. Requires approx mode.
AlgebraElement flow_psi(const KInfVector& r, const AlgebraElement& f);

/// Homomorphism, group-law, norm and projective-fixing checks for both flows.
std::vector<CheckReport> verify_flows(const FieldPtr& field, std::size_t samples, std::uint64_t seed,
                                      double tol = 1e-12);

}  // namespace nlnf

#endif  // NLNF_GALOIS_HPP
