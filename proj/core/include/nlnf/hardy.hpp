#ifndef NLNF_HARDY_HPP
#define NLNF_HARDY_HPP

#include <complex>
#include <ostream>
#include <vector>

#include "nlnf/signs.hpp"

namespace nlnf {

struct EvalResult {
  std::complex<double> value;
  double error_bound = 0;
};

/// Point of the hyperbolization: tau = x + i t per real place, and
/// (u, v) = (x + i t, s + i y) per complex pair with t, s > 0.
struct HyperPoint {
  std::vector<std::complex<double>> tau;
  std::vector<std::pair<std::complex<double>, std::complex<double>>> uv;

  /// Throws domain_error unless every t (and s) is strictly positive.
  void validate(const FieldPtr& field) const;
  /// The K_infinity point under the hyperbolic coordinates: x per real place,
  /// z = x + i y per complex pair.
  KInfVector boundary() const;
  /// Same boundary point with every t and s replaced by `height`.
  static HyperPoint over(const KInfVector& z, double height);
};

/// z in K_infinity reduced modulo the image of Z[a]: the coordinates with
/// respect to the basis 1, a, ..., a^(d-1), each in [0, 1).
struct TorusPoint {
  std::vector<double> coords;

  static TorusPoint reduce(const FieldPtr& field, const KInfVector& z);
  KInfVector lift(const FieldPtr& field) const;
};

/// exp(2 pi i Tr(alpha z)).
EvalResult character_eval(const FieldElement& alpha, const KInfVector& z);

/// Sum of a_alpha exp(2 pi i Tr(alpha z)).
EvalResult boundary_eval(const AlgebraElement& f, const KInfVector& z);

/// Evaluates each graded component with its own conjugation applied to p:
/// a real place with sign -, and a complex pair with singular part e, see
/// (x - i t) and e^-1 b respectively, so that every term decays in t.
EvalResult series_eval_hyper(const GradedDecomposition& graded, const FieldPtr& field, const HyperPoint& p);
EvalResult series_eval_hyper(const AlgebraElement& f, const HyperPoint& p);

/// Real embeddings positive and complex representatives in the open first quadrant.
bool in_positive_cone(const FieldElement& alpha);
bool hardy_membership(const AlgebraElement& f);

double l2_norm(const AlgebraElement& f);

/// Integers Tr(alpha a^j), j < d; the coordinates of alpha in the dual lattice.
std::vector<Integer> dual_coordinates(const FieldElement& alpha);
/// The element of the inverse different with the given dual coordinates.
FieldElement from_dual_coordinates(const FieldPtr& field, const std::vector<Integer>& m);

/// Equal-weight quadrature of f * conj(g) over the fundamental domain of Z[a],
/// `grid` points per dimension. f and g must be supported in the inverse
/// different; throws bandwidth_error when grid < 2 * height + 1.
EvalResult torus_inner_product(const AlgebraElement& f, const AlgebraElement& g, int grid);

/// CSV rows "t,abs_value,gap,bound" for the ladder t = 1, 1/2, ..., 2^-steps.
void write_decay_sweep(std::ostream& out, const AlgebraElement& f, const KInfVector& x, int steps);

}  // namespace nlnf

#endif  // NLNF_HARDY_HPP
