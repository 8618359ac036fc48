#ifndef NLNF_RANDOM_HPP
#define NLNF_RANDOM_HPP

#include <random>

#include "nlnf/algebra.hpp"

namespace nlnf {

using Rng = std::mt19937_64;

struct IndexShape {
  int height = 20;           // |coordinate numerators| <= height
  int max_denominator = 1;   // coordinates p/q with 1 <= q <= max_denominator
};

/// Nonzero field element with small coordinates.
FieldElement random_index(const FieldPtr& field, Rng& rng, const IndexShape& shape);

/// Gaussian rational with numerators in [-height, height] and denominators in {1, 2, 3}.
GaussianRational random_gaussian(Rng& rng, int height);

/// Exact-mode element with between 1 and max_terms terms.
AlgebraElement random_exact_element(const FieldPtr& field, Rng& rng, int max_terms, const IndexShape& shape,
                                    bool allow_constant = true);

/// Approx-mode element with coefficients of modulus at most 1.
AlgebraElement random_approx_element(const FieldPtr& field, Rng& rng, int max_terms, const IndexShape& shape,
                                     bool allow_constant = true);

/// K_infinity vector with coordinates in [-1, 1] (real and imaginary parts).
KInfVector random_kinf(const FieldPtr& field, Rng& rng);

}  // namespace nlnf

#endif  // NLNF_RANDOM_HPP
