#ifndef NLNF_FACTOR_HPP
#define NLNF_FACTOR_HPP

#include <optional>

#include "nlnf/polynomial.hpp"
#include "nlnf/roots.hpp"

namespace nlnf {

/// Repeated-factor and rational-root checks; a monic nontrivial factor if found.
std::optional<Polynomial> quick_factor(const Polynomial& p);

/// True when p(x + c) is Eisenstein at some prime for a small shift c,
/// which certifies irreducibility over Q.
bool eisenstein_certificate(const Polynomial& p);

/// Certified search for a monic rational factor of a square-free polynomial
/// whose roots are isolated by `iso`. Refines `iso` as needed.
std::optional<Polynomial> find_factor(const Polynomial& p, RootIsolator& iso);

}  // namespace nlnf

#endif  // NLNF_FACTOR_HPP
