#ifndef NLNF_DIRICHLET_HPP
#define NLNF_DIRICHLET_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "nlnf/algebra.hpp"

namespace nlnf {

/// Coefficients a_1..a_N of a truncated series over the positive integers.
class IntegerSeries {
 public:
  IntegerSeries(std::size_t n, Mode mode);

  std::size_t bound() const { return a_.size() - 1; }
  Mode mode() const { return mode_; }
  const Coefficient& operator[](std::size_t n) const { return a_.at(n); }
  void set(std::size_t n, const Coefficient& c);
  /// Largest n with a_n != 0, or 0 for the zero series.
  std::size_t max_support() const;
  /// Set by dconv when some product a_i b_j with i j > N was dropped.
  bool truncation_defect() const { return defect_; }
  void mark_defect(bool d) { defect_ = d; }

  static IntegerSeries delta(std::size_t n, Mode mode);
  static IntegerSeries ones(std::size_t n, Mode mode);

  friend bool operator==(const IntegerSeries& x, const IntegerSeries& y) {
    return x.mode_ == y.mode_ && x.a_ == y.a_;
  }

 private:
  Mode mode_;
  std::vector<Coefficient> a_;  // a_[0] unused
  bool defect_ = false;
};

/// Smallest-prime-factor table up to N.
class DivisorSieve {
 public:
  explicit DivisorSieve(std::size_t n);
  std::size_t bound() const { return spf_.size() - 1; }
  std::uint32_t smallest_prime_factor(std::size_t n) const { return spf_.at(n); }
  /// Divisors of n in increasing order.
  std::vector<std::uint32_t> divisors(std::size_t n) const;

 private:
  std::vector<std::uint32_t> spf_;
};

/// Requires support in the positive integers up to n; throws domain_error otherwise.
IntegerSeries from_algebra(const AlgebraElement& f, std::size_t n);
/// Back to an element of the field algebra over the given rational field.
AlgebraElement to_algebra(const IntegerSeries& s, const FieldPtr& rationals);

/// c_n = sum over d | n of a_d b_(n/d), truncated at N.
IntegerSeries dconv(const IntegerSeries& f, const IntegerSeries& g);

/// Dirichlet inverse up to N; throws not_invertible when a_1 = 0.
IntegerSeries dinvert(const IntegerSeries& f);
IntegerSeries dinvert(const IntegerSeries& f, const DivisorSieve& sieve);

/// sum a_n exp(-2 pi i y log n).
std::complex<double> mellin_eval(const IntegerSeries& f, double y);

}  // namespace nlnf

#endif  // NLNF_DIRICHLET_HPP
