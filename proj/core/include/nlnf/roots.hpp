#ifndef NLNF_ROOTS_HPP
#define NLNF_ROOTS_HPP

#include <complex>
#include <optional>
#include <vector>

#include "nlnf/interval.hpp"
#include "nlnf/polynomial.hpp"

namespace nlnf {

/// Precision ladder shared by every certified numeric routine.
struct PrecisionOptions {
  long start_bits = 53;
  long cap_bits = 2000;
};

/// Certified isolation of all roots of a square-free rational polynomial.
///
/// Real roots are isolated by Sturm sequences and refined by exact sign
/// bisection. Non-real roots come from an Aberth iteration, are polished by
/// Newton steps in dyadic arithmetic, and are certified with Smith's
/// inclusion discs (radius d * |p(z_j) / prod_{k != j}(z_j - z_k)|), which
/// must be pairwise disjoint and must not meet the real axis.
///
/// Real roots are kept in ascending order. Non-real roots are represented by
/// the member of each conjugate pair with positive imaginary part, ordered by
/// ascending real part, then ascending imaginary part.
class RootIsolator {
 public:
  struct Disc {
    GaussianRational center;
    Rational radius;
  };

  enum class RegionKind { real, upper, lower };
  struct RegionId {
    RegionKind kind;
    std::size_t index;
    friend bool operator==(const RegionId& a, const RegionId& b) {
      return a.kind == b.kind && a.index == b.index;
    }
  };

  explicit RootIsolator(const Polynomial& p, PrecisionOptions opts = {});

  const Polynomial& polynomial() const { return p_; }
  std::size_t real_count() const { return real_.size(); }
  std::size_t pair_count() const { return upper_.size(); }

  /// Isolating interval of the i-th real root (a point when the root is rational
  /// and was hit exactly).
  const Interval& real_interval(std::size_t i) const { return real_[i].interval; }
  const Disc& upper_disc(std::size_t j) const { return upper_[j]; }

  ComplexInterval real_box(std::size_t i) const;
  ComplexInterval upper_box(std::size_t j) const;

  /// Shrinks the i-th real interval to width <= w.
  void refine_real(std::size_t i, const Rational& w);
  /// Shrinks every complex disc to diameter <= w.
  void refine_complex(const Rational& w);

  /// Region meeting `box`, when exactly one does.
  std::optional<RegionId> locate(const ComplexInterval& box) const;

  long complex_bits() const { return bits_; }
  const PrecisionOptions& options() const { return opts_; }

 private:
  struct RealRoot {
    Interval interval;
    bool exact = false;
  };

  void isolate_real();
  void isolate_complex();
  bool certify(const std::vector<GaussianRational>& approx, long bits, std::vector<Disc>& upper) const;
  std::vector<GaussianRational> polish(std::vector<GaussianRational> z, long bits) const;
  Rational pick_split(const Rational& lo, const Rational& hi) const;

  Polynomial p_;  // monic, square-free
  PrecisionOptions opts_;
  std::vector<Polynomial> sturm_;
  std::vector<RealRoot> real_;
  std::vector<Disc> upper_;
  std::vector<GaussianRational> approx_;  // current approximations of all roots
  long bits_ = 0;
};

/// Aberth-Ehrlich simultaneous iteration in long double precision.
std::vector<std::complex<long double>> aberth_roots(const Polynomial& p, int max_iter = 2000);

}  // namespace nlnf

#endif  // NLNF_ROOTS_HPP
