#ifndef NLNF_INTERVAL_HPP
#define NLNF_INTERVAL_HPP

#include <algorithm>
#include <string>

#include "nlnf/rational.hpp"

namespace nlnf {

/// Closed interval [lo, hi] with exact rational endpoints.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  explicit Interval(const Rational& point) : lo(point), hi(point) {}
  Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  bool overlaps(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
  /// +1 / -1 when the interval excludes zero, 0 otherwise.
  int certified_sign() const {
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
    return 0;
  }
  Rational magnitude() const { return std::max(abs(lo), abs(hi)); }

  /// Widens outward to dyadic endpoints with denominator 2^bits.
  Interval rounded_outward(long bits) const { return {floor_dyadic(lo, bits), ceil_dyadic(hi, bits)}; }

  friend Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
  friend Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
  friend Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }
  friend Interval operator*(const Interval& a, const Interval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
  }
  friend Interval operator*(const Interval& a, const Rational& c) {
    if (sgn(c) >= 0) return {a.lo * c, a.hi * c};
    return {a.hi * c, a.lo * c};
  }
};

/// Rectangle re x im in the complex plane.
struct ComplexInterval {
  Interval re;
  Interval im;

  ComplexInterval() : re(Rational(0)), im(Rational(0)) {}
  ComplexInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}
  explicit ComplexInterval(const GaussianRational& z) : re(z.re), im(z.im) {}

  Rational width() const { return std::max(re.width(), im.width()); }
  bool contains(const GaussianRational& z) const { return re.contains(z.re) && im.contains(z.im); }
  bool overlaps(const ComplexInterval& o) const { return re.overlaps(o.re) && im.overlaps(o.im); }
  ComplexInterval conj() const { return {re, -im}; }
  ComplexInterval rounded_outward(long bits) const {
    return {re.rounded_outward(bits), im.rounded_outward(bits)};
  }

  friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexInterval operator*(const ComplexInterval& a, const Rational& c) { return {a.re * c, a.im * c}; }
};

std::string to_string(const Interval& iv);

}  // namespace nlnf

#endif  // NLNF_INTERVAL_HPP
