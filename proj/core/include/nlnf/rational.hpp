#ifndef NLNF_RATIONAL_HPP
#define NLNF_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nlnf {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (q != 0) into a canonical rational.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Largest power-of-two exponent e with 2^e <= |q|, for q != 0.
long floor_log2(const Rational& q);

/// Nearest dyadic rational m / 2^bits (ties toward +inf).
Rational round_dyadic(const Rational& q, long bits);

/// Dyadic rational >= q with denominator 2^bits.
Rational ceil_dyadic(const Rational& q, long bits);
/// Dyadic rational <= q with denominator 2^bits.
Rational floor_dyadic(const Rational& q, long bits);

/// Dyadic upper bound for sqrt(q), q >= 0, accurate to about 2^-bits.
Rational sqrt_upper(const Rational& q, long bits);

Rational pow(const Rational& base, unsigned long exponent);

/// Exact Gaussian rational re + im*i.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)), im(0) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r) : re(r), im(0) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverse();
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

std::string to_string(const GaussianRational& z);

}  // namespace nlnf

#endif  // NLNF_RATIONAL_HPP
