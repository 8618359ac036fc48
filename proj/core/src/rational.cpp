#include "nlnf/rational.hpp"

#include <stdexcept>

#include "nlnf/errors.hpp"

namespace nlnf {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid = [](const std::string& part) {
    std::size_t i = 0;
    if (i < part.size() && (part[i] == '-' || part[i] == '+')) ++i;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') return false;
    }
    return true;
  };
  auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid(num) || !valid(den) || den[0] == '-' || den[0] == '+') {
    throw parse_error("malformed rational '" + s + "'", 0, "p or p/q");
  }
  Integer n(num, 10);
  Integer d(den, 10);
  if (d == 0) throw division_by_zero("rational with zero denominator: '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

long floor_log2(const Rational& q) {
  if (sgn(q) == 0) throw std::domain_error("floor_log2 of zero");
  Rational a = abs(q);
  long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 2));
  // 2^(e-1) < a < 2^(e+1)
  auto two_pow = [](long k) {
    Rational r(1);
    if (k >= 0) {
      mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(k));
    } else {
      mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-k));
    }
    return r;
  };
  while (two_pow(e) > a) --e;
  while (two_pow(e + 1) <= a) ++e;
  return e;
}

namespace {

Integer scaled_floor(const Rational& q, long bits) {
  Rational s = q;
  if (bits >= 0) {
    mpq_mul_2exp(s.get_mpq_t(), s.get_mpq_t(), static_cast<unsigned long>(bits));
  } else {
    mpq_div_2exp(s.get_mpq_t(), s.get_mpq_t(), static_cast<unsigned long>(-bits));
  }
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
  return f;
}

Rational unscale(const Integer& m, long bits) {
  Rational r(m);
  if (bits >= 0) {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(bits));
  } else {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-bits));
  }
  return r;
}

}  // namespace

Rational round_dyadic(const Rational& q, long bits) {
  Rational half(1, 2);
  Rational s = q;
  mpq_mul_2exp(s.get_mpq_t(), s.get_mpq_t(), static_cast<unsigned long>(bits));
  s += half;
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
  return unscale(f, bits);
}

Rational floor_dyadic(const Rational& q, long bits) { return unscale(scaled_floor(q, bits), bits); }

Rational ceil_dyadic(const Rational& q, long bits) {
  Rational f = floor_dyadic(q, bits);
  if (f == q) return f;
  return f + unscale(Integer(1), bits);
}

Rational sqrt_upper(const Rational& q, long bits) {
  if (sgn(q) < 0) throw std::domain_error("sqrt_upper of a negative rational");
  if (sgn(q) == 0) return Rational(0);
  // floor(q * 4^bits), integer square root, then round up.
  Integer n = scaled_floor(q, 2 * bits);
  Integer root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  root += 1;
  return unscale(root, bits);
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1UL) result *= b;
    exponent >>= 1;
    if (exponent != 0) b *= b;
  }
  return result;
}

GaussianRational GaussianRational::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw division_by_zero("inverse of zero Gaussian rational");
  return {re / n, -im / n};
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::string to_string(const GaussianRational& z) {
  if (sgn(z.im) == 0) return to_string(z.re);
  if (sgn(z.re) == 0) return to_string(z.im) + "i";
  std::string im = to_string(abs(z.im));
  return to_string(z.re) + (sgn(z.im) < 0 ? "-" : "+") + im + "i";
}

}  // namespace nlnf
