// Irreducibility over Q at desk degrees.
//
// A monic factor of a monic integer polynomial has integer coefficients and
// its roots form a conjugation-closed subset of the roots of the polynomial.
// With every root boxed, the coefficients of each candidate subset product are
// enclosed by interval arithmetic; a subset survives only if every enclosure
// contains an integer, and survivors are confirmed by exact division. No
// factor is ever missed: a true factor's integer coefficients lie in their
// enclosures by construction.

#include <optional>

#include "nlnf/errors.hpp"
#include "nlnf/factor.hpp"

namespace nlnf {

namespace {

using IPoly = std::vector<Interval>;

IPoly mul(const IPoly& a, const IPoly& b, long bits) {
  IPoly r(a.size() + b.size() - 1, Interval(Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  for (auto& c : r) c = c.rounded_outward(bits);
  return r;
}

std::vector<Integer> prime_factors_small(Integer n) {
  std::vector<Integer> out;
  n = abs(n);
  for (Integer q = 2; q * q <= n && q < 1000000; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1 && n < Integer(1000000) * Integer(1000000)) out.push_back(n);
  return out;
}

bool eisenstein_at_some_prime(const std::vector<Integer>& z) {
  if (z.size() < 2) return false;
  Integer g = 0;
  for (std::size_t i = 0; i + 1 < z.size(); ++i) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
  if (g == 0) return false;
  for (const Integer& prime : prime_factors_small(g)) {
    if (z.back() % prime == 0) continue;
    if (z.front() % (prime * prime) == 0) continue;
    return true;
  }
  return false;
}

Integer ceil_int(const Rational& q) {
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return c;
}

}  // namespace

bool eisenstein_certificate(const Polynomial& p) {
  for (long shift : {0L, 1L, -1L, 2L, -2L}) {
    if (eisenstein_at_some_prime(primitive_integer_coeffs(p.shift(Rational(shift))))) return true;
  }
  return false;
}

std::optional<Polynomial> find_factor(const Polynomial& p_in, RootIsolator& iso) {
  const Polynomial p = p_in.monic();
  const int d = p.degree();
  if (d <= 1) return std::nullopt;

  Integer scale = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
  const Rational D(scale);
  // q(y) = D^d p(y / D) is monic with integer coefficients.
  std::vector<Rational> qc(p.coeffs().size());
  for (int i = 0; i <= d; ++i) qc[i] = p.coeffs()[i] * pow(D, static_cast<unsigned long>(d - i));
  const Polynomial q(qc);

  Rational bound = cauchy_bound(q);
  long log_bound = 1;
  while (Rational(1L << std::min(log_bound, 62L)) < bound && log_bound < 62) ++log_bound;
  long bits = static_cast<long>(d) * (log_bound + 2) + 16;

  const std::size_t nr = iso.real_count();
  const std::size_t np = iso.pair_count();
  const std::size_t units = nr + np;
  if (units > 20) throw invalid_polynomial("too many roots for subset recombination");

  auto unit_factor = [&](std::size_t u) -> IPoly {
    if (u < nr) {
      ComplexInterval b = iso.real_box(u);
      Interval root = b.re * D;
      return {-root, Interval(Rational(1))};
    }
    ComplexInterval b = iso.upper_box(u - nr);
    Interval re = b.re * D;
    Interval im = b.im * D;
    return {re * re + im * im, re * Rational(-2), Interval(Rational(1))};
  };

  for (int attempt = 0;; ++attempt) {
    if (bits > iso.options().cap_bits) throw undecided_numerically("factor search exceeded the precision cap");
    Rational w(1);
    mpq_div_2exp(w.get_mpq_t(), w.get_mpq_t(), static_cast<unsigned long>(bits));
    for (std::size_t i = 0; i < nr; ++i) iso.refine_real(i, w / D);
    iso.refine_complex(w / D);
    std::vector<IPoly> factors;
    for (std::size_t u = 0; u < units; ++u) factors.push_back(unit_factor(u));

    bool too_wide = false;
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << units) && !too_wide; ++mask) {
      int k = 0;
      for (std::size_t u = 0; u < units; ++u) {
        if (mask >> u & 1U) k += u < nr ? 1 : 2;
      }
      if (2 * k > d) continue;
      // cheap filter on the sum of roots
      Interval sum(Rational(0));
      for (std::size_t u = 0; u < units; ++u) {
        if (mask >> u & 1U) sum = sum + factors[u][factors[u].size() - 2];
      }
      if (sum.width() >= 1) {
        too_wide = true;
        break;
      }
      if (ceil_int(sum.lo) > sum.hi) continue;
      IPoly prod{Interval(Rational(1))};
      for (std::size_t u = 0; u < units; ++u) {
        if (mask >> u & 1U) prod = mul(prod, factors[u], bits + 8);
      }
      std::vector<Rational> cand;
      bool integral = true;
      for (const auto& c : prod) {
        if (c.width() >= 1) {
          too_wide = true;
          break;
        }
        Integer n = ceil_int(c.lo);
        if (Rational(n) > c.hi) {
          integral = false;
          break;
        }
        cand.emplace_back(n);
      }
      if (too_wide || !integral) continue;
      Polynomial g(cand);
      if ((q % g).is_zero()) {
        // back to x: g(D x) / D^k
        std::vector<Rational> gx(g.coeffs().size());
        for (std::size_t i = 0; i < gx.size(); ++i) gx[i] = g.coeffs()[i] * pow(D, i) / pow(D, k);
        return Polynomial(gx).monic();
      }
    }
    if (!too_wide) return std::nullopt;
    bits *= 2;
  }
}

std::optional<Polynomial> quick_factor(const Polynomial& p_in) {
  const Polynomial p = p_in.monic();
  if (p.degree() <= 1) return std::nullopt;
  Polynomial g = gcd(p, p.derivative());
  if (g.degree() >= 1) return g;
  auto roots = rational_roots(p);
  if (!roots.empty()) return Polynomial(std::vector<Rational>{-roots.front(), Rational(1)});
  return std::nullopt;
}

}  // namespace nlnf
