#include "nlnf/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nlnf/errors.hpp"

namespace nlnf {

IntegerSeries::IntegerSeries(std::size_t n, Mode mode) : mode_(mode), a_(n + 1, Coefficient::zero(mode)) {}

void IntegerSeries::set(std::size_t n, const Coefficient& c) {
  if (n == 0 || n >= a_.size()) throw domain_error("series index " + std::to_string(n) + " outside 1.." + std::to_string(bound()));
  if (c.mode() != mode_) throw mode_mismatch("coefficient mode differs from the series mode");
  a_[n] = c;
}

std::size_t IntegerSeries::max_support() const {
  for (std::size_t n = bound(); n >= 1; --n) {
    if (!a_[n].is_zero()) return n;
  }
  return 0;
}

IntegerSeries IntegerSeries::delta(std::size_t n, Mode mode) {
  IntegerSeries s(n, mode);
  if (n >= 1) s.set(1, Coefficient::one(mode));
  return s;
}

IntegerSeries IntegerSeries::ones(std::size_t n, Mode mode) {
  IntegerSeries s(n, mode);
  for (std::size_t k = 1; k <= n; ++k) s.set(k, Coefficient::one(mode));
  return s;
}

DivisorSieve::DivisorSieve(std::size_t n) : spf_(n + 1, 0) {
  for (std::size_t p = 2; p <= n; ++p) {
    if (spf_[p] != 0) continue;
    for (std::size_t m = p; m <= n; m += p) {
      if (spf_[m] == 0) spf_[m] = static_cast<std::uint32_t>(p);
    }
  }
  if (n >= 1) spf_[1] = 1;
}

std::vector<std::uint32_t> DivisorSieve::divisors(std::size_t n) const {
  if (n == 0 || n > bound()) throw domain_error("divisor query outside the sieve range");
  std::vector<std::uint32_t> divs{1};
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    std::size_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    const std::size_t base = divs.size();
    std::uint32_t pk = 1;
    for (std::size_t k = 0; k < e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

IntegerSeries from_algebra(const AlgebraElement& f, std::size_t n) {
  if (f.field()->degree() != 1) throw domain_error("integer series need the rational field");
  IntegerSeries s(n, f.mode());
  for (const auto& [alpha, c] : f.terms()) {
    const Rational q = alpha.field()->degree() == 1 ? alpha.coords()[0] : Rational(0);
    if (!is_integer(q) || sgn(q) <= 0 || q > Rational(static_cast<long>(n))) {
      throw domain_error("index " + alpha.to_string() + " is not an integer in 1.." + std::to_string(n));
    }
    s.set(q.get_num().get_ui(), c);
  }
  return s;
}

AlgebraElement to_algebra(const IntegerSeries& s, const FieldPtr& rationals) {
  AlgebraElement f(rationals, s.mode());
  for (std::size_t k = 1; k <= s.bound(); ++k) f.add_term(rationals->from_rational(Rational(static_cast<long>(k))), s[k]);
  return f;
}

IntegerSeries dconv(const IntegerSeries& f, const IntegerSeries& g) {
  if (f.bound() != g.bound()) throw domain_error("dconv needs equal truncation bounds");
  if (f.mode() != g.mode()) throw mode_mismatch("dconv of series in different modes");
  const std::size_t n = f.bound();
  std::vector<Coefficient> c(n + 1, Coefficient::zero(f.mode()));
  for (std::size_t d = 1; d <= n; ++d) {
    if (f[d].is_zero()) continue;
    for (std::size_t m = 1; d * m <= n; ++m) {
      if (!g[m].is_zero()) c[d * m] += f[d] * g[m];
    }
  }
  IntegerSeries out(n, f.mode());
  for (std::size_t k = 1; k <= n; ++k) out.set(k, c[k]);
  const std::size_t mf = f.max_support();
  const std::size_t mg = g.max_support();
  out.mark_defect(mf != 0 && mg != 0 && mf * mg > n);
  return out;
}

IntegerSeries dinvert(const IntegerSeries& f) { return dinvert(f, DivisorSieve(f.bound())); }

IntegerSeries dinvert(const IntegerSeries& f, const DivisorSieve& sieve) {
  const std::size_t n = f.bound();
  if (sieve.bound() < n) throw domain_error("sieve smaller than the series bound");
  if (n == 0) return f;
  if (f[1].is_zero()) throw not_invertible("a_1 = 0: the series has no Dirichlet inverse");
  IntegerSeries b(n, f.mode());
  const Coefficient inv = f[1].inverse();
  b.set(1, inv);
  for (std::size_t k = 2; k <= n; ++k) {
    Coefficient acc = Coefficient::zero(f.mode());
    for (std::uint32_t d : sieve.divisors(k)) {
      if (d == k) break;
      const Coefficient& ad = f[k / d];
      if (!ad.is_zero() && !b[d].is_zero()) acc += b[d] * ad;
    }
    if (!acc.is_zero()) b.set(k, -(inv * acc));
  }
  return b;
}

std::complex<double> mellin_eval(const IntegerSeries& f, double y) {
  std::complex<double> sum;
  for (std::size_t n = 1; n <= f.bound(); ++n) {
    if (f[n].is_zero()) continue;
    sum += f[n].value() * std::polar(1.0, -2 * std::numbers::pi * y * std::log(static_cast<double>(n)));
  }
  return sum;
}

}  // namespace nlnf
