#include "nlnf/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nlnf/errors.hpp"

namespace nlnf {

namespace {

using cld = std::complex<long double>;

GaussianRational horner(const Polynomial& p, const GaussianRational& z) {
  GaussianRational acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= z;
    acc.re += *it;
  }
  return acc;
}

Rational two_pow_neg(long bits) {
  Rational r(1);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(bits));
  return r;
}

// Squared distance from a point to a closed rectangle.
Rational dist2_to_box(const GaussianRational& c, const ComplexInterval& box) {
  auto axis = [](const Rational& x, const Interval& iv) {
    if (x < iv.lo) return Rational(iv.lo - x);
    if (x > iv.hi) return Rational(x - iv.hi);
    return Rational(0);
  };
  Rational dx = axis(c.re, box.re);
  Rational dy = axis(c.im, box.im);
  return dx * dx + dy * dy;
}

}  // namespace

std::vector<cld> aberth_roots(const Polynomial& p, int max_iter) {
  const int d = p.degree();
  std::vector<cld> z;
  if (d < 1) return z;
  std::vector<long double> a;
  const Polynomial m = p.monic();
  for (const auto& c : m.coeffs()) a.push_back(static_cast<long double>(c.get_d()));
  if (d == 1) return {cld(-a[0], 0)};

  long double radius = 0;
  for (int i = 0; i < d; ++i) radius = std::max(radius, std::pow(std::abs(a[i]), 1.0L / (d - i)));
  if (radius == 0) radius = 1;
  for (int k = 0; k < d; ++k) {
    long double angle = 2 * std::numbers::pi_v<long double> * k / d + 0.4L;
    z.emplace_back(radius * std::cos(angle), radius * std::sin(angle));
  }
  auto eval = [&](cld x, cld& value, cld& deriv) {
    value = 0;
    deriv = 0;
    for (int i = d; i >= 0; --i) {
      deriv = deriv * x + value;
      value = value * x + a[i];
    }
  };
  for (int iter = 0; iter < max_iter; ++iter) {
    long double worst = 0;
    for (int k = 0; k < d; ++k) {
      cld v, dv;
      eval(z[k], v, dv);
      if (v == cld(0)) continue;
      cld ratio = v / dv;
      cld sum = 0;
      for (int j = 0; j < d; ++j) {
        if (j != k) sum += 1.0L / (z[k] - z[j]);
      }
      cld w = ratio / (1.0L - ratio * sum);
      z[k] -= w;
      worst = std::max(worst, std::abs(w) / std::max(1.0L, std::abs(z[k])));
    }
    if (worst < 1e-19L) break;
  }
  return z;
}

RootIsolator::RootIsolator(const Polynomial& p, PrecisionOptions opts) : p_(p.monic()), opts_(opts) {
  if (p_.degree() < 1) throw invalid_polynomial("root isolation needs degree >= 1");
  sturm_ = sturm_sequence(p_);
  isolate_real();
  isolate_complex();
}

Rational RootIsolator::pick_split(const Rational& lo, const Rational& hi) const {
  const Rational w = hi - lo;
  for (long m = 2;; ++m) {
    for (long j = 1; j < m; ++j) {
      Rational frac(j, m);
      frac.canonicalize();
      Rational t = lo + w * frac;
      if (sgn(p_.eval(t)) != 0) return t;
    }
  }
}

void RootIsolator::isolate_real() {
  Rational b = cauchy_bound(p_);
  struct Job {
    Rational lo, hi;
    int count;
  };
  std::vector<Job> stack;
  int total = sign_variations(sturm_, -b) - sign_variations(sturm_, b);
  if (total > 0) stack.push_back({-b, b, total});
  std::vector<RealRoot> found;
  while (!stack.empty()) {
    Job job = stack.back();
    stack.pop_back();
    if (job.count == 1) {
      found.push_back({Interval(job.lo, job.hi), false});
      continue;
    }
    Rational mid = pick_split(job.lo, job.hi);
    int left = sign_variations(sturm_, job.lo) - sign_variations(sturm_, mid);
    int right = job.count - left;
    if (left > 0) stack.push_back({job.lo, mid, left});
    if (right > 0) stack.push_back({mid, job.hi, right});
  }
  std::sort(found.begin(), found.end(),
            [](const RealRoot& x, const RealRoot& y) { return x.interval.lo < y.interval.lo; });
  real_ = std::move(found);
}

std::vector<GaussianRational> RootIsolator::polish(std::vector<GaussianRational> z, long bits) const {
  const Polynomial dp = p_.derivative();
  const Rational tol = two_pow_neg(bits);
  for (auto& zj : z) {
    for (int step = 0; step < 64; ++step) {
      GaussianRational v = horner(p_, zj);
      GaussianRational dv = horner(dp, zj);
      if (v.is_zero() || dv.is_zero()) break;
      GaussianRational corr = v / dv;
      zj -= corr;
      zj.re = round_dyadic(zj.re, bits);
      zj.im = round_dyadic(zj.im, bits);
      if (abs(corr.re) + abs(corr.im) <= tol) break;
    }
  }
  return z;
}

bool RootIsolator::certify(const std::vector<GaussianRational>& z, long bits, std::vector<Disc>& upper) const {
  const std::size_t d = z.size();
  std::vector<Rational> radius(d);
  for (std::size_t j = 0; j < d; ++j) {
    GaussianRational den(1);
    for (std::size_t k = 0; k < d; ++k) {
      if (k != j) den *= z[j] - z[k];
    }
    if (den.is_zero()) return false;
    GaussianRational num = horner(p_, z[j]);
    Rational r2 = num.norm() / den.norm() * static_cast<long>(d * d);
    radius[j] = sqrt_upper(r2, bits + 8);
  }
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = j + 1; k < d; ++k) {
      Rational sep = (z[j] - z[k]).norm();
      Rational rr = radius[j] + radius[k];
      if (!(sep > rr * rr)) return false;
    }
  }
  std::vector<Disc> up;
  std::size_t lower = 0;
  for (std::size_t j = 0; j < d; ++j) {
    if (z[j].im > radius[j]) {
      up.push_back({z[j], radius[j]});
    } else if (-z[j].im > radius[j]) {
      ++lower;
    }
  }
  const std::size_t nonreal = d - real_.size();
  if (up.size() != lower || up.size() * 2 != nonreal) return false;
  upper = std::move(up);
  return true;
}

void RootIsolator::isolate_complex() {
  const std::size_t d = static_cast<std::size_t>(p_.degree());
  if (real_.size() == d) {
    bits_ = opts_.start_bits;
    return;
  }
  auto approx = aberth_roots(p_);
  std::vector<GaussianRational> z;
  for (const auto& w : approx) {
    z.emplace_back(round_dyadic(Rational(static_cast<double>(w.real())), opts_.start_bits),
                   round_dyadic(Rational(static_cast<double>(w.imag())), opts_.start_bits));
  }
  for (long bits = opts_.start_bits;; bits *= 2) {
    if (bits > opts_.cap_bits) {
      throw undecided_numerically("complex root isolation of " + p_.to_string() + " exceeded the precision cap");
    }
    z = polish(std::move(z), bits);
    std::vector<Disc> up;
    if (certify(z, bits, up)) {
      auto before = [](const Disc& a, const Disc& b) {
        Rational gap = a.center.re - b.center.re;
        if (abs(gap) > a.radius + b.radius) return gap < 0;
        return a.center.im < b.center.im;
      };
      // insertion sort: the tie rule is only a weak ordering near equal real parts
      for (std::size_t i = 1; i < up.size(); ++i) {
        for (std::size_t k = i; k > 0 && before(up[k], up[k - 1]); --k) std::swap(up[k], up[k - 1]);
      }
      upper_ = std::move(up);
      approx_ = std::move(z);
      bits_ = bits;
      return;
    }
  }
}

ComplexInterval RootIsolator::real_box(std::size_t i) const {
  return {real_.at(i).interval, Interval(Rational(0))};
}

ComplexInterval RootIsolator::upper_box(std::size_t j) const {
  const Disc& disc = upper_.at(j);
  return {Interval(disc.center.re - disc.radius, disc.center.re + disc.radius),
          Interval(disc.center.im - disc.radius, disc.center.im + disc.radius)};
}

void RootIsolator::refine_real(std::size_t i, const Rational& w) {
  if (w < two_pow_neg(opts_.cap_bits)) {
    throw undecided_numerically("requested real root width below the precision cap");
  }
  RealRoot& root = real_.at(i);
  if (root.exact) return;
  int slo = sgn(p_.eval(root.interval.lo));
  while (root.interval.width() > w) {
    Rational mid = root.interval.mid();
    int s = sgn(p_.eval(mid));
    if (s == 0) {
      root.interval = Interval(mid);
      root.exact = true;
      return;
    }
    if (s == slo) {
      root.interval.lo = mid;
    } else {
      root.interval.hi = mid;
    }
  }
}

void RootIsolator::refine_complex(const Rational& w) {
  if (upper_.empty()) return;
  auto fine_enough = [&] {
    return std::all_of(upper_.begin(), upper_.end(), [&](const Disc& c) { return c.radius * 2 <= w; });
  };
  long bits = bits_;
  std::vector<GaussianRational> z = approx_;
  while (!fine_enough()) {
    bits *= 2;
    if (bits > opts_.cap_bits) {
      throw undecided_numerically("complex root refinement of " + p_.to_string() + " exceeded the precision cap");
    }
    z = polish(std::move(z), bits);
    std::vector<Disc> up;
    if (!certify(z, bits, up)) continue;
    // Keep place identity: every new disc must sit inside exactly one old disc.
    std::vector<Disc> next(upper_.size());
    std::vector<bool> used(upper_.size(), false);
    bool ok = true;
    for (const auto& nd : up) {
      bool placed = false;
      for (std::size_t j = 0; j < upper_.size() && !placed; ++j) {
        const Disc& od = upper_[j];
        Rational gap = (nd.center - od.center).norm();
        Rational slack = od.radius - nd.radius;
        if (sgn(slack) >= 0 && gap <= slack * slack && !used[j]) {
          next[j] = nd;
          used[j] = true;
          placed = true;
        }
      }
      ok = ok && placed;
    }
    if (!ok) continue;
    upper_ = std::move(next);
    approx_ = z;
    bits_ = bits;
  }
}

std::optional<RootIsolator::RegionId> RootIsolator::locate(const ComplexInterval& box) const {
  std::optional<RegionId> hit;
  int hits = 0;
  for (std::size_t i = 0; i < real_.size(); ++i) {
    if (box.im.contains_zero() && box.re.overlaps(real_[i].interval)) {
      hit = RegionId{RegionKind::real, i};
      ++hits;
    }
  }
  for (std::size_t j = 0; j < upper_.size(); ++j) {
    const Disc& d = upper_[j];
    Rational r2 = d.radius * d.radius;
    if (dist2_to_box(d.center, box) <= r2) {
      hit = RegionId{RegionKind::upper, j};
      ++hits;
    }
    if (dist2_to_box(d.center.conj(), box) <= r2) {
      hit = RegionId{RegionKind::lower, j};
      ++hits;
    }
  }
  if (hits == 1) return hit;
  return std::nullopt;
}

std::string to_string(const Interval& iv) { return "[" + to_string(iv.lo) + ", " + to_string(iv.hi) + "]"; }

}  // namespace nlnf
