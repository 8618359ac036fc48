#include "nlnf/signs.hpp"

#include <mutex>

#include "nlnf/errors.hpp"

namespace nlnf {

RealSign operator*(RealSign a, RealSign b) { return a == b ? RealSign::plus : RealSign::minus; }

std::vector<ComplexSign> all_complex_signs() {
  std::vector<ComplexSign> out;
  for (int k = 0; k < 4; ++k) out.push_back(ComplexSign::singular(k));
  for (int k = 0; k < 4; ++k) out.push_back(ComplexSign::sector(k));
  return out;
}

std::set<ComplexSign> sign_product(const ComplexSign& a, const ComplexSign& b) {
  const int k = a.rotation + b.rotation;
  if (!a.quadrant && !b.quadrant) return {ComplexSign::singular(k)};
  if (!a.quadrant || !b.quadrant) return {ComplexSign::sector(k)};
  return {ComplexSign::sector(k), ComplexSign::singular(k + 1), ComplexSign::sector(k + 1)};
}

ComplexSign sign_of_gaussian(const GaussianRational& z) {
  const int re = sgn(z.re);
  const int im = sgn(z.im);
  if (re == 0 && im == 0) throw signless_element("zero has no sign");
  if (im == 0) return ComplexSign::singular(re > 0 ? 0 : 2);
  if (re == 0) return ComplexSign::singular(im > 0 ? 1 : 3);
  if (re > 0) return ComplexSign::sector(im > 0 ? 0 : 3);
  return ComplexSign::sector(im > 0 ? 1 : 2);
}

std::vector<bool> SignVector::type_vector() const {
  std::vector<bool> out;
  for (const auto& s : complex) out.push_back(s.quadrant);
  return out;
}

bool SignVector::singular_homogeneous() const {
  for (const auto& s : complex) {
    if (s.quadrant) return false;
  }
  return true;
}

std::set<SignVector> sign_product(const SignVector& a, const SignVector& b) {
  if (a.real.size() != b.real.size() || a.complex.size() != b.complex.size()) {
    throw domain_error("sign vectors of different signatures");
  }
  SignVector base;
  for (std::size_t i = 0; i < a.real.size(); ++i) base.real.push_back(a.real[i] * b.real[i]);
  std::set<SignVector> acc{base};
  for (std::size_t j = 0; j < a.complex.size(); ++j) {
    std::set<SignVector> next;
    for (const auto& partial : acc) {
      for (const auto& s : sign_product(a.complex[j], b.complex[j])) {
        SignVector v = partial;
        v.complex.push_back(s);
        next.insert(std::move(v));
      }
    }
    acc = std::move(next);
  }
  return acc;
}

std::string to_string(RealSign s) { return s == RealSign::plus ? "+" : "-"; }

std::string to_string(const ComplexSign& s) {
  static const char* names[] = {"+", "sqrt-", "-", "-sqrt-"};
  return std::string(names[s.rotation]) + (s.quadrant ? "e" : "");
}

std::string to_string(const SignVector& v) {
  std::string out = "(";
  bool first = true;
  for (auto s : v.real) {
    out += (first ? "" : ", ") + to_string(s);
    first = false;
  }
  for (const auto& s : v.complex) {
    out += (first ? "" : ", ") + to_string(s);
    first = false;
  }
  return out + ")";
}

RealSign parse_real_sign(const std::string& text) {
  if (text == "+") return RealSign::plus;
  if (text == "-") return RealSign::minus;
  throw domain_error("not a real sign: '" + text + "'");
}

ComplexSign parse_complex_sign(const std::string& text) {
  for (const auto& s : all_complex_signs()) {
    if (to_string(s) == text) return s;
  }
  throw domain_error("not a complex sign: '" + text + "'");
}

// ---------------------------------------------------------------- sign_of

namespace {

Rational two_pow_neg(long bits) {
  Rational r(1);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(bits));
  return r;
}

RealSign real_sign_at(const FieldElement& a, const Place& place) {
  for (long bits = 16;; bits *= 2) {
    CertifiedBox b = embed(a, place, two_pow_neg(bits));
    int s = b.box.re.certified_sign();
    if (s != 0) return s > 0 ? RealSign::plus : RealSign::minus;
  }
}

// Whether mu(a) is real: mu(a) is a root of minpoly(a), and the embedding box
// is shrunk until it meets exactly one isolated root of that polynomial.
bool on_real_axis(const FieldElement& a, const Place& place) {
  if (a.is_rational()) return true;
  const Polynomial m = minimal_polynomial_of(a);
  RootIsolator iso(m, a.field()->options().precision);
  if (iso.real_count() == 0) return false;
  if (iso.pair_count() == 0) return true;
  for (long bits = 16;; bits *= 2) {
    const Rational w = two_pow_neg(bits);
    CertifiedBox b = embed(a, place, w);
    if (auto region = iso.locate(b.box)) return region->kind == RootIsolator::RegionKind::real;
    for (std::size_t i = 0; i < iso.real_count(); ++i) iso.refine_real(i, w);
    iso.refine_complex(w);
  }
}

ComplexSign read_box(const FieldElement& a, const Place& place, bool need_re, bool need_im) {
  for (long bits = 16;; bits *= 2) {
    CertifiedBox b = embed(a, place, two_pow_neg(bits));
    int re = b.box.re.certified_sign();
    int im = b.box.im.certified_sign();
    if ((need_re && re == 0) || (need_im && im == 0)) continue;
    if (!need_im) return ComplexSign::singular(re > 0 ? 0 : 2);
    if (!need_re) return ComplexSign::singular(im > 0 ? 1 : 3);
    if (re > 0) return ComplexSign::sector(im > 0 ? 0 : 3);
    return ComplexSign::sector(im > 0 ? 1 : 2);
  }
}

ComplexSign complex_sign_at(const FieldElement& a, const Place& place) {
  for (long bits : {16L, 53L}) {
    CertifiedBox b = embed(a, place, two_pow_neg(bits));
    int re = b.box.re.certified_sign();
    int im = b.box.im.certified_sign();
    if (re != 0 && im != 0) {
      if (re > 0) return ComplexSign::sector(im > 0 ? 0 : 3);
      return ComplexSign::sector(im > 0 ? 1 : 2);
    }
  }
  if (on_real_axis(a, place)) return read_box(a, place, true, false);
  // mu(a) is not real; mu(a)^2 real forces it to be negative
  if (on_real_axis(a * a, place)) return read_box(a, place, false, true);
  return read_box(a, place, true, true);
}

struct SignCache {
  std::mutex mutex;
  std::map<std::pair<std::vector<Rational>, std::vector<Rational>>, SignVector> entries;
};

SignCache& cache() {
  static SignCache c;
  return c;
}

}  // namespace

SignVector sign_of(const FieldElement& alpha) {
  if (alpha.is_zero()) throw signless_element("zero has no sign; it belongs to the constant component");
  auto key = std::make_pair(alpha.field()->minpoly().coeffs(), alpha.coords());
  {
    std::lock_guard<std::mutex> lock(cache().mutex);
    auto it = cache().entries.find(key);
    if (it != cache().entries.end()) return it->second;
  }
  SignVector v;
  for (const auto& place : alpha.field()->places()) {
    if (place.kind == PlaceKind::real) {
      v.real.push_back(real_sign_at(alpha, place));
    } else {
      v.complex.push_back(complex_sign_at(alpha, place));
    }
  }
  std::lock_guard<std::mutex> lock(cache().mutex);
  cache().entries.emplace(std::move(key), v);
  return v;
}

// ---------------------------------------------------------------- grading

AlgebraElement GradedDecomposition::reassemble(const FieldPtr& field, Mode mode) const {
  AlgebraElement out(field, mode);
  out.add_term(field->zero(), constant);
  for (const auto& [v, part] : components) out += part;
  return out;
}

GradedDecomposition grade(const AlgebraElement& f) {
  GradedDecomposition g;
  g.constant = f.constant();
  for (const auto& [alpha, c] : f.terms()) {
    if (alpha.is_zero()) continue;
    auto [it, inserted] = g.components.try_emplace(sign_of(alpha), f.field(), f.mode());
    it->second.add_term(alpha, c);
  }
  return g;
}

AlgebraElement restrict(const AlgebraElement& f, const SignVector& v) {
  AlgebraElement out(f.field(), f.mode());
  for (const auto& [alpha, c] : f.terms()) {
    if (!alpha.is_zero() && sign_of(alpha) == v) out.add_term(alpha, c);
  }
  return out;
}

GradedLawReport check_graded_dirichlet_law(const AlgebraElement& f, const AlgebraElement& g) {
  f.check_compatible(g);
  GradedLawReport report;
  const AlgebraElement fg = dirichlet_product(f, g);
  const GradedDecomposition lhs = grade(fg);
  const GradedDecomposition gf = grade(f);
  const GradedDecomposition gg = grade(g);

  std::map<SignVector, AlgebraElement> rhs;
  for (const auto& [v1, f1] : gf.components) {
    for (const auto& [v2, g2] : gg.components) {
      const AlgebraElement prod = dirichlet_product(f1, g2);
      for (const auto& v : sign_product(v1, v2)) {
        AlgebraElement part = restrict(prod, v);
        if (part.is_zero()) continue;
        auto [it, inserted] = rhs.try_emplace(v, f.field(), f.mode());
        it->second += part;
      }
    }
  }
  std::set<SignVector> keys;
  for (const auto& entry : lhs.components) keys.insert(entry.first);
  for (const auto& entry : rhs) {
    if (!entry.second.is_zero()) keys.insert(entry.first);
  }
  for (const auto& v : keys) {
    AlgebraElement left(f.field(), f.mode());
    AlgebraElement right(f.field(), f.mode());
    if (auto it = lhs.components.find(v); it != lhs.components.end()) left = it->second;
    if (auto it = rhs.find(v); it != rhs.end()) right = it->second;
    if (left != right) {
      report.ok = false;
      report.mismatches.push_back("component " + to_string(v) + ": " + left.to_string() + " vs " + right.to_string());
    }
  }

  const Coefficient a0 = f.constant();
  const Coefficient b0 = g.constant();
  const Coefficient ta = trace_functional(f);
  const Coefficient tb = trace_functional(g);
  report.constant = lhs.constant;
  report.constant_rule = a0 * (tb - b0) + b0 * (ta - a0) + a0 * b0;
  report.constant_alternative = ta * tb - a0 * b0;
  if (report.constant != report.constant_rule) {
    report.ok = false;
    report.mismatches.push_back("constant term " + to_string(report.constant) + " vs rule " +
                                to_string(report.constant_rule));
  }
  return report;
}

}  // namespace nlnf
