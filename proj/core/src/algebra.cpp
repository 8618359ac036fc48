#include "nlnf/algebra.hpp"

#include <cmath>

#include "nlnf/errors.hpp"

namespace nlnf {

std::string to_string(Mode mode) { return mode == Mode::exact ? "exact" : "approx"; }

Mode parse_mode(const std::string& text) {
  if (text == "exact") return Mode::exact;
  if (text == "approx") return Mode::approx;
  throw domain_error("unknown coefficient mode '" + text + "'");
}

// ---------------------------------------------------------------- coefficients

Coefficient Coefficient::zero(Mode mode) {
  return mode == Mode::exact ? Coefficient(GaussianRational()) : Coefficient(std::complex<double>());
}

Coefficient Coefficient::one(Mode mode) {
  return mode == Mode::exact ? Coefficient(GaussianRational(1)) : Coefficient(std::complex<double>(1.0));
}

const GaussianRational& Coefficient::exact() const {
  if (mode_ != Mode::exact) throw mode_mismatch("exact payload requested from an approximate coefficient");
  return exact_;
}

std::complex<double> Coefficient::value() const {
  if (mode_ == Mode::approx) return approx_;
  return {exact_.re.get_d(), exact_.im.get_d()};
}

bool Coefficient::is_zero() const {
  return mode_ == Mode::exact ? exact_.is_zero() : approx_ == std::complex<double>();
}

Coefficient Coefficient::in_mode(Mode mode) const {
  if (mode == mode_) return *this;
  if (mode == Mode::approx) return Coefficient(value());
  throw mode_mismatch("approximate coefficients cannot be made exact");
}

void Coefficient::check(const Coefficient& o) const {
  if (mode_ != o.mode_) throw mode_mismatch("mixing exact and approximate coefficients");
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  check(o);
  if (mode_ == Mode::exact) {
    exact_ += o.exact_;
  } else {
    approx_ += o.approx_;
  }
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
  check(o);
  if (mode_ == Mode::exact) {
    exact_ -= o.exact_;
  } else {
    approx_ -= o.approx_;
  }
  return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) {
  check(o);
  if (mode_ == Mode::exact) {
    exact_ *= o.exact_;
  } else {
    approx_ *= o.approx_;
  }
  return *this;
}

Coefficient Coefficient::inverse() const {
  if (is_zero()) throw division_by_zero("inverse of a zero coefficient");
  if (mode_ == Mode::exact) return Coefficient(exact_.inverse());
  return Coefficient(1.0 / approx_);
}

bool operator==(const Coefficient& a, const Coefficient& b) {
  if (a.mode_ != b.mode_) return false;
  return a.mode_ == Mode::exact ? a.exact_ == b.exact_ : a.approx_ == b.approx_;
}

std::string to_string(const Coefficient& c) {
  if (c.mode() == Mode::exact) return to_string(c.exact());
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", c.approx().real(), c.approx().imag());
  return buf;
}

// ---------------------------------------------------------------- elements

Coefficient AlgebraElement::coeff(const FieldElement& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Coefficient::zero(mode_) : it->second;
}

Coefficient AlgebraElement::constant() const {
  if (!field_) return Coefficient::zero(mode_);
  return coeff(field_->zero());
}

void AlgebraElement::add_term(const FieldElement& alpha, const Coefficient& c) {
  if (!field_) throw domain_error("algebra element without a field");
  if (!alpha.field() || !alpha.field()->same_as(*field_)) throw field_mismatch("index from a different field");
  if (c.mode() != mode_) throw mode_mismatch("coefficient mode differs from the element mode");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void AlgebraElement::check_compatible(const AlgebraElement& o) const {
  if (!field_ || !o.field_ || !field_->same_as(*o.field_)) throw field_mismatch("algebra elements over different fields");
  if (mode_ != o.mode_) throw mode_mismatch("algebra elements in different coefficient modes");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  check_compatible(o);
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  check_compatible(o);
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Coefficient& c) {
  if (c.mode() != mode_) throw mode_mismatch("scalar mode differs from the element mode");
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, a] : terms_) a *= c;
  return *this;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.mode_ != b.mode_) return false;
  if (a.field_ && b.field_ && !a.field_->same_as(*b.field_)) return false;
  return a.terms_ == b.terms_;
}

AlgebraElement AlgebraElement::in_mode(Mode mode) const {
  AlgebraElement out(field_, mode);
  for (const auto& [alpha, c] : terms_) out.add_term(alpha, c.in_mode(mode));
  return out;
}

namespace {

std::string coefficient_text(const Coefficient& c) {
  if (c.mode() == Mode::exact) {
    const GaussianRational& z = c.exact();
    if (sgn(z.im) == 0) return nlnf::to_string(z.re);
    std::string im = nlnf::to_string(z.im) + "i";
    if (sgn(z.re) == 0) return im;
    return "(" + nlnf::to_string(z.re) + (sgn(z.im) > 0 ? "+" : "") + im + ")";
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.17g%+.17gi)", c.approx().real(), c.approx().imag());
  return buf;
}

}  // namespace

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [alpha, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += coefficient_text(c) + "*z^{" + alpha.to_string() + "}";
  }
  return out;
}

AlgebraElement monomial(const FieldElement& alpha, const Coefficient& c) {
  AlgebraElement out(alpha.field(), c.mode());
  out.add_term(alpha, c);
  return out;
}

AlgebraElement zero_element(const FieldPtr& field, Mode mode) { return AlgebraElement(field, mode); }

AlgebraElement cauchy_identity(const FieldPtr& field, Mode mode) {
  return monomial(field->zero(), Coefficient::one(mode));
}

AlgebraElement dirichlet_identity(const FieldPtr& field, Mode mode) {
  return monomial(field->one(), Coefficient::one(mode));
}

AlgebraElement cauchy_product(const AlgebraElement& f, const AlgebraElement& g) {
  f.check_compatible(g);
  AlgebraElement out(f.field(), f.mode());
  for (const auto& [a1, c1] : f.terms()) {
    for (const auto& [a2, c2] : g.terms()) out.add_term(a1 + a2, c1 * c2);
  }
  return out;
}

AlgebraElement dirichlet_product(const AlgebraElement& f, const AlgebraElement& g) {
  f.check_compatible(g);
  AlgebraElement out(f.field(), f.mode());
  const Coefficient a0 = f.constant();
  const Coefficient b0 = g.constant();
  Coefficient sum_a = Coefficient::zero(f.mode());
  Coefficient sum_b = Coefficient::zero(f.mode());
  for (const auto& [a1, c1] : f.terms()) {
    if (a1.is_zero()) continue;
    sum_a += c1;
    for (const auto& [a2, c2] : g.terms()) {
      if (!a2.is_zero()) out.add_term(a1 * a2, c1 * c2);
    }
  }
  for (const auto& [a2, c2] : g.terms()) {
    if (!a2.is_zero()) sum_b += c2;
  }
  out.add_term(f.field()->zero(), a0 * sum_b + b0 * sum_a + a0 * b0);
  return out;
}

Coefficient trace_functional(const AlgebraElement& f) {
  Coefficient t = Coefficient::zero(f.mode());
  for (const auto& term : f.terms()) t += term.second;
  return t;
}

bool is_in_ideal(const AlgebraElement& f, double tol) {
  Coefficient t = trace_functional(f);
  if (f.mode() == Mode::exact) return t.is_zero();
  return std::abs(t.value()) <= tol;
}

ProjectiveClass projectivize(const AlgebraElement& f) {
  Coefficient t = trace_functional(f);
  if (t.is_zero()) throw not_projectivizable("element has zero trace: it lies in the trace ideal");
  return ProjectiveClass(f * t.inverse());
}

bool projective_eq(const AlgebraElement& f, const AlgebraElement& g, double tol) {
  f.check_compatible(g);
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  if (f.size() != g.size()) return false;
  // lambda = f_beta / g_beta at the first index, then compare everywhere
  const auto& [beta, fb] = *f.terms().begin();
  Coefficient gb = g.coeff(beta);
  if (gb.is_zero()) return false;
  for (const auto& [alpha, fa] : f.terms()) {
    Coefficient ga = g.coeff(alpha);
    if (f.mode() == Mode::exact) {
      if (fa * gb != ga * fb) return false;
    } else {
      double scale = std::max(1.0, std::abs(fa.value() * gb.value()));
      if (std::abs((fa * gb - ga * fb).value()) > tol * scale) return false;
    }
  }
  return true;
}

AlgebraElement monomial_compose(const AlgebraElement& f, const FieldElement& alpha) {
  if (alpha.is_zero()) throw domain_error("monomial composition with the zero index");
  AlgebraElement out(f.field(), f.mode());
  for (const auto& [beta, c] : f.terms()) out.add_term(beta * alpha, c);
  return out;
}

double max_abs_difference(const AlgebraElement& f, const AlgebraElement& g) {
  double worst = 0;
  for (const auto& [alpha, c] : f.terms()) worst = std::max(worst, std::abs(c.value() - g.coeff(alpha).value()));
  for (const auto& [alpha, c] : g.terms()) {
    if (f.terms().count(alpha) == 0) worst = std::max(worst, std::abs(c.value()));
  }
  return worst;
}

}  // namespace nlnf
