#include "nlnf/galois.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "nlnf/errors.hpp"
#include "nlnf/hardy.hpp"

namespace nlnf {

Automorphism Automorphism::make(const FieldPtr& field, const FieldElement& image) {
  if (!image.field() || !image.field()->same_as(*field)) throw field_mismatch("generator image from another field");
  Polynomial m = minimal_polynomial_of(image);
  if (m != field->minpoly()) {
    throw not_an_automorphism("image " + image.to_string() + " has minimal polynomial " + m.to_string() + ", not " +
                              field->minpoly().to_string());
  }
  Automorphism sigma(field, image);
  sigma.complete();
  return sigma;
}

Automorphism Automorphism::identity(const FieldPtr& field) {
  Automorphism id(field, field->generator());
  id.inverse_image_ = field->generator();
  return id;
}

void Automorphism::complete() {
  const FieldElement x = field_->generator();
  FieldElement previous = x;
  FieldElement current = image_;
  order_ = 1;
  while (current != x) {
    if (order_ > field_->degree()) throw not_an_automorphism("automorphism order exceeds the field degree");
    previous = current;
    current = apply(current);
    ++order_;
  }
  inverse_image_ = previous;
}

FieldElement Automorphism::apply(const FieldElement& a) const {
  FieldElement acc = field_->zero();
  const auto& c = a.coords();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * image_ + field_->from_rational(*it);
  return acc;
}

Automorphism Automorphism::compose(const Automorphism& other) const {
  Automorphism out(field_, apply(other.image_));
  out.complete();
  return out;
}

Automorphism Automorphism::inverse() const {
  Automorphism out(field_, inverse_image_);
  out.complete();
  return out;
}

bool GaloisGroup::verify_table() const {
  const std::size_t n = elements.size();
  if (n == 0 || table.size() != n || !elements[0].is_identity()) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n || table[0][i] != i || table[i][0] != i) return false;
    bool has_inverse = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n) return false;
      if (table[i][j] == 0 && table[j][i] == 0) has_inverse = true;
    }
    if (!has_inverse) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (table[table[i][j]][k] != table[i][table[j][k]]) return false;
      }
    }
  }
  return true;
}

int GaloisGroup::exponent() const {
  int e = 1;
  for (const auto& s : elements) e = std::lcm(e, s.order());
  return e;
}

GaloisGroup group_from_family(const FieldPtr& field, const GroupFamily& family) {
  GaloisGroup g;
  g.elements.push_back(Automorphism::identity(field));
  const FieldElement x = field->generator();
  switch (family.kind) {
    case GroupFamily::Kind::quadratic:
      if (field->degree() != 2) throw domain_error("quadratic family needs a degree-2 field");
      g.elements.push_back(Automorphism::make(field, -x - field->from_rational(field->minpoly().coeff(1))));
      break;
    case GroupFamily::Kind::cyclotomic:
      if (family.n < 1 || field->minpoly() != cyclotomic_polynomial(family.n)) {
        throw domain_error("field is not defined by the " + std::to_string(family.n) + "-th cyclotomic polynomial");
      }
      for (unsigned k = 2; k < family.n; ++k) {
        if (std::gcd(k, family.n) == 1) g.elements.push_back(Automorphism::make(field, x.pow(k)));
      }
      break;
    case GroupFamily::Kind::explicit_images: {
      std::vector<Automorphism> gens;
      for (const auto& image : family.images) gens.push_back(Automorphism::make(field, image));
      for (std::size_t i = 0; i < g.elements.size(); ++i) {
        for (const auto& s : gens) {
          Automorphism next = s.compose(g.elements[i]);
          if (std::find(g.elements.begin(), g.elements.end(), next) == g.elements.end()) {
            if (static_cast<int>(g.elements.size()) >= field->degree()) {
              throw domain_error("explicit images generate more than degree-many automorphisms");
            }
            g.elements.push_back(next);
          }
        }
      }
      break;
    }
  }
  const std::size_t n = g.elements.size();
  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Automorphism c = g.elements[i].compose(g.elements[j]);
      auto it = std::find(g.elements.begin(), g.elements.end(), c);
      if (it == g.elements.end()) throw domain_error("automorphism family is not closed under composition");
      g.table[i][j] = static_cast<std::size_t>(it - g.elements.begin());
    }
  }
  return g;
}

AlgebraElement apply_to_algebra(const Automorphism& sigma, const AlgebraElement& f) {
  AlgebraElement out(f.field(), f.mode());
  for (const auto& [alpha, c] : f.terms()) out.add_term(sigma.apply(alpha), c);
  return out;
}

namespace {

void expect_equal(CheckReport& report, const std::string& inputs, const AlgebraElement& lhs,
                  const AlgebraElement& rhs) {
  if (lhs != rhs) report.failures.push_back({inputs, lhs.to_string(), rhs.to_string(), max_abs_difference(lhs, rhs)});
}

void expect_close(CheckReport& report, const std::string& inputs, const AlgebraElement& lhs,
                  const AlgebraElement& rhs, double tol) {
  double delta = max_abs_difference(lhs, rhs);
  if (!(delta <= tol)) report.failures.push_back({inputs, lhs.to_string(), rhs.to_string(), delta});
}

}  // namespace

AutomorphismReport verify_nonlinear_automorphism(const Automorphism& sigma, std::size_t samples,
                                                 std::uint64_t seed) {
  AutomorphismReport out;
  out.report.check = "nonlinear_automorphism";
  out.report.samples = samples;
  Rng rng(seed);
  const FieldPtr& field = sigma.field();
  const IndexShape shape{6, 2};
  for (std::size_t s = 0; s < samples; ++s) {
    AlgebraElement f = random_exact_element(field, rng, 5, shape);
    AlgebraElement g = random_exact_element(field, rng, 5, shape);
    const std::string inputs = "f = " + f.to_string() + "; g = " + g.to_string();
    const AlgebraElement sf = apply_to_algebra(sigma, f);
    const AlgebraElement sg = apply_to_algebra(sigma, g);
    expect_equal(out.report, "cauchy: " + inputs, apply_to_algebra(sigma, cauchy_product(f, g)), cauchy_product(sf, sg));
    expect_equal(out.report, "dirichlet: " + inputs, apply_to_algebra(sigma, dirichlet_product(f, g)),
                 dirichlet_product(sf, sg));
    if (trace_functional(sf) != trace_functional(f)) {
      out.report.failures.push_back(
          {"trace: " + inputs, to_string(trace_functional(sf)), to_string(trace_functional(f)), 0});
    }
    for (const auto* h : {&f, &g}) {
      for (const auto& term : h->terms()) {
        if (term.first.is_zero()) continue;
        SignVector v = sign_of(term.first);
        SignVector w = sign_of(sigma.apply(term.first));
        auto [it, inserted] = out.iota.try_emplace(v, w);
        if (!inserted && it->second != w) {
          out.report.failures.push_back({"grading map at index " + term.first.to_string(), to_string(it->second),
                                         to_string(w), 0});
        }
      }
      const GradedDecomposition before = grade(*h);
      const GradedDecomposition after = grade(apply_to_algebra(sigma, *h));
      if (before.components.size() != after.components.size() || before.constant != after.constant) {
        out.report.failures.push_back({"grading shape: " + h->to_string(), std::to_string(before.components.size()),
                                       std::to_string(after.components.size()), 0});
        continue;
      }
      for (const auto& [v, part] : before.components) {
        auto target = after.components.find(out.iota.at(v));
        AlgebraElement moved = apply_to_algebra(sigma, part);
        if (target == after.components.end() || target->second != moved) {
          out.report.failures.push_back({"grading component " + to_string(v) + " of " + h->to_string(),
                                         moved.to_string(),
                                         target == after.components.end() ? "0" : target->second.to_string(), 0});
        }
      }
    }
  }
  return out;
}

TowerEmbedding::TowerEmbedding(FieldPtr base, FieldPtr extension, FieldElement image)
    : base_(std::move(base)), extension_(std::move(extension)), image_(std::move(image)) {
  if (!image_.field() || !image_.field()->same_as(*extension_)) throw field_mismatch("tower image must lie in the extension");
  FieldElement acc = extension_->zero();
  const auto& c = base_->minpoly().coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * image_ + extension_->from_rational(*it);
  if (!acc.is_zero()) {
    throw domain_error("image " + image_.to_string() + " is not a root of " + base_->minpoly().to_string());
  }
}

FieldElement TowerEmbedding::map(const FieldElement& a) const {
  if (!a.field()->same_as(*base_)) throw field_mismatch("element is not from the base field");
  FieldElement acc = extension_->zero();
  const auto& c = a.coords();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * image_ + extension_->from_rational(*it);
  return acc;
}

CheckReport fixed_field_check(const Automorphism& sigma, const TowerEmbedding& tower, std::size_t samples,
                              std::uint64_t seed) {
  CheckReport report;
  report.check = "fixed_field";
  report.samples = samples;
  if (!sigma.field()->same_as(*tower.extension())) throw field_mismatch("automorphism is not of the extension field");
  const FieldElement moved = sigma.apply(tower.image());
  if (moved != tower.image()) {
    report.failures.push_back({"embedded generator", moved.to_string(), tower.image().to_string(), 0});
  }
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    FieldElement beta = tower.map(random_index(tower.base(), rng, {6, 2}));
    AlgebraElement m = monomial(beta, Coefficient(1));
    expect_equal(report, "monomial z^{" + beta.to_string() + "}", apply_to_algebra(sigma, m), m);
  }
  AutomorphismReport nonlinear = verify_nonlinear_automorphism(sigma, samples, seed + 1);
  for (auto& failure : nonlinear.report.failures) report.failures.push_back(std::move(failure));
  return report;
}

FieldElement relative_trace(const FieldElement& alpha, const std::vector<Automorphism>& group) {
  FieldElement sum = alpha.field()->zero();
  for (const auto& sigma : group) sum += sigma.apply(alpha);
  return sum;
}

std::vector<TraceCollapseRow> cyclotomic_trace_collapse(int k_max) {
  std::vector<TraceCollapseRow> rows;
  for (int k = 2; k <= k_max; ++k) {
    TraceCollapseRow row;
    row.k = k;
    FieldPtr field = NumberField::define(cyclotomic_polynomial(1U << k));
    row.degree = field->degree();
    Integer g = 0;
    row.ok = true;
    FieldElement power = field->one();
    for (int j = 0; j < row.degree; ++j) {
      Rational t = absolute_trace(power);
      row.traces.push_back(t);
      if (t != (j == 0 ? Rational(row.degree) : Rational(0))) row.ok = false;
      if (is_integer(t)) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.get_num_mpz_t());
      power *= field->generator();
    }
    row.image_generator = g;
    row.ok = row.ok && g == row.degree;
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

constexpr double two_pi = 2 * std::numbers::pi;

AlgebraElement phase_multiply(const AlgebraElement& f, double (*phase)(const KInfVector&, const KInfVector&),
                              const KInfVector& r, bool fix_constant) {
  if (f.mode() != Mode::approx) throw mode_mismatch("flows act on approximate-mode elements");
  AlgebraElement out(f.field(), f.mode());
  for (const auto& [alpha, c] : f.terms()) {
    if (alpha.is_zero() && fix_constant) {
      out.add_term(alpha, c);
      continue;
    }
    const double t = alpha.is_zero() ? 0.0 : phase(numeric_embedding(alpha), r);
    out.add_term(alpha, c * Coefficient(std::polar(1.0, two_pi * t)));
  }
  return out;
}

double additive_phase(const KInfVector& a, const KInfVector& r) { return trace_on_infinity(multiply(a, r)); }

double log_phase(const KInfVector& a, const KInfVector& r) {
  double t = 0;
  for (std::size_t i = 0; i < a.real.size(); ++i) t += r.real[i] * std::log(std::abs(a.real[i]));
  for (std::size_t j = 0; j < a.complex.size(); ++j) t += 2 * r.complex[j].real() * std::log(std::abs(a.complex[j]));
  return t;
}

}  // namespace

AlgebraElement flow_phi(const KInfVector& r, const AlgebraElement& f) {
  return phase_multiply(f, additive_phase, r, false);
}

AlgebraElement flow_psi(const KInfVector& r, const AlgebraElement& f) { return phase_multiply(f, log_phase, r, true); }

std::vector<CheckReport> verify_flows(const FieldPtr& field, std::size_t samples, std::uint64_t seed, double tol) {
  std::vector<CheckReport> reports(8);
  const char* names[] = {"phi_cauchy_homomorphism", "psi_dirichlet_homomorphism", "phi_group_law", "psi_group_law",
                         "phi_norm", "psi_norm", "phi_projective_fix", "psi_projective_fix"};
  for (std::size_t i = 0; i < reports.size(); ++i) {
    reports[i].check = names[i];
    reports[i].samples = samples;
  }
  Rng rng(seed);
  const IndexShape shape{5, 1};
  for (std::size_t s = 0; s < samples; ++s) {
    const KInfVector r = random_kinf(field, rng);
    const KInfVector r2 = random_kinf(field, rng);
    const AlgebraElement f = random_approx_element(field, rng, 6, shape);
    const AlgebraElement g = random_approx_element(field, rng, 6, shape);
    const AlgebraElement f0 = random_approx_element(field, rng, 6, shape, false);
    const AlgebraElement g0 = random_approx_element(field, rng, 6, shape, false);
    const std::string inputs = "f = " + f.to_string() + "; g = " + g.to_string();
    expect_close(reports[0], inputs, flow_phi(r, cauchy_product(f, g)), cauchy_product(flow_phi(r, f), flow_phi(r, g)),
                 tol);
    expect_close(reports[1], "f = " + f0.to_string() + "; g = " + g0.to_string(), flow_psi(r, dirichlet_product(f0, g0)),
                 dirichlet_product(flow_psi(r, f0), flow_psi(r, g0)), tol);
    expect_close(reports[2], inputs, flow_phi(r + r2, f), flow_phi(r, flow_phi(r2, f)), tol);
    expect_close(reports[3], inputs, flow_psi(r + r2, f), flow_psi(r, flow_psi(r2, f)), tol);
    for (int which = 0; which < 2; ++which) {
      const AlgebraElement moved = which == 0 ? flow_phi(r, f) : flow_psi(r, f);
      const double delta = std::abs(l2_norm(moved) - l2_norm(f));
      if (!(delta <= tol)) {
        reports[4 + which].failures.push_back({inputs, std::to_string(l2_norm(moved)), std::to_string(l2_norm(f)), delta});
      }
      const AlgebraElement m = monomial(random_index(field, rng, shape), Coefficient(std::complex<double>(1.0)));
      const AlgebraElement mm = which == 0 ? flow_phi(r, m) : flow_psi(r, m);
      if (!projective_eq(mm, m, tol)) {
        reports[6 + which].failures.push_back({m.to_string(), mm.to_string(), m.to_string(), max_abs_difference(mm, m)});
      }
    }
  }
  return reports;
}

}  // namespace nlnf
