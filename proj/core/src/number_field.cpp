#include "nlnf/number_field.hpp"

#include <cmath>

#include "nlnf/errors.hpp"
#include "nlnf/factor.hpp"

namespace nlnf {

namespace {

Rational two_pow_neg(long bits) {
  Rational r(1);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(bits));
  return r;
}

long bits_for_width(const Rational& w) {
  if (sgn(w) <= 0) return 64;
  return std::max(8L, -floor_log2(w) + 8);
}

std::vector<Rational> reduce(const Polynomial& poly, const Polynomial& modulus) {
  Polynomial r = poly % modulus;
  std::vector<Rational> c = r.coeffs();
  c.resize(static_cast<std::size_t>(modulus.degree()));
  return c;
}

using Matrix = std::vector<std::vector<Rational>>;

Matrix matmul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix r(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  }
  return r;
}

}  // namespace

NumberField::NumberField(Polynomial p, FieldOptions opts)
    : minpoly_(std::move(p)), opts_(opts), iso_(minpoly_, opts.precision) {}

FieldPtr NumberField::define(const Polynomial& minpoly, FieldOptions opts) {
  if (minpoly.degree() < 1) throw invalid_polynomial("defining polynomial must have degree >= 1");
  if (!minpoly.is_monic()) throw invalid_polynomial("defining polynomial must be monic: " + minpoly.to_string());
  if (minpoly.degree() > opts.max_degree) {
    throw invalid_polynomial("degree " + std::to_string(minpoly.degree()) + " exceeds the supported maximum " +
                             std::to_string(opts.max_degree));
  }
  auto reject = [&](const Polynomial& factor) {
    throw reducible_polynomial(minpoly.to_string() + " is reducible; factor " + factor.to_string(),
                               factor.to_string());
  };
  if (auto f = quick_factor(minpoly)) reject(*f);

  std::shared_ptr<NumberField> field(new NumberField(minpoly, opts));
  if (!eisenstein_certificate(minpoly)) {
    if (auto f = find_factor(minpoly, field->iso_)) reject(*f);
  }

  const int d = minpoly.degree();
  for (std::size_t i = 0; i < field->iso_.real_count(); ++i) field->places_.push_back({PlaceKind::real, i});
  for (std::size_t j = 0; j < field->iso_.pair_count(); ++j) field->places_.push_back({PlaceKind::complex_pair, j});

  // companion matrix: column j holds x * x^j reduced mod p
  Matrix comp(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d)));
  for (int j = 0; j < d; ++j) {
    auto col = reduce(Polynomial::monomial(Rational(1), static_cast<std::size_t>(j + 1)), minpoly);
    for (int i = 0; i < d; ++i) comp[i][j] = col[i];
  }
  field->companion_ = comp;
  Matrix power(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d)));
  for (int i = 0; i < d; ++i) power[i][i] = 1;
  for (int k = 0; k < d; ++k) {
    Rational tr(0);
    for (int i = 0; i < d; ++i) tr += power[i][i];
    field->power_traces_.push_back(tr);
    power = matmul(comp, power);
  }
  return field;
}

CertifiedBox NumberField::root_box(const Place& place, const Rational& w) const {
  std::lock_guard<std::mutex> lock(mutex_);
  if (place.kind == PlaceKind::real) {
    iso_.refine_real(place.index, w);
    return {iso_.real_box(place.index)};
  }
  iso_.refine_complex(w);
  return {iso_.upper_box(place.index)};
}

bool NumberField::boxes_disjoint() const {
  std::lock_guard<std::mutex> lock(mutex_);
  // Real isolating intervals may share a split point, which is never a root.
  for (std::size_t i = 0; i < iso_.real_count(); ++i) {
    for (std::size_t j = i + 1; j < iso_.real_count(); ++j) {
      const Interval a = iso_.real_interval(i), b = iso_.real_interval(j);
      if (a.lo < b.hi && b.lo < a.hi) return false;
      if (a.lo == a.hi && b.contains(a.lo)) return false;
      if (b.lo == b.hi && a.contains(b.lo)) return false;
    }
  }
  std::vector<ComplexInterval> boxes;
  for (std::size_t j = 0; j < iso_.pair_count(); ++j) {
    boxes.push_back(iso_.upper_box(j));
    boxes.push_back(iso_.upper_box(j).conj());
  }
  for (std::size_t a = 0; a < boxes.size(); ++a) {
    for (std::size_t b = a + 1; b < boxes.size(); ++b) {
      if (boxes[a].overlaps(boxes[b])) return false;
    }
    for (std::size_t i = 0; i < iso_.real_count(); ++i) {
      if (boxes[a].overlaps(iso_.real_box(i))) return false;
    }
  }
  return true;
}

RootIsolator NumberField::isolator_snapshot() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return iso_;
}

FieldElement NumberField::zero() const {
  return FieldElement(shared_from_this(), std::vector<Rational>(static_cast<std::size_t>(degree())));
}

FieldElement NumberField::one() const { return from_rational(Rational(1)); }

FieldElement NumberField::generator() const {
  std::vector<Rational> c(static_cast<std::size_t>(degree()));
  if (degree() == 1) {
    c[0] = -minpoly_.coeff(0);
  } else {
    c[1] = 1;
  }
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement NumberField::from_rational(const Rational& q) const {
  std::vector<Rational> c(static_cast<std::size_t>(degree()));
  c[0] = q;
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement NumberField::element(std::vector<Rational> coords) const {
  return FieldElement(shared_from_this(), std::move(coords));
}

// ---------------------------------------------------------------- elements

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (!field_) throw domain_error("field element without a field");
  const auto d = static_cast<std::size_t>(field_->degree());
  if (coords_.size() > d) {
    coords_ = reduce(Polynomial(coords_), field_->minpoly());
  }
  coords_.resize(d);
}

bool FieldElement::is_zero() const {
  for (const auto& c : coords_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (sgn(coords_[i]) != 0) return false;
  }
  return true;
}

bool FieldElement::is_integral() const {
  for (const auto& c : coords_) {
    if (!nlnf::is_integer(c)) return false;
  }
  return true;
}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (!field_ || !o.field_ || !field_->same_as(*o.field_)) {
    throw field_mismatch("field elements belong to different fields");
  }
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same_field(o);
  coords_ = reduce(as_polynomial() * o.as_polynomial(), field_->minpoly());
  return *this;
}

FieldElement& FieldElement::operator*=(const Rational& q) {
  for (auto& c : coords_) c *= q;
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw division_by_zero("inverse of the zero field element");
  auto eg = extended_gcd(as_polynomial(), field_->minpoly());
  // s * a + t * p = 1 since p is irreducible and a != 0
  return FieldElement(field_, reduce(eg.s, field_->minpoly()));
}

FieldElement FieldElement::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  FieldElement result = field_->one();
  FieldElement base = *this;
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

std::string FieldElement::to_string(const std::string& var) const {
  std::string out;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    const Rational& c = coords_[k];
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += nlnf::to_string(a);
    } else {
      if (a != 1) out += nlnf::to_string(a) + "*";
      out += var;
      if (k >= 2) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

FieldElement elem_arith(ElementOp op, const FieldElement& a, const FieldElement* b) {
  if (op != ElementOp::inv && b == nullptr) throw domain_error("binary field operation needs two operands");
  switch (op) {
    case ElementOp::add:
      return a + *b;
    case ElementOp::sub:
      return a - *b;
    case ElementOp::mul:
      return a * *b;
    case ElementOp::inv:
      return a.inverse();
  }
  throw domain_error("unknown field operation");
}

std::vector<std::vector<Rational>> multiplication_matrix(const FieldElement& a) {
  const auto d = static_cast<std::size_t>(a.field()->degree());
  Matrix m(d, std::vector<Rational>(d));
  FieldElement col = a;
  const FieldElement x = a.field()->generator();
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col.coords()[i];
    if (j + 1 < d) col *= x;
  }
  return m;
}

Polynomial characteristic_polynomial(const FieldElement& a) {
  // Faddeev-LeVerrier
  const Matrix A = multiplication_matrix(a);
  const std::size_t n = A.size();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix M(n, std::vector<Rational>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix AM = matmul(A, M);
    for (std::size_t i = 0; i < n; ++i) AM[i][i] += c[n - k + 1];
    M = AM;
    Matrix AMk = matmul(A, M);
    Rational tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += AMk[i][i];
    c[n - k] = -tr / static_cast<long>(k);
  }
  return Polynomial(c);
}

Rational absolute_trace(const FieldElement& a) {
  const auto& t = a.field()->power_traces();
  Rational tr(0);
  for (std::size_t i = 0; i < t.size(); ++i) tr += a.coords()[i] * t[i];
  return tr;
}

Polynomial minimal_polynomial_of(const FieldElement& a) { return square_free_part(characteristic_polynomial(a)); }

CertifiedBox embed(const FieldElement& a, const Place& place, const Rational& w) {
  if (sgn(w) <= 0) throw domain_error("embedding width must be positive");
  if (a.is_rational()) return {ComplexInterval(GaussianRational(a.coords()[0]))};
  const Polynomial poly = a.as_polynomial();
  Rational root_w = w;
  // scale the root width by a crude Lipschitz bound of the coordinate polynomial
  Rational lip(1);
  for (const auto& c : poly.coeffs()) lip += abs(c);
  root_w /= lip * static_cast<long>(a.field()->degree() + 1);
  for (;;) {
    CertifiedBox root = a.field()->root_box(place, root_w);
    long bits = bits_for_width(w) + 16;
    ComplexInterval acc(Interval(Rational(0)), Interval(Rational(0)));
    const auto& c = poly.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      acc = acc * root.box;
      acc.re = acc.re + Interval(*it);
      acc = acc.rounded_outward(bits);
    }
    if (acc.width() <= w) return {acc};
    root_w /= 1 << 16;
  }
}

std::vector<CertifiedBox> embed_all(const FieldElement& a, const Rational& w) {
  std::vector<CertifiedBox> out;
  for (const auto& place : a.field()->places()) out.push_back(embed(a, place, w));
  return out;
}

KInfVector numeric_embedding(const FieldElement& a) {
  KInfVector v;
  const Rational w = two_pow_neg(60);
  for (const auto& place : a.field()->places()) {
    CertifiedBox b = embed(a, place, w);
    if (place.kind == PlaceKind::real) {
      v.real.push_back(b.box.re.mid().get_d());
    } else {
      v.complex.emplace_back(b.box.re.mid().get_d(), b.box.im.mid().get_d());
    }
  }
  return v;
}

bool is_in_inverse_different(const FieldElement& a) {
  FieldElement basis = a.field()->one();
  const FieldElement x = a.field()->generator();
  for (int j = 0; j < a.field()->degree(); ++j) {
    if (!is_integer(absolute_trace(a * basis))) return false;
    basis *= x;
  }
  return true;
}

bool is_in_inverse_different_monogenic(const FieldElement& a) {
  const FieldPtr& K = a.field();
  Polynomial dp = K->minpoly().derivative();
  FieldElement dpx(K, dp.coeffs());
  return (dpx * a).is_integral();
}

double trace_on_infinity(const KInfVector& v) {
  double sum = 0;
  for (double x : v.real) sum += x;
  for (const auto& z : v.complex) sum += 2 * z.real();
  return sum;
}

Interval trace_on_infinity(const FieldPtr& field, const std::vector<CertifiedBox>& boxes) {
  Interval sum(Rational(0));
  const auto& places = field->places();
  for (std::size_t i = 0; i < places.size() && i < boxes.size(); ++i) {
    if (places[i].kind == PlaceKind::real) {
      sum = sum + boxes[i].box.re;
    } else {
      sum = sum + boxes[i].box.re * Rational(2);
    }
  }
  return sum;
}

KInfVector multiply(const KInfVector& x, const KInfVector& y) {
  KInfVector r;
  for (std::size_t i = 0; i < x.real.size(); ++i) r.real.push_back(x.real[i] * y.real[i]);
  for (std::size_t j = 0; j < x.complex.size(); ++j) r.complex.push_back(x.complex[j] * y.complex[j]);
  return r;
}

KInfVector operator+(const KInfVector& x, const KInfVector& y) {
  KInfVector r;
  for (std::size_t i = 0; i < x.real.size(); ++i) r.real.push_back(x.real[i] + y.real[i]);
  for (std::size_t j = 0; j < x.complex.size(); ++j) r.complex.push_back(x.complex[j] + y.complex[j]);
  return r;
}

}  // namespace nlnf
