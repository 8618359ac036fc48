#include "nlnf/hardy.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "nlnf/errors.hpp"

namespace nlnf {

namespace {

constexpr double two_pi = 2 * std::numbers::pi;
constexpr double eps = std::numeric_limits<double>::epsilon();

std::complex<double> unit_power(int k) {
  static const std::complex<double> units[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return units[((k % 4) + 4) % 4];
}

// Basis images of 1, a, ..., a^(d-1) as columns of a real d x d matrix.
std::vector<std::vector<double>> basis_matrix(const FieldPtr& field) {
  const auto d = static_cast<std::size_t>(field->degree());
  std::vector<std::vector<double>> m(d, std::vector<double>(d));
  FieldElement power = field->one();
  for (std::size_t j = 0; j < d; ++j) {
    KInfVector v = numeric_embedding(power);
    std::size_t row = 0;
    for (double x : v.real) m[row++][j] = x;
    for (const auto& z : v.complex) {
      m[row++][j] = z.real();
      m[row++][j] = z.imag();
    }
    power *= field->generator();
  }
  return m;
}

std::vector<double> solve(std::vector<std::vector<double>> m, std::vector<double> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    }
    std::swap(m[col], m[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (std::size_t r = col + 1; r < n; ++r) {
      double factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
      rhs[r] -= factor * rhs[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double acc = rhs[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= m[i][c] * x[c];
    x[i] = acc / m[i][i];
  }
  return x;
}

struct IndexedTerm {
  KInfVector embedding;
  std::complex<double> coeff;
};

std::vector<IndexedTerm> embedded_terms(const AlgebraElement& f) {
  std::vector<IndexedTerm> out;
  for (const auto& [alpha, c] : f.terms()) out.push_back({numeric_embedding(alpha), c.value()});
  return out;
}

EvalResult eval_terms(const std::vector<IndexedTerm>& terms, const KInfVector& z) {
  EvalResult r{};
  for (const auto& term : terms) {
    double phase = trace_on_infinity(multiply(term.embedding, z));
    r.value += term.coeff * std::polar(1.0, two_pi * phase);
    r.error_bound += std::abs(term.coeff) * 8 * eps * (1 + std::abs(two_pi * phase));
  }
  return r;
}

}  // namespace

void HyperPoint::validate(const FieldPtr& field) const {
  if (tau.size() != static_cast<std::size_t>(field->real_places()) ||
      uv.size() != static_cast<std::size_t>(field->complex_pairs())) {
    throw domain_error("hyperbolic point does not match the field signature");
  }
  for (const auto& t : tau) {
    if (!(t.imag() > 0)) throw domain_error("real-place height must be positive");
  }
  for (const auto& [u, v] : uv) {
    if (!(u.imag() > 0) || !(v.real() > 0)) throw domain_error("complex-pair heights t and s must be positive");
  }
}

KInfVector HyperPoint::boundary() const {
  KInfVector z;
  for (const auto& t : tau) z.real.push_back(t.real());
  for (const auto& [u, v] : uv) z.complex.emplace_back(u.real(), v.imag());
  return z;
}

HyperPoint HyperPoint::over(const KInfVector& z, double height) {
  HyperPoint p;
  for (double x : z.real) p.tau.emplace_back(x, height);
  for (const auto& w : z.complex) p.uv.emplace_back(std::complex<double>(w.real(), height), std::complex<double>(height, w.imag()));
  return p;
}

TorusPoint TorusPoint::reduce(const FieldPtr& field, const KInfVector& z) {
  std::vector<double> rhs(z.real.begin(), z.real.end());
  for (const auto& w : z.complex) {
    rhs.push_back(w.real());
    rhs.push_back(w.imag());
  }
  TorusPoint p;
  p.coords = solve(basis_matrix(field), rhs);
  for (auto& c : p.coords) {
    c -= std::floor(c);
    if (c >= 1) c = 0;
  }
  return p;
}

KInfVector TorusPoint::lift(const FieldPtr& field) const {
  const std::size_t r = static_cast<std::size_t>(field->real_places());
  const std::size_t s = static_cast<std::size_t>(field->complex_pairs());
  KInfVector z{std::vector<double>(r), std::vector<std::complex<double>>(s)};
  FieldElement power = field->one();
  for (double c : coords) {
    KInfVector v = numeric_embedding(power);
    for (std::size_t i = 0; i < r; ++i) z.real[i] += c * v.real[i];
    for (std::size_t j = 0; j < s; ++j) z.complex[j] += c * v.complex[j];
    power *= field->generator();
  }
  return z;
}

EvalResult character_eval(const FieldElement& alpha, const KInfVector& z) {
  if (alpha.is_zero()) return {1.0, 0};
  return eval_terms({{numeric_embedding(alpha), 1.0}}, z);
}

EvalResult boundary_eval(const AlgebraElement& f, const KInfVector& z) { return eval_terms(embedded_terms(f), z); }

EvalResult series_eval_hyper(const GradedDecomposition& graded, const FieldPtr& field, const HyperPoint& p) {
  p.validate(field);
  EvalResult r{graded.constant.value(), 0};
  for (const auto& [sign, part] : graded.components) {
    for (const auto& [alpha, c] : part.terms()) {
      const KInfVector a = numeric_embedding(alpha);
      double phase = 0;
      double decay = 0;
      for (std::size_t i = 0; i < a.real.size(); ++i) {
        const double theta = sign.real[i] == RealSign::plus ? 1.0 : -1.0;
        phase += a.real[i] * p.tau[i].real();
        decay += theta * a.real[i] * p.tau[i].imag();
      }
      for (std::size_t j = 0; j < a.complex.size(); ++j) {
        const auto& [u, v] = p.uv[j];
        const std::complex<double> z(u.real(), v.imag());
        const std::complex<double> b(v.real(), u.imag());
        const std::complex<double> turned = unit_power(-sign.complex[j].rotation) * b;
        phase += 2 * (a.complex[j] * z).real();
        decay += 2 * (a.complex[j] * turned).imag();
      }
      const std::complex<double> term = c.value() * std::polar(std::exp(-two_pi * decay), two_pi * phase);
      r.value += term;
      r.error_bound += std::abs(c.value()) * 8 * eps * (1 + two_pi * (std::abs(phase) + std::abs(decay)));
    }
  }
  return r;
}

EvalResult series_eval_hyper(const AlgebraElement& f, const HyperPoint& p) {
  return series_eval_hyper(grade(f), f.field(), p);
}

bool in_positive_cone(const FieldElement& alpha) {
  if (alpha.is_zero()) return false;
  const SignVector v = sign_of(alpha);
  for (auto s : v.real) {
    if (s != RealSign::plus) return false;
  }
  for (const auto& s : v.complex) {
    if (s != ComplexSign::sector(0)) return false;
  }
  return true;
}

bool hardy_membership(const AlgebraElement& f) {
  for (const auto& term : f.terms()) {
    if (!term.first.is_zero() && !in_positive_cone(term.first)) return false;
  }
  return true;
}

double l2_norm(const AlgebraElement& f) {
  if (f.mode() == Mode::exact) {
    Rational sum(0);
    for (const auto& term : f.terms()) sum += term.second.exact().norm();
    return std::sqrt(sum.get_d());
  }
  double sum = 0;
  for (const auto& term : f.terms()) sum += std::norm(term.second.value());
  return std::sqrt(sum);
}

std::vector<Integer> dual_coordinates(const FieldElement& alpha) {
  std::vector<Integer> out;
  FieldElement power = alpha.field()->one();
  for (int j = 0; j < alpha.field()->degree(); ++j) {
    Rational t = absolute_trace(alpha * power);
    if (!is_integer(t)) throw domain_error("index " + alpha.to_string() + " is not in the inverse different");
    out.push_back(t.get_num());
    power *= alpha.field()->generator();
  }
  return out;
}

FieldElement from_dual_coordinates(const FieldPtr& field, const std::vector<Integer>& m) {
  const auto d = static_cast<std::size_t>(field->degree());
  if (m.size() != d) throw domain_error("expected " + std::to_string(d) + " dual coordinates");
  // Trace form Tr(a^(i+j)) augmented with m, reduced by Gauss-Jordan.
  std::vector<Rational> traces;
  FieldElement power = field->one();
  for (std::size_t k = 0; k + 1 < 2 * d; ++k) {
    traces.push_back(absolute_trace(power));
    power *= field->generator();
  }
  std::vector<std::vector<Rational>> rows(d, std::vector<Rational>(d + 1));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) rows[i][j] = traces[i + j];
    rows[i][d] = Rational(m[i]);
  }
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    while (rows[pivot][col] == 0) ++pivot;  // the trace form of a field is nondegenerate
    std::swap(rows[pivot], rows[col]);
    for (std::size_t i = 0; i < d; ++i) {
      if (i == col || rows[i][col] == 0) continue;
      const Rational factor = rows[i][col] / rows[col][col];
      for (std::size_t j = col; j <= d; ++j) rows[i][j] -= factor * rows[col][j];
    }
  }
  std::vector<Rational> coords(d);
  for (std::size_t i = 0; i < d; ++i) coords[i] = rows[i][d] / rows[i][i];
  return field->element(std::move(coords));
}

EvalResult torus_inner_product(const AlgebraElement& f, const AlgebraElement& g, int grid) {
  f.check_compatible(g);
  const FieldPtr& field = f.field();
  const int d = field->degree();
  Integer height = 0;
  for (const auto* h : {&f, &g}) {
    for (const auto& term : h->terms()) {
      for (const auto& m : dual_coordinates(term.first)) height = std::max(height, Integer(abs(m)));
    }
  }
  if (grid < 1 || Integer(grid) < 2 * height + 1) {
    throw bandwidth_error("quadrature grid " + std::to_string(grid) + " below 2*height+1 = " +
                          Integer(2 * height + 1).get_str());
  }
  const auto tf = embedded_terms(f);
  const auto tg = embedded_terms(g);

  std::vector<KInfVector> basis;
  FieldElement power = field->one();
  for (int j = 0; j < d; ++j) {
    basis.push_back(numeric_embedding(power));
    power *= field->generator();
  }
  long total = 1;
  for (int j = 0; j < d; ++j) total *= grid;

  EvalResult acc{};
  for (long cell = 0; cell < total; ++cell) {
    long rest = cell;
    KInfVector z{std::vector<double>(static_cast<std::size_t>(field->real_places())),
                 std::vector<std::complex<double>>(static_cast<std::size_t>(field->complex_pairs()))};
    for (int j = 0; j < d; ++j) {
      const double t = static_cast<double>(rest % grid) / grid;
      rest /= grid;
      for (std::size_t i = 0; i < z.real.size(); ++i) z.real[i] += t * basis[j].real[i];
      for (std::size_t i = 0; i < z.complex.size(); ++i) z.complex[i] += t * basis[j].complex[i];
    }
    EvalResult a = eval_terms(tf, z);
    EvalResult b = eval_terms(tg, z);
    acc.value += a.value * std::conj(b.value);
    acc.error_bound += a.error_bound * std::abs(b.value) + b.error_bound * std::abs(a.value);
  }
  acc.value /= static_cast<double>(total);
  acc.error_bound = acc.error_bound / static_cast<double>(total) + total * eps;
  return acc;
}

void write_decay_sweep(std::ostream& out, const AlgebraElement& f, const KInfVector& x, int steps) {
  const GradedDecomposition graded = grade(f);
  const EvalResult edge = boundary_eval(f, x);
  out << "t,abs_value,gap,bound\n";
  double t = 1;
  for (int k = 0; k <= steps; ++k, t /= 2) {
    EvalResult v = series_eval_hyper(graded, f.field(), HyperPoint::over(x, t));
    char line[160];
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.3g\n", t, std::abs(v.value), std::abs(v.value - edge.value),
                  v.error_bound + edge.error_bound);
    out << line;
  }
}

}  // namespace nlnf
