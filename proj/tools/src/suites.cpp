#include "nlnf_cli/suites.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "nlnf/dirichlet.hpp"
#include "nlnf/errors.hpp"
#include "nlnf/random.hpp"
#include "nlnf_cli/expression.hpp"

namespace nlnf::cli {

namespace {

constexpr std::size_t kMaxRecordedFailures = 25;

class Check {
 public:
  explicit Check(std::string name) { report_.check = std::move(name); }

  void expect(bool ok, const std::string& inputs, const std::string& lhs = "", const std::string& rhs = "",
              double delta = 0) {
    ++report_.samples;
    if (!ok && report_.failures.size() < kMaxRecordedFailures) report_.failures.push_back({inputs, lhs, rhs, delta});
  }

  void near(double lhs, double rhs, double tol, const std::string& inputs) {
    const double delta = std::abs(lhs - rhs);
    std::ostringstream l, r;
    l.precision(17);
    r.precision(17);
    l << lhs;
    r << rhs;
    expect(delta <= tol, inputs, l.str(), r.str(), delta);
  }

  template <class A, class B>
  void equal(const A& lhs, const B& rhs, const std::string& inputs) {
    expect(lhs == rhs, inputs, text(lhs), text(rhs));
  }

  /// Runs body; an escaping exception counts as a failed sample.
  void guard(const std::string& inputs, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      expect(false, inputs, "exception", e.what());
    }
  }

  CheckReport take() { return std::move(report_); }

 private:
  static std::string text(const AlgebraElement& f) { return f.to_string(); }
  static std::string text(const Coefficient& c) { return to_string(c); }
  static std::string text(const Rational& q) { return to_string(q); }
  static std::string text(const std::string& s) { return s; }
  static std::string text(const json& j) { return j.dump(); }
  static std::string text(const SignVector& v) { return to_string(v); }
  static std::string text(bool b) { return b ? "true" : "false"; }
  template <class T>
  static std::string text(const T& v) {
    std::ostringstream out;
    out << v;
    return out.str();
  }

  CheckReport report_;
};

json read_fixture(const SuiteOptions& options, const std::string& file) {
  const std::filesystem::path path = options.fixtures / file;
  std::ifstream in(path);
  if (!in) throw config_error("missing fixture " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw config_error("fixture " + path.string() + " is not valid JSON: " + e.what());
  }
}

struct Context {
  const SuiteOptions& options;
  std::map<std::string, FieldPtr> fields;
  std::vector<CheckReport>& out;

  FieldPtr field(const json& name) const {
    auto it = fields.find(name.get<std::string>());
    if (it == fields.end()) throw domain_error("fixture refers to unknown field " + name.dump());
    return it->second;
  }
  Rng rng(std::uint64_t salt) const { return Rng(options.seed * 0x9E3779B97F4A7C15ULL + salt); }
  void add(Check& c) { out.push_back(c.take()); }
};

Context load_context(const SuiteOptions& options, std::vector<CheckReport>& out) {
  Context ctx{options, {}, out};
  const json fields = read_fixture(options, "fields.json");
  Check c("fixture.fields");
  for (const auto& [name, spec] : fields.items()) {
    c.guard(name, [&] {
      ctx.fields.emplace(name, field_from_json(spec));
      c.expect(true, name);
    });
  }
  ctx.add(c);
  return ctx;
}

std::string pair_text(const AlgebraElement& f, const AlgebraElement& g) { return f.to_string() + " ; " + g.to_string(); }

// Double loop over nonzero index pairs plus the constant-term rule.
AlgebraElement dirichlet_oracle(const AlgebraElement& f, const AlgebraElement& g) {
  const FieldPtr& k = f.field();
  AlgebraElement out = zero_element(k, f.mode());
  Coefficient sum_f = Coefficient::zero(f.mode()), sum_g = Coefficient::zero(f.mode());
  for (const auto& [a, ca] : f.terms()) {
    if (a.is_zero()) continue;
    sum_f = sum_f + ca;
    for (const auto& [b, cb] : g.terms()) {
      if (!b.is_zero()) out.add_term(a * b, ca * cb);
    }
  }
  for (const auto& [b, cb] : g.terms()) {
    if (!b.is_zero()) sum_g = sum_g + cb;
  }
  const Coefficient f0 = f.constant(), g0 = g.constant();
  out.add_term(k->zero(), f0 * sum_g + g0 * sum_f + f0 * g0);
  return out;
}

void algebra_suite(Context& ctx) {
  const json fx = read_fixture(ctx.options, "algebra.json");

  Check erratum("algebra.erratum_constant_term");
  erratum.guard("erratum fixture", [&] {
    const json& e = fx.at("erratum");
    FieldPtr k = ctx.field(e.at("field"));
    AlgebraElement f = parse_algebra(e.at("f").get<std::string>(), k);
    AlgebraElement g = parse_algebra(e.at("g").get<std::string>(), k);
    const std::string in = pair_text(f, g);
    AlgebraElement d = dirichlet_product(f, g);
    erratum.equal(d, parse_algebra(e.at("dirichlet").get<std::string>(), k), in);
    erratum.equal(cauchy_product(f, g), parse_algebra(e.at("cauchy").get<std::string>(), k), in);
    GradedLawReport r = check_graded_dirichlet_law(f, g);
    const Coefficient rule(GaussianRational(rational_from_json(e.at("constant_rule"))));
    const Coefficient alternative(GaussianRational(rational_from_json(e.at("constant_alternative"))));
    erratum.equal(r.constant, rule, in + " constant");
    erratum.equal(r.constant_rule, rule, in + " rule");
    erratum.equal(r.constant_alternative, alternative, in + " alternative");
    erratum.expect(r.constant != r.constant_alternative, in + " rule and alternative differ");
    const Coefficient tf(GaussianRational(rational_from_json(e.at("trace_f"))));
    const Coefficient tg(GaussianRational(rational_from_json(e.at("trace_g"))));
    erratum.equal(trace_functional(f), tf, in + " T(f)");
    erratum.equal(trace_functional(g), tg, in + " T(g)");
    erratum.equal(trace_functional(d), tf * tg, in + " T(f (x) g)");
  });
  ctx.add(erratum);

  Check witness("algebra.non_distributivity");
  witness.guard("witness fixture", [&] {
    const json& w = fx.at("non_distributivity");
    FieldPtr k = ctx.field(w.at("field"));
    AlgebraElement f = parse_algebra(w.at("f").get<std::string>(), k);
    AlgebraElement h = parse_algebra(w.at("h").get<std::string>(), k);
    AlgebraElement left = dirichlet_product(cauchy_product(f, f), h);
    AlgebraElement right = cauchy_product(dirichlet_product(f, h), dirichlet_product(f, h));
    witness.equal(left, parse_algebra(w.at("left").get<std::string>(), k), "(f (+) f) (x) h");
    witness.equal(right, parse_algebra(w.at("right").get<std::string>(), k), "(f (x) h) (+) (f (x) h)");
    witness.expect(left != right, "sides differ", left.to_string(), right.to_string());
  });
  ctx.add(witness);

  Check annihilator("algebra.annihilator");
  annihilator.guard("annihilator fixture", [&] {
    const json& a = fx.at("annihilator");
    FieldPtr k = ctx.field(a.at("field"));
    AlgebraElement f = parse_algebra(a.at("f").get<std::string>(), k);
    AlgebraElement expected = cauchy_identity(k, Mode::exact) * trace_functional(f);
    annihilator.equal(dirichlet_product(cauchy_identity(k, Mode::exact), f), expected, f.to_string());
  });
  ctx.add(annihilator);

  Check oracle("algebra.dirichlet_oracle"), comm("algebra.commutativity"), assoc("algebra.associativity"),
      trace("algebra.trace_multiplicativity"), ident("algebra.identities"), ideal("algebra.ideal"),
      proj("algebra.projective");
  std::uint64_t salt = 0;
  for (const auto& name : fx.at("fields")) {
    FieldPtr k;
    try {
      k = ctx.field(name);
    } catch (const std::exception& e) {
      oracle.expect(false, name.dump(), "exception", e.what());
      continue;
    }
    Rng rng = ctx.rng(++salt);
    const IndexShape shape{20, 1};
    for (std::size_t s = 0; s < ctx.options.samples; ++s) {
      AlgebraElement f = random_exact_element(k, rng, 8, shape);
      AlgebraElement g = random_exact_element(k, rng, 8, shape);
      AlgebraElement h = random_exact_element(k, rng, 3, shape);
      const std::string in = pair_text(f, g);
      AlgebraElement fg = dirichlet_product(f, g), fpg = cauchy_product(f, g);
      oracle.equal(fg, dirichlet_oracle(f, g), in);
      comm.equal(fpg, cauchy_product(g, f), in + " (+)");
      comm.equal(fg, dirichlet_product(g, f), in + " (x)");
      assoc.equal(cauchy_product(fpg, h), cauchy_product(f, cauchy_product(g, h)), in + " ; " + h.to_string());
      assoc.equal(dirichlet_product(fg, h), dirichlet_product(f, dirichlet_product(g, h)),
                  in + " ; " + h.to_string());
      const Coefficient tf = trace_functional(f), tg = trace_functional(g);
      trace.equal(trace_functional(fpg), tf * tg, in + " (+)");
      trace.equal(trace_functional(fg), tf * tg, in + " (x)");
      ident.equal(cauchy_product(cauchy_identity(k, Mode::exact), f), f, f.to_string() + " (+)");
      ident.equal(dirichlet_product(dirichlet_identity(k, Mode::exact), f), f, f.to_string() + " (x)");
      AlgebraElement kernel = g - cauchy_identity(k, Mode::exact) * tg;
      ideal.expect(is_in_ideal(kernel) && is_in_ideal(cauchy_product(f, kernel)) &&
                       is_in_ideal(dirichlet_product(f, kernel)),
                   in);
      if (!tf.is_zero()) {
        const AlgebraElement rep = projectivize(f).representative();
        proj.equal(projectivize(rep).representative(), rep, f.to_string());
        proj.expect(projective_eq(f, f * Coefficient(GaussianRational(Rational(-3), Rational(2)))), f.to_string());
      }
    }
  }
  for (Check* c : {&oracle, &comm, &assoc, &trace, &ident, &ideal, &proj}) ctx.add(*c);
}

std::set<ComplexSign> sign_set(const json& j) {
  std::set<ComplexSign> out;
  for (const auto& s : j) out.insert(parse_complex_sign(s.get<std::string>()));
  return out;
}

// Equal after permuting complex pairs and conjugating the chosen representatives.
bool match_up_to_representatives(const SignVector& got, const SignVector& want) {
  if (got.real != want.real || got.complex.size() != want.complex.size()) return false;
  std::vector<std::size_t> perm(got.complex.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < perm.size() && ok; ++i) {
      const ComplexSign& s = got.complex[perm[i]];
      ok = s == want.complex[i] || s.conj() == want.complex[i];
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

void signs_suite(Context& ctx) {
  const json fx = read_fixture(ctx.options, "signs.json");

  Check table("signs.product_table");
  for (const auto& row : fx.at("table")) {
    table.guard(row.dump(), [&] {
      ComplexSign a = parse_complex_sign(row.at("a").get<std::string>());
      ComplexSign b = parse_complex_sign(row.at("b").get<std::string>());
      table.expect(sign_product(a, b) == sign_set(row.at("product")), row.dump());
    });
  }
  ctx.add(table);

  Check conj("signs.conjugation");
  for (const auto& row : fx.at("conjugation")) {
    conj.guard(row.dump(), [&] {
      ComplexSign s = parse_complex_sign(row.at("sign").get<std::string>());
      conj.equal(to_string(s.conj()), row.at("conj").get<std::string>(), row.at("sign").get<std::string>());
    });
  }
  ctx.add(conj);

  Check examples("signs.examples");
  for (const auto& row : fx.at("elements")) {
    examples.guard(row.dump(), [&] {
      FieldPtr k = ctx.field(row.at("field"));
      FieldElement a = parse_element(row.at("element").get<std::string>(), k);
      examples.equal(to_json(sign_of(a)), row.at("sign"), row.at("element").get<std::string>());
    });
  }
  ctx.add(examples);

  Check reference("signs.cube_root_reference");
  reference.guard("cube root", [&] {
    const json& r = fx.at("cube_root_reference");
    FieldPtr k = ctx.field(r.at("field"));
    FieldElement root = parse_element(r.at("element").get<std::string>(), k);
    reference.expect(root * root * root == k->from_rational(Rational(2)), "root^3 = 2");
    const SignVector got = sign_of(root), want = sign_vector_from_json(r.at("sign"), k);
    reference.expect(match_up_to_representatives(got, want), root.to_string(), to_string(got), to_string(want));
  });
  ctx.add(reference);

  Check all("signs.gaussian_realizes_all");
  all.guard("Q(i)", [&] {
    FieldPtr k = ctx.field(json("gaussian"));
    std::set<ComplexSign> seen;
    for (int x = -1; x <= 1; ++x) {
      for (int y = -1; y <= 1; ++y) {
        if (x == 0 && y == 0) continue;
        seen.insert(sign_of(k->from_rational(Rational(x)) + k->from_rational(Rational(y)) * k->generator()).complex[0]);
      }
    }
    all.equal(seen.size(), std::size_t{8}, "signs of x + y i, |x|, |y| <= 1");
  });
  ctx.add(all);

  Check mult("signs.multiplicativity"), law("signs.graded_dirichlet_law"), reassemble("signs.grade_reassembly");
  std::uint64_t salt = 100;
  for (const char* name : {"sqrt2", "gaussian", "cubic", "zeta5", "zeta8"}) {
    FieldPtr k;
    try {
      k = ctx.field(json(name));
    } catch (const std::exception& e) {
      mult.expect(false, name, "exception", e.what());
      continue;
    }
    Rng rng = ctx.rng(++salt);
    for (std::size_t s = 0; s < ctx.options.samples; ++s) {
      FieldElement a = random_index(k, rng, IndexShape{10, 3}), b = random_index(k, rng, IndexShape{10, 3});
      const SignVector sab = sign_of(a * b);
      const auto allowed = sign_product(sign_of(a), sign_of(b));
      mult.expect(allowed.count(sab) != 0, a.to_string() + " ; " + b.to_string(), to_string(sab));
    }
    if (std::string(name) == "sqrt2" || std::string(name) == "gaussian") {
      for (std::size_t s = 0; s < ctx.options.samples; ++s) {
        AlgebraElement f = random_exact_element(k, rng, 6, IndexShape{10, 2});
        AlgebraElement g = random_exact_element(k, rng, 6, IndexShape{10, 2});
        GradedLawReport r = check_graded_dirichlet_law(f, g);
        law.expect(r.ok, pair_text(f, g), r.mismatches.empty() ? "" : r.mismatches.front());
        reassemble.equal(grade(f).reassemble(k, Mode::exact), f, f.to_string());
      }
    }
  }
  for (Check* c : {&mult, &law, &reassemble}) ctx.add(*c);
}

KInfVector kinf_from_json(const json& j, const FieldPtr& k) {
  KInfVector z;
  std::size_t i = 0;
  for (int r = 0; r < k->real_places(); ++r) z.real.push_back(j.at(i++).get<double>());
  for (int s = 0; s < k->complex_pairs(); ++s) {
    const double re = j.at(i++).get<double>();
    z.complex.emplace_back(re, j.at(i++).get<double>());
  }
  if (i != j.size()) throw domain_error("point " + j.dump() + " does not match the field signature");
  return z;
}

void hardy_suite(Context& ctx) {
  const json fx = read_fixture(ctx.options, "hardy.json");

  Check character("hardy.hyper_values");
  for (const auto& row : fx.at("character")) {
    character.guard(row.dump(), [&] {
      FieldPtr k = ctx.field(row.at("field"));
      AlgebraElement f = parse_algebra(row.at("f").get<std::string>(), k, Mode::approx);
      EvalResult r = series_eval_hyper(f, HyperPoint::over(kinf_from_json(row.at("x"), k), row.at("height").get<double>()));
      const std::complex<double> want(row.at("re").get<double>(), row.at("im").get<double>());
      character.near(std::abs(r.value - want), 0, row.at("tol").get<double>(), row.at("f").get<std::string>());
    });
  }
  ctx.add(character);

  Check decay("hardy.monomial_decay"), bound("hardy.modulus_bound"), cone("hardy.cone_membership"),
      homomorphism("hardy.character_homomorphism");
  const int steps = fx.at("decay_steps").get<int>();
  std::uint64_t salt = 200;
  for (const char* name : {"Q", "sqrt2", "gaussian"}) {
    FieldPtr k = ctx.field(json(name));
    Rng rng = ctx.rng(++salt);
    for (std::size_t s = 0; s < ctx.options.samples; ++s) {
      FieldElement alpha = random_index(k, rng, IndexShape{5, 2});
      FieldElement beta = random_index(k, rng, IndexShape{5, 2});
      const KInfVector x = random_kinf(k, rng);
      const std::complex<double> lhs = character_eval(alpha + beta, x).value;
      const std::complex<double> rhs = character_eval(alpha, x).value * character_eval(beta, x).value;
      homomorphism.near(std::abs(lhs - rhs), 0, 1e-9, alpha.to_string() + " ; " + beta.to_string());

      AlgebraElement f = random_approx_element(k, rng, 4, IndexShape{5, 2});
      bool all_in_cone = true;
      for (const auto& term : f.terms()) all_in_cone = all_in_cone && (term.first.is_zero() || in_positive_cone(term.first));
      cone.equal(hardy_membership(f), all_in_cone, f.to_string());

      double total = 0;
      for (const auto& term : f.terms()) total += std::abs(term.second.value());
      EvalResult r = series_eval_hyper(f, HyperPoint::over(x, 0.25));
      bound.expect(std::abs(r.value) <= total + r.error_bound + 1e-12, f.to_string());

      if (!in_positive_cone(alpha)) continue;
      AlgebraElement m = monomial(alpha, Coefficient(std::complex<double>(1, 0)));
      const std::complex<double> edge = boundary_eval(m, x).value;
      double previous = std::numeric_limits<double>::infinity();
      bool monotone = true;
      std::string gaps;
      for (int i = 0; i <= steps; ++i) {
        const double gap = std::abs(series_eval_hyper(m, HyperPoint::over(x, std::ldexp(1.0, -i))).value - edge);
        monotone = monotone && gap <= previous;
        previous = gap;
        gaps += (i ? "," : "") + std::to_string(gap);
      }
      decay.expect(monotone, alpha.to_string(), gaps);
    }
  }
  for (Check* c : {&decay, &bound, &cone, &homomorphism}) ctx.add(*c);

  Check ortho("hardy.torus_orthonormality");
  for (const auto& row : fx.at("orthonormal")) {
    ortho.guard(row.dump(), [&] {
      FieldPtr k = ctx.field(row.at("field"));
      const int grid = row.at("grid").get<int>();
      const long height = row.at("height").get<long>();
      std::vector<FieldElement> indices;
      std::vector<Integer> m(static_cast<std::size_t>(k->degree()), -height);
      while (true) {
        indices.push_back(from_dual_coordinates(k, m));
        std::size_t j = 0;
        while (j < m.size() && m[j] == height) m[j++] = -height;
        if (j == m.size()) break;
        ++m[j];
      }
      for (const auto& a : indices) {
        const AlgebraElement fa = monomial(a, Coefficient(std::complex<double>(1, 0)));
        for (const auto& b : indices) {
          const AlgebraElement fb = monomial(b, Coefficient(std::complex<double>(1, 0)));
          const double want = a == b ? 1.0 : 0.0;
          ortho.near(std::abs(torus_inner_product(fa, fb, grid).value - want), 0, 1e-9,
                     a.to_string() + " ; " + b.to_string());
        }
      }
    });
  }
  ctx.add(ortho);
}

void galois_suite(Context& ctx) {
  const json fx = read_fixture(ctx.options, "galois.json");

  Check groups("galois.group_tables");
  std::vector<std::pair<std::string, GaloisGroup>> built;
  for (const auto& row : fx.at("groups")) {
    groups.guard(row.dump(), [&] {
      FieldPtr k = ctx.field(row.at("field"));
      const std::string family = row.at("family").get<std::string>();
      GaloisGroup g = group_from_family(
          k, family == "cyclotomic" ? GroupFamily::cyclotomic(row.at("n").get<unsigned>()) : GroupFamily::quadratic());
      groups.equal(g.order(), row.at("order").get<std::size_t>(), row.dump() + " order");
      groups.equal(g.exponent(), row.at("exponent").get<int>(), row.dump() + " exponent");
      groups.expect(g.verify_table(), row.dump() + " table");
      built.emplace_back(row.at("field").get<std::string>(), std::move(g));
    });
  }
  ctx.add(groups);

  Check rejected("galois.rejected_images");
  for (const auto& row : fx.at("rejected")) {
    rejected.guard(row.dump(), [&] {
      FieldPtr k = ctx.field(row.at("field"));
      bool threw = false;
      try {
        Automorphism::make(k, parse_element(row.at("image").get<std::string>(), k));
      } catch (const not_an_automorphism&) {
        threw = true;
      }
      rejected.expect(threw, row.dump());
    });
  }
  ctx.add(rejected);

  std::uint64_t salt = 300;
  for (const auto& [name, g] : built) {
    for (const auto& sigma : g.elements) {
      AutomorphismReport r = verify_nonlinear_automorphism(sigma, ctx.options.samples, ctx.options.seed + ++salt);
      r.report.check = "galois.automorphism[" + name + ": a -> " + sigma.image().to_string() + "]";
      ctx.out.push_back(std::move(r.report));
    }
  }

  Check tower("galois.tower_fixed_field");
  tower.guard("tower", [&] {
    const json& t = fx.at("tower");
    FieldPtr base = ctx.field(t.at("base")), ext = ctx.field(t.at("extension"));
    TowerEmbedding emb(base, ext, parse_element(t.at("image").get<std::string>(), ext));
    Automorphism fixing = Automorphism::make(ext, parse_element(t.at("fixing").get<std::string>(), ext));
    Automorphism moving = Automorphism::make(ext, parse_element(t.at("moving").get<std::string>(), ext));
    const std::size_t n = std::max<std::size_t>(ctx.options.samples / 4, 10);
    CheckReport fixes = fixed_field_check(fixing, emb, n, ctx.options.seed);
    CheckReport moves = fixed_field_check(moving, emb, n, ctx.options.seed);
    tower.expect(fixes.ok(), "a -> " + fixing.image().to_string() + " fixes the base",
                 fixes.ok() ? "" : fixes.failures.front().inputs);
    tower.expect(!moves.ok(), "a -> " + moving.image().to_string() + " moves the base");
  });
  ctx.add(tower);

  Check collapse("galois.cyclotomic_trace_collapse");
  collapse.guard("trace collapse", [&] {
    const json& rows = fx.at("trace_collapse");
    int k_max = 2;
    for (const auto& row : rows) k_max = std::max(k_max, row.at("k").get<int>());
    const auto got = cyclotomic_trace_collapse(k_max);
    for (const auto& row : rows) {
      const int k = row.at("k").get<int>();
      const TraceCollapseRow& r = got.at(static_cast<std::size_t>(k - 2));
      collapse.expect(r.ok, "k = " + std::to_string(k));
      collapse.equal(r.degree, row.at("degree").get<int>(), "k = " + std::to_string(k) + " degree");
      collapse.equal(r.image_generator.get_str(), row.at("image").get<std::string>(), "k = " + std::to_string(k) + " image");
    }
  });
  ctx.add(collapse);

  for (const auto& name : fx.at("flow_fields")) {
    Check missing("galois.flows");
    try {
      FieldPtr k = ctx.field(name);
      for (auto& r : verify_flows(k, ctx.options.samples / 2 + 1, ctx.options.seed + ++salt)) {
        r.check += "[" + name.get<std::string>() + "]";
        ctx.out.push_back(std::move(r));
      }
    } catch (const std::exception& e) {
      missing.expect(false, name.dump(), "exception", e.what());
      ctx.add(missing);
    }
  }
}

std::vector<int> mobius_sieve(std::size_t n) {
  std::vector<int> mu(n + 1, 1);
  std::vector<bool> composite(n + 1, false);
  mu[0] = 0;
  for (std::size_t p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    for (std::size_t m = p; m <= n; m += p) {
      if (m > p) composite[m] = true;
      mu[m] = -mu[m];
    }
    if (p <= n / p) {
      for (std::size_t m = p * p; m <= n; m += p * p) mu[m] = 0;
    }
  }
  return mu;
}

void dirichlet_suite(Context& ctx) {
  const json fx = read_fixture(ctx.options, "dirichlet.json");
  const std::size_t bound = ctx.options.bound ? ctx.options.bound : fx.at("bound").get<std::size_t>();

  Check values("dirichlet.fixture_values");
  values.guard("prefix", [&] {
    const json& mu = fx.at("mobius");
    const json& tau = fx.at("divisor_count");
    const std::size_t n = std::max(mu.size(), tau.size());
    IntegerSeries ones = IntegerSeries::ones(n, Mode::exact);
    IntegerSeries inv = dinvert(ones), div = dconv(ones, ones);
    for (std::size_t i = 0; i < mu.size(); ++i) values.equal(inv[i + 1], Coefficient(mu[i].get<long>()), "mu(" + std::to_string(i + 1) + ")");
    for (std::size_t i = 0; i < tau.size(); ++i) values.equal(div[i + 1], Coefficient(tau[i].get<long>()), "tau(" + std::to_string(i + 1) + ")");
  });
  ctx.add(values);

  Check mobius("dirichlet.mobius_inversion");
  mobius.guard("N = " + std::to_string(bound), [&] {
    IntegerSeries ones = IntegerSeries::ones(bound, Mode::exact);
    IntegerSeries mu = dinvert(ones);
    const std::vector<int> want = mobius_sieve(bound);
    for (std::size_t n = 1; n <= bound; ++n) mobius.equal(mu[n], Coefficient(static_cast<long>(want[n])), "n = " + std::to_string(n));
    mobius.expect(dconv(ones, mu) == IntegerSeries::delta(bound, Mode::exact), "ones * mu = delta");
  });
  ctx.add(mobius);

  Check conv("dirichlet.convolution"), inverse("dirichlet.inverse"), bridge("dirichlet.algebra_bridge"),
      mellin("dirichlet.mellin_bridge");
  Rng rng = ctx.rng(400);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_real_distribution<double> unit(-1, 1), ys(-10, 10);
  FieldPtr q = ctx.field(json("Q"));
  const std::size_t n = 120;
  for (std::size_t s = 0; s < ctx.options.samples; ++s) {
    IntegerSeries f(n, Mode::exact), g(n, Mode::exact);
    for (std::size_t i = 1; i <= 10; ++i) {
      f.set(i, Coefficient(coeff(rng)));
      g.set(i, Coefficient(coeff(rng)));
    }
    if (f[1].is_zero()) f.set(1, Coefficient(1));
    IntegerSeries c = dconv(f, g);
    IntegerSeries brute(n, Mode::exact);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; i * j <= n; ++j) brute.set(i * j, brute[i * j] + f[i] * g[j]);
    }
    const std::string in = "sample " + std::to_string(s);
    conv.expect(c == brute, in);
    conv.equal(c.truncation_defect(), f.max_support() * g.max_support() > n, in + " defect flag");
    inverse.expect(dconv(f, dinvert(f)) == IntegerSeries::delta(n, Mode::exact), in);
    bridge.equal(to_algebra(c, q), dirichlet_product(to_algebra(f, q), to_algebra(g, q)), in);

    IntegerSeries fa(100, Mode::approx), ga(100, Mode::approx);
    for (std::size_t i = 1; i <= 10; ++i) {
      fa.set(i, Coefficient(std::complex<double>(unit(rng), unit(rng))));
      ga.set(i, Coefficient(std::complex<double>(unit(rng), unit(rng))));
    }
    const IntegerSeries ca = dconv(fa, ga);
    const double y = ys(rng);
    mellin.near(std::abs(mellin_eval(ca, y) - mellin_eval(fa, y) * mellin_eval(ga, y)), 0, 1e-9,
                in + " y = " + std::to_string(y));
  }
  for (Check* c : {&conv, &inverse, &bridge, &mellin}) ctx.add(*c);
}

using SuiteFn = void (*)(Context&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> suites = {{"algebra", algebra_suite},
                                                        {"signs", signs_suite},
                                                        {"hardy", hardy_suite},
                                                        {"galois", galois_suite},
                                                        {"dirichlet", dirichlet_suite}};
  return suites;
}

}  // namespace

bool SuiteResult::ok() const {
  for (const auto& c : checks) {
    if (!c.ok()) return false;
  }
  return true;
}

json SuiteResult::to_json(const std::string& name, const SuiteOptions& options) const {
  json checks_json = json::array();
  for (const auto& c : checks) {
    json entry = cli::to_json(c);
    entry["ok"] = c.ok();
    checks_json.push_back(std::move(entry));
  }
  return {{"suite", name},       {"seed", options.seed},   {"samples", options.samples},
          {"passed", ok()},      {"checks", checks_json}};
}

std::string SuiteResult::summary(const std::string& name) const {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const auto& c : checks) {
    out << (c.ok() ? "  ok    " : "  FAIL  ") << c.check << " (" << c.samples << " samples";
    if (!c.ok()) out << ", " << c.failures.size() << (c.failures.size() == kMaxRecordedFailures ? "+" : "") << " failures";
    out << ")\n";
    if (!c.ok()) {
      const auto& f = c.failures.front();
      out << "        first failure: " << f.inputs;
      if (!f.lhs.empty() || !f.rhs.empty()) out << " | " << f.lhs << " vs " << f.rhs;
      out << '\n';
    }
    failed += !c.ok();
  }
  out << name << ": " << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  return out.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"all", "algebra", "signs", "hardy", "galois", "dirichlet"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  if (name != "all" && !registry().count(name)) throw config_error("unknown suite '" + name + "'");
  if (!std::filesystem::is_directory(options.fixtures)) {
    throw config_error("fixture directory " + options.fixtures.string() + " not found");
  }
  SuiteResult result;
  Context ctx = load_context(options, result.checks);
  for (const auto& [suite, run] : registry()) {
    if (name == "all" || name == suite) run(ctx);
  }
  return result;
}

}  // namespace nlnf::cli
