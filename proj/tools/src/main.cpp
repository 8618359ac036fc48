#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "nlnf/dirichlet.hpp"
#include "nlnf/errors.hpp"
#include "nlnf_cli/expression.hpp"
#include "nlnf_cli/session.hpp"
#include "nlnf_cli/suites.hpp"

using namespace nlnf;
using namespace nlnf::cli;

namespace {

struct Globals {
  int precision = 17;
  std::uint64_t seed = 1;
  bool json = false;
  std::string session_path;
};

class App {
 public:
  explicit App(const Globals& g) : g_(g) {
    if (!g_.session_path.empty() && std::filesystem::exists(g_.session_path)) session_ = Session::load(g_.session_path);
  }

  Session& session() { return session_; }
  const Globals& globals() const { return g_; }

  void persist() {
    if (!g_.session_path.empty()) session_.save(g_.session_path);
  }

  /// A session field name, or a defining polynomial in x.
  std::pair<std::string, FieldPtr> field(const std::string& spec) {
    if (session_.fields().count(spec)) return {spec, session_.field(spec)};
    return {spec, NumberField::define(parse_polynomial(spec))};
  }

  /// "@name" refers to a session element.
  FieldElement element(const std::string& text, const FieldPtr& k) {
    if (!text.empty() && text[0] == '@') {
      const auto& e = session_.element(text.substr(1));
      return k->element(e.value.coords());
    }
    return parse_element(text, k);
  }

  AlgebraElement algebra(const std::string& text, const FieldPtr& k, Mode mode) {
    if (!text.empty() && text[0] == '@') {
      const auto& f = session_.algebra(text.substr(1));
      json j = algebra_to_json(f.value, "k");
      return algebra_from_json(j, [&](const std::string&) { return k; }).in_mode(mode);
    }
    return parse_algebra(text, k, mode);
  }

  std::string number(double x) const {
    std::ostringstream out;
    out << std::setprecision(g_.precision) << x;
    return out.str();
  }

  std::string complex_text(std::complex<double> z) const { return number(z.real()) + (z.imag() < 0 ? " - " : " + ") + number(std::abs(z.imag())) + "i"; }

  void emit(const json& j, const std::string& text) const {
    if (g_.json) {
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << text << (text.empty() || text.back() == '\n' ? "" : "\n");
    }
  }

 private:
  Globals g_;
  Session session_;
};

json kinf_to_json(const KInfVector& v) {
  json out = json::array();
  for (double x : v.real) out.push_back(x);
  for (const auto& z : v.complex) out.push_back({z.real(), z.imag()});
  return out;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used == 0 || used != item.size()) throw parse_error("bad number '" + item + "'", 0, "decimal number");
    out.push_back(v);
  }
  return out;
}

/// Real coordinates, then (re, im) per complex pair.
KInfVector kinf_from_list(const FieldPtr& k, const std::string& text) {
  const std::vector<double> v = parse_doubles(text);
  const auto need = static_cast<std::size_t>(k->real_places() + 2 * k->complex_pairs());
  if (v.size() != need) {
    throw domain_error("expected " + std::to_string(need) + " numbers: real places, then re,im per complex pair");
  }
  KInfVector z;
  std::size_t i = 0;
  for (int r = 0; r < k->real_places(); ++r) z.real.push_back(v[i++]);
  for (int s = 0; s < k->complex_pairs(); ++s, i += 2) z.complex.emplace_back(v[i], v[i + 1]);
  return z;
}

// CSV rows n,re,im; lines starting with a letter are headers.
IntegerSeries read_series(const std::string& path, std::size_t bound, Mode mode) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot read " + path);
  IntegerSeries s(bound, mode);
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || std::isalpha(static_cast<unsigned char>(line[0]))) continue;
    std::stringstream fields(line);
    std::string n, re, im = "0";
    if (!std::getline(fields, n, ',') || !std::getline(fields, re, ',')) {
      throw parse_error(path + ": row " + std::to_string(row) + " is not n,re,im", row, "n,re,im");
    }
    std::getline(fields, im, ',');
    const std::size_t index = std::stoul(n);
    if (mode == Mode::exact) {
      s.set(index, Coefficient(GaussianRational(parse_rational(re), parse_rational(im))));
    } else {
      s.set(index, Coefficient(std::complex<double>(parse_doubles(re).at(0), parse_doubles(im).at(0))));
    }
  }
  return s;
}

void write_series(std::ostream& out, const IntegerSeries& s, const App& app) {
  out << "n,re,im\n";
  for (std::size_t n = 1; n <= s.bound(); ++n) {
    const Coefficient& c = s[n];
    if (c.is_zero()) continue;
    if (c.mode() == Mode::exact) {
      out << n << ',' << to_string(c.exact().re) << ',' << to_string(c.exact().im) << '\n';
    } else {
      out << n << ',' << app.number(c.approx().real()) << ',' << app.number(c.approx().imag()) << '\n';
    }
  }
}

json place_json(const FieldPtr& k) {
  json places = json::array();
  const KInfVector g = numeric_embedding(k->generator());
  for (double x : g.real) places.push_back({{"kind", "real"}, {"root", x}});
  for (const auto& z : g.complex) places.push_back({{"kind", "complex"}, {"root", {z.real(), z.imag()}}});
  return places;
}

struct GroupArgs {
  std::string field;
  std::string family = "quadratic";
  unsigned n = 0;
  std::vector<std::string> images;
  std::string name;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--field", field, "Field name or defining polynomial")->required();
    cmd->add_option("--family", family, "quadratic, cyclotomic or explicit")
        ->check(CLI::IsMember({"quadratic", "cyclotomic", "explicit"}));
    cmd->add_option("--n", n, "Cyclotomic conductor");
    cmd->add_option("--image", images, "Generator image (explicit family), repeatable");
  }

  GroupFamily family_for(App& app, const FieldPtr& k) const {
    if (family == "cyclotomic") return GroupFamily::cyclotomic(n);
    if (family == "explicit") {
      std::vector<FieldElement> out;
      for (const auto& s : images) out.push_back(app.element(s, k));
      return GroupFamily::explicit_images(std::move(out));
    }
    return GroupFamily::quadratic();
  }
};

int run_verify(const Globals& g, const std::string& suite, std::size_t samples, const std::string& fixtures,
               std::size_t bound) {
  SuiteOptions options;
  options.seed = g.seed;
  options.samples = samples;
  options.fixtures = fixtures;
  options.bound = bound;
  try {
    SuiteResult r = run_suite(suite, options);
    std::cout << r.to_json(suite, options).dump(2) << '\n';
    std::cerr << r.summary(suite);
    return r.exit_code();
  } catch (const config_error& e) {
    std::cout << json{{"suite", suite}, {"error", e.what()}}.dump(2) << '\n';
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  }
}

std::string default_fixtures() {
  if (const char* env = std::getenv("NLNF_FIXTURES")) return env;
#ifdef NLNF_FIXTURES_DIR
  return NLNF_FIXTURES_DIR;
#else
  return "fixtures";
#endif
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Exact number fields, their field algebras, and the sign-graded Dirichlet product"};
  cli.require_subcommand(1);
  cli.fallthrough();
  Globals g;
  cli.add_option("--precision", g.precision, "Significant digits in text output")->check(CLI::Range(1, 40));
  cli.add_option("--seed", g.seed, "Seed for sampled checks");
  cli.add_flag("--json", g.json, "Machine-readable output");
  cli.add_option("--session", g.session_path, "Session file, loaded at start and updated by naming commands");

  int code = 0;
  std::function<void(App&)> action;
  auto on = [&](CLI::App* cmd, std::function<void(App&)> body) { cmd->callback([&action, body] { action = body; }); };

  // field
  auto* field = cli.add_subcommand("field", "Define and list number fields")->require_subcommand(1);
  std::string new_name, new_poly;
  auto* field_new = field->add_subcommand("new", "Define Q[x]/(p) and store it in the session");
  field_new->add_option("name", new_name)->required();
  field_new->add_option("minpoly", new_poly, "Irreducible polynomial in x, e.g. x^2-2")->required();
  on(field_new, [&](App& app) {
    FieldPtr k = NumberField::define(parse_polynomial(new_poly));
    app.session().add_field(new_name, k);
    app.persist();
    json j = field_to_json(k);
    j["name"] = new_name;
    j["places"] = place_json(k);
    app.emit(j, new_name + " = Q[x]/(" + k->minpoly().to_string() + "), degree " + std::to_string(k->degree()) +
                    ", signature (" + std::to_string(k->real_places()) + ", " + std::to_string(k->complex_pairs()) + ")");
  });
  on(field->add_subcommand("list", "List session fields"), [&](App& app) {
    json j = json::object();
    std::string text;
    for (const auto& [name, k] : app.session().fields()) {
      j[name] = field_to_json(k);
      text += name + "  " + k->minpoly().to_string() + "\n";
    }
    app.emit(j, text.empty() ? "no fields" : text);
  });

  // elem
  auto* elem = cli.add_subcommand("elem", "Field element operations")->require_subcommand(1);
  std::string elem_field, elem_text, elem_name;
  auto elem_cmd = [&](const char* name, const char* help) {
    auto* cmd = elem->add_subcommand(name, help);
    cmd->add_option("element", elem_text, "Expression in a, or @name")->required();
    cmd->add_option("--field", elem_field, "Field name or defining polynomial")->required();
    return cmd;
  };
  auto* elem_eval = elem_cmd("eval", "Normal form and numeric embeddings");
  elem_eval->add_option("--name", elem_name, "Store the result in the session");
  on(elem_eval, [&](App& app) {
    auto [id, k] = app.field(elem_field);
    FieldElement a = app.element(elem_text, k);
    if (!elem_name.empty()) {
      if (!app.session().fields().count(id)) app.session().add_field(id, k);
      app.session().add_element(elem_name, id, app.session().field(id)->element(a.coords()));
      app.persist();
    }
    json j = element_to_json(a, id);
    j["text"] = a.to_string();
    j["embedding"] = kinf_to_json(numeric_embedding(a));
    std::string text = a.to_string();
    const KInfVector v = numeric_embedding(a);
    for (double x : v.real) text += "\n  real place: " + app.number(x);
    for (const auto& z : v.complex) text += "\n  complex place: " + app.complex_text(z);
    app.emit(j, text);
  });
  on(elem_cmd("trace", "Absolute trace"), [&](App& app) {
    auto [id, k] = app.field(elem_field);
    const Rational t = absolute_trace(app.element(elem_text, k));
    app.emit({{"trace", to_json(t)}}, to_string(t));
  });
  on(elem_cmd("minpoly", "Minimal polynomial over Q"), [&](App& app) {
    auto [id, k] = app.field(elem_field);
    const Polynomial p = minimal_polynomial_of(app.element(elem_text, k));
    app.emit({{"minpoly", to_json(p)}}, p.to_string());
  });
  on(elem_cmd("sign", "Certified sign vector"), [&](App& app) {
    auto [id, k] = app.field(elem_field);
    const SignVector v = sign_of(app.element(elem_text, k));
    app.emit({{"sign", to_json(v)}}, to_string(v));
  });
  on(elem_cmd("cone", "Positive-cone membership"), [&](App& app) {
    auto [id, k] = app.field(elem_field);
    const bool in = in_positive_cone(app.element(elem_text, k));
    app.emit({{"in_cone", in}}, in ? "in the positive cone" : "not in the positive cone");
  });

  // alg
  auto* alg = cli.add_subcommand("alg", "Field algebra operations")->require_subcommand(1);
  std::string alg_field, alg_f, alg_g, alg_mode = "exact", alg_name;
  auto alg_cmd = [&](const char* name, const char* help, bool binary) {
    auto* cmd = alg->add_subcommand(name, help);
    cmd->add_option("f", alg_f, "Algebra expression, e.g. 2*z^{0}+z^{a}, or @name")->required();
    if (binary) cmd->add_option("g", alg_g, "Second operand")->required();
    cmd->add_option("--field", alg_field, "Field name or defining polynomial")->required();
    cmd->add_option("--mode", alg_mode, "exact or approx")->check(CLI::IsMember({"exact", "approx"}));
    cmd->add_option("--name", alg_name, "Store the result in the session");
    return cmd;
  };
  auto store_alg = [&](App& app, const std::string& id, const FieldPtr& k, const AlgebraElement& f) {
    if (alg_name.empty()) return;
    if (!app.session().fields().count(id)) app.session().add_field(id, k);
    json j = algebra_to_json(f, id);
    app.session().add_algebra(alg_name, id, algebra_from_json(j, app.session().resolver()));
    app.persist();
  };
  auto binary_alg = [&](AlgebraElement (*op)(const AlgebraElement&, const AlgebraElement&)) {
    return [&, op](App& app) {
      auto [id, k] = app.field(alg_field);
      const Mode mode = parse_mode(alg_mode);
      AlgebraElement r = op(app.algebra(alg_f, k, mode), app.algebra(alg_g, k, mode));
      store_alg(app, id, k, r);
      app.emit(algebra_to_json(r, id), r.to_string());
    };
  };
  on(alg_cmd("cauchy", "Cauchy product f (+) g", true), binary_alg(cauchy_product));
  on(alg_cmd("dirichlet", "Dirichlet product f (x) g", true), binary_alg(dirichlet_product));
  on(alg_cmd("trace", "Coefficient sum T(f)", false), [&](App& app) {
    auto [id, k] = app.field(alg_field);
    const Coefficient t = trace_functional(app.algebra(alg_f, k, parse_mode(alg_mode)));
    app.emit(to_json(t), to_string(t));
  });
  on(alg_cmd("grade", "Sign-graded components", false), [&](App& app) {
    auto [id, k] = app.field(alg_field);
    const GradedDecomposition d = grade(app.algebra(alg_f, k, parse_mode(alg_mode)));
    json components = json::array();
    std::string text = "constant: " + to_string(d.constant);
    for (const auto& [v, part] : d.components) {
      components.push_back({{"sign", to_json(v)}, {"terms", algebra_to_json(part, id)["terms"]}});
      text += "\n" + to_string(v) + ": " + part.to_string();
    }
    app.emit({{"constant", to_json(d.constant)}, {"components", components}}, text);
  });
  on(alg_cmd("proj", "Trace-normalized projective representative", false), [&](App& app) {
    auto [id, k] = app.field(alg_field);
    const AlgebraElement r = projectivize(app.algebra(alg_f, k, parse_mode(alg_mode))).representative();
    store_alg(app, id, k, r);
    app.emit(algebra_to_json(r, id), r.to_string());
  });

  // galois
  auto* galois = cli.add_subcommand("galois", "Automorphisms and flows")->require_subcommand(1);
  GroupArgs group_args;
  auto* galois_group = galois->add_subcommand("group", "Group of a family with its table");
  group_args.add_to(galois_group);
  galois_group->add_option("--name", group_args.name, "Store the group in the session");
  on(galois_group, [&](App& app) {
    auto [id, k] = app.field(group_args.field);
    const GroupFamily family = group_args.family_for(app, k);
    const GaloisGroup grp = group_from_family(k, family);
    if (!group_args.name.empty()) {
      if (!app.session().fields().count(id)) app.session().add_field(id, k);
      app.session().add_group(group_args.name, id, family_from_json(family_to_json(family, id), app.session().resolver()));
      app.persist();
    }
    json elements = json::array();
    std::string text = "order " + std::to_string(grp.order()) + ", exponent " + std::to_string(grp.exponent()) +
                       (grp.verify_table() ? ", table verified" : ", table INVALID");
    for (const auto& s : grp.elements) {
      elements.push_back({{"image", element_to_json(s.image(), id)["coords"]}, {"text", s.image().to_string()}, {"order", s.order()}});
      text += "\n  a -> " + s.image().to_string() + "  (order " + std::to_string(s.order()) + ")";
    }
    app.emit({{"order", grp.order()}, {"exponent", grp.exponent()}, {"table_ok", grp.verify_table()},
              {"elements", elements}, {"table", grp.table}},
             text);
  });
  std::size_t galois_samples = 100;
  auto* galois_verify = galois->add_subcommand("verify", "Check each automorphism on the field algebra");
  group_args.add_to(galois_verify);
  galois_verify->add_option("--samples", galois_samples);
  on(galois_verify, [&](App& app) {
    auto [id, k] = app.field(group_args.field);
    const GaloisGroup grp = group_from_family(k, group_args.family_for(app, k));
    json reports = json::array();
    std::string text;
    bool ok = true;
    for (const auto& s : grp.elements) {
      AutomorphismReport r = verify_nonlinear_automorphism(s, galois_samples, app.globals().seed);
      json j = to_json(r.report);
      j["automorphism"] = s.image().to_string();
      json iota = json::array();
      for (const auto& [from, to] : r.iota) iota.push_back({to_json(from), to_json(to)});
      j["iota"] = iota;
      reports.push_back(j);
      ok = ok && r.report.ok();
      text += "a -> " + s.image().to_string() + ": " + (r.report.ok() ? "ok" : "FAIL") + " (" +
              std::to_string(r.report.samples) + " samples)\n";
    }
    app.emit(reports, text);
    code = ok ? 0 : 1;
  });
  int k_max = 5;
  auto* collapse = galois->add_subcommand("trace-collapse", "Traces of powers of 2^k-th roots of unity");
  collapse->add_option("--k-max", k_max)->check(CLI::Range(2, 6));
  on(collapse, [&](App& app) {
    json rows = json::array();
    std::string text;
    bool ok = true;
    for (const auto& r : cyclotomic_trace_collapse(k_max)) {
      json traces = json::array();
      for (const auto& t : r.traces) traces.push_back(to_json(t));
      rows.push_back({{"k", r.k}, {"degree", r.degree}, {"traces", traces}, {"image", r.image_generator.get_str()}, {"ok", r.ok}});
      text += "k = " + std::to_string(r.k) + ": degree " + std::to_string(r.degree) + ", trace image (" +
              r.image_generator.get_str() + ")Z" + (r.ok ? "" : "  FAIL") + "\n";
      ok = ok && r.ok;
    }
    app.emit(rows, text);
    code = ok ? 0 : 1;
  });
  std::string flow_field, flow_f, flow_kind = "phi", flow_r;
  auto* flow = galois->add_subcommand("flow", "Apply a flow to an algebra element");
  flow->add_option("f", flow_f)->required();
  flow->add_option("--field", flow_field)->required();
  flow->add_option("--kind", flow_kind, "phi or psi")->check(CLI::IsMember({"phi", "psi"}));
  flow->add_option("--r", flow_r, "Real coordinates, then re,im per complex pair")->required();
  on(flow, [&](App& app) {
    auto [id, k] = app.field(flow_field);
    const KInfVector r = kinf_from_list(k, flow_r);
    const AlgebraElement f = app.algebra(flow_f, k, Mode::approx);
    const AlgebraElement out = flow_kind == "phi" ? flow_phi(r, f) : flow_psi(r, f);
    app.emit(algebra_to_json(out, id), out.to_string());
  });

  // dirichlet
  auto* dirichlet = cli.add_subcommand("dirichlet", "Series over the positive integers (CSV n,re,im)")->require_subcommand(1);
  std::vector<std::string> inputs;
  std::size_t bound = 100;
  std::string out_path, series_mode = "exact";
  std::vector<double> ys;
  auto series_cmd = [&](const char* name, const char* help, std::size_t arity) {
    auto* cmd = dirichlet->add_subcommand(name, help);
    cmd->add_option("--in", inputs, "Input CSV")->required()->expected(static_cast<int>(arity))->take_all();
    cmd->add_option("--N", bound, "Series bound")->check(CLI::PositiveNumber);
    cmd->add_option("--mode", series_mode, "exact or approx")->check(CLI::IsMember({"exact", "approx"}));
    return cmd;
  };
  auto write_out = [&](App& app, const IntegerSeries& s) {
    if (out_path.empty()) {
      write_series(std::cout, s, app);
    } else {
      std::ofstream out(out_path);
      if (!out) throw domain_error("cannot write " + out_path);
      write_series(out, s, app);
    }
    if (s.truncation_defect()) std::cerr << "note: products beyond N were dropped\n";
  };
  auto* conv = series_cmd("conv", "Dirichlet convolution", 2);
  conv->add_option("--out", out_path);
  on(conv, [&](App& app) {
    if (inputs.size() != 2) throw domain_error("conv needs two --in files");
    const Mode mode = parse_mode(series_mode);
    write_out(app, dconv(read_series(inputs[0], bound, mode), read_series(inputs[1], bound, mode)));
  });
  auto* invert = series_cmd("invert", "Dirichlet inverse", 1);
  invert->add_option("--out", out_path);
  on(invert, [&](App& app) { write_out(app, dinvert(read_series(inputs.at(0), bound, parse_mode(series_mode)))); });
  auto* mellin = series_cmd("mellin", "Evaluate sum a_n exp(-2 pi i y log n)", 1);
  mellin->add_option("--y", ys, "Evaluation points")->required();
  on(mellin, [&](App& app) {
    const IntegerSeries s = read_series(inputs.at(0), bound, parse_mode(series_mode));
    json rows = json::array();
    std::string text = "y,re,im";
    for (double y : ys) {
      const std::complex<double> v = mellin_eval(s, y);
      rows.push_back({{"y", y}, {"re", v.real()}, {"im", v.imag()}});
      text += "\n" + app.number(y) + "," + app.number(v.real()) + "," + app.number(v.imag());
    }
    app.emit(rows, text);
  });

  // hardy
  auto* hardy = cli.add_subcommand("hardy", "Hyperbolized evaluation and torus inner products")->require_subcommand(1);
  std::string hardy_field, hardy_f, hardy_g, hardy_at;
  double height = 1;
  int grid = 32;
  auto* hardy_eval = hardy->add_subcommand("eval", "Evaluate above a boundary point");
  hardy_eval->add_option("f", hardy_f)->required();
  hardy_eval->add_option("--field", hardy_field)->required();
  hardy_eval->add_option("--at", hardy_at, "Boundary point: real coordinates, then re,im per complex pair")->required();
  hardy_eval->add_option("--height", height, "Imaginary height t (and s)")->check(CLI::PositiveNumber);
  on(hardy_eval, [&](App& app) {
    auto [id, k] = app.field(hardy_field);
    const AlgebraElement f = app.algebra(hardy_f, k, Mode::approx);
    const KInfVector x = kinf_from_list(k, hardy_at);
    const EvalResult hyper = series_eval_hyper(f, HyperPoint::over(x, height));
    const EvalResult edge = boundary_eval(f, x);
    app.emit({{"value", to_json(hyper)}, {"boundary", to_json(edge)}, {"hardy", hardy_membership(f)}},
             "value " + app.complex_text(hyper.value) + " (error <= " + app.number(hyper.error_bound) + ")\nboundary " +
                 app.complex_text(edge.value));
  });
  auto* hardy_norm = hardy->add_subcommand("norm", "l2 norm of the coefficients");
  hardy_norm->add_option("f", hardy_f)->required();
  hardy_norm->add_option("--field", hardy_field)->required();
  on(hardy_norm, [&](App& app) {
    auto [id, k] = app.field(hardy_field);
    const double n = l2_norm(app.algebra(hardy_f, k, Mode::approx));
    app.emit({{"l2_norm", n}}, app.number(n));
  });
  auto* hardy_ortho = hardy->add_subcommand("ortho", "Torus inner product <f, g>");
  hardy_ortho->add_option("f", hardy_f)->required();
  hardy_ortho->add_option("g", hardy_g)->required();
  hardy_ortho->add_option("--field", hardy_field)->required();
  hardy_ortho->add_option("--grid", grid, "Points per dimension")->check(CLI::PositiveNumber);
  on(hardy_ortho, [&](App& app) {
    auto [id, k] = app.field(hardy_field);
    const EvalResult r =
        torus_inner_product(app.algebra(hardy_f, k, Mode::approx), app.algebra(hardy_g, k, Mode::approx), grid);
    app.emit(to_json(r), app.complex_text(r.value));
  });

  // verify
  auto* verify = cli.add_subcommand("verify", "Run a fixture-driven verification suite");
  std::string suite, fixtures = default_fixtures();
  std::size_t samples = 200, suite_bound = 0;
  verify->add_option("suite", suite, "all, algebra, signs, hardy, galois or dirichlet")->required();
  verify->add_option("--samples", samples, "Random samples per property");
  verify->add_option("--fixtures", fixtures, "Fixture directory");
  verify->add_option("--N", suite_bound, "Series bound for the dirichlet suite");
  bool verify_run = false;
  verify->callback([&] { verify_run = true; });

  // session
  auto* session = cli.add_subcommand("session", "Persist named objects")->require_subcommand(1);
  std::string session_file;
  auto* session_save = session->add_subcommand("save", "Write the current session to a file");
  session_save->add_option("path", session_file)->required();
  on(session_save, [&](App& app) {
    app.session().save(session_file);
    app.emit({{"saved", session_file}}, "saved " + session_file);
  });
  auto* session_load = session->add_subcommand("load", "Validate a session file and make it current");
  session_load->add_option("path", session_file)->required();
  on(session_load, [&](App& app) {
    app.session() = Session::load(session_file);
    app.persist();
    const json j = app.session().to_json();
    std::string text;
    for (const auto& kind : {"fields", "elements", "algebra", "groups"}) {
      text += std::string(kind) + ": " + std::to_string(j.at(kind).size()) + "\n";
    }
    app.emit(j, text);
  });

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return cli.exit(e);
  }

  if (verify_run) return run_verify(g, suite, samples, fixtures, suite_bound);
  try {
    App app(g);
    if (action) action(app);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return code;
}
