#include "nlnf_cli/json_io.hpp"

#include "nlnf/errors.hpp"

namespace nlnf::cli {

namespace {

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw domain_error(std::string("missing JSON member '") + key + "'");
  return j.at(key);
}

std::vector<Rational> rationals_from_json(const json& j) {
  if (!j.is_array()) throw domain_error("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

json rationals_to_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

}  // namespace

json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw domain_error("rationals are encoded as \"p/q\" strings, got " + j.dump());
}

json to_json(const Polynomial& p) { return rationals_to_json(p.coeffs()); }

Polynomial polynomial_from_json(const json& j) { return Polynomial(rationals_from_json(j)); }

json field_to_json(const FieldPtr& field) {
  return {{"minpoly", to_json(field->minpoly())}, {"signature", {field->real_places(), field->complex_pairs()}}};
}

FieldPtr field_from_json(const json& j) {
  FieldPtr k = NumberField::define(polynomial_from_json(member(j, "minpoly")));
  if (j.contains("signature")) {
    const json& sig = j.at("signature");
    if (!sig.is_array() || sig.size() != 2 || sig[0] != k->real_places() || sig[1] != k->complex_pairs()) {
      throw domain_error("recorded signature " + sig.dump() + " does not match the field");
    }
  }
  return k;
}

json element_to_json(const FieldElement& a, const std::string& field_id) {
  return {{"field", field_id}, {"coords", rationals_to_json(a.coords())}};
}

FieldElement element_from_json(const json& j, const FieldResolver& resolve) {
  FieldPtr k = resolve(member(j, "field").get<std::string>());
  return k->element(rationals_from_json(member(j, "coords")));
}

json to_json(const Coefficient& c) {
  if (c.mode() == Mode::exact) return {{"re", to_json(c.exact().re)}, {"im", to_json(c.exact().im)}};
  return {{"re", c.approx().real()}, {"im", c.approx().imag()}};
}

Coefficient coefficient_from_json(const json& re, const json& im, Mode mode) {
  if (mode == Mode::exact) return Coefficient(GaussianRational(rational_from_json(re), rational_from_json(im)));
  if (!re.is_number() || !im.is_number()) throw domain_error("approximate coefficients are JSON numbers");
  return Coefficient(std::complex<double>(re.get<double>(), im.get<double>()));
}

json algebra_to_json(const AlgebraElement& f, const std::string& field_id) {
  json terms = json::array();
  for (const auto& [alpha, c] : f.terms()) {
    json t = to_json(c);
    t["index"] = rationals_to_json(alpha.coords());
    terms.push_back(std::move(t));
  }
  return {{"field", field_id}, {"mode", to_string(f.mode())}, {"terms", std::move(terms)}};
}

AlgebraElement algebra_from_json(const json& j, const FieldResolver& resolve) {
  FieldPtr k = resolve(member(j, "field").get<std::string>());
  const Mode mode = parse_mode(member(j, "mode").get<std::string>());
  AlgebraElement f = zero_element(k, mode);
  for (const auto& t : member(j, "terms")) {
    FieldElement alpha = k->element(rationals_from_json(member(t, "index")));
    if (f.terms().count(alpha)) throw domain_error("repeated index " + alpha.to_string());
    f.add_term(alpha, coefficient_from_json(member(t, "re"), member(t, "im"), mode));
  }
  return f;
}

json to_json(const SignVector& v) {
  json out = json::array();
  for (auto s : v.real) out.push_back(to_string(s));
  for (const auto& s : v.complex) out.push_back(to_string(s));
  return out;
}

SignVector sign_vector_from_json(const json& j, const FieldPtr& field) {
  const auto r = static_cast<std::size_t>(field->real_places());
  if (!j.is_array() || j.size() != r + static_cast<std::size_t>(field->complex_pairs())) {
    throw domain_error("sign vector " + j.dump() + " does not match the field signature");
  }
  SignVector v;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string s = j[i].get<std::string>();
    if (i < r) {
      v.real.push_back(parse_real_sign(s));
    } else {
      v.complex.push_back(parse_complex_sign(s));
    }
  }
  return v;
}

json to_json(const CheckReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"inputs", f.inputs}, {"lhs", f.lhs}, {"rhs", f.rhs}, {"delta", f.delta}});
  }
  return {{"check", r.check}, {"samples", r.samples}, {"failures", std::move(failures)}};
}

CheckReport report_from_json(const json& j) {
  CheckReport r;
  r.check = member(j, "check").get<std::string>();
  r.samples = member(j, "samples").get<std::size_t>();
  for (const auto& f : member(j, "failures")) {
    r.failures.push_back({f.at("inputs").get<std::string>(), f.at("lhs").get<std::string>(),
                          f.at("rhs").get<std::string>(), f.at("delta").get<double>()});
  }
  return r;
}

json to_json(const EvalResult& r) {
  return {{"re", r.value.real()}, {"im", r.value.imag()}, {"error_bound", r.error_bound}};
}

}  // namespace nlnf::cli
