#ifndef NLNF_CLI_JSON_IO_HPP
#define NLNF_CLI_JSON_IO_HPP

#include <functional>
#include <string>

#include <json.hpp>

#include "nlnf/galois.hpp"
#include "nlnf/hardy.hpp"

namespace nlnf::cli {

using json = nlohmann::json;

/// Looks up a field by its session id; throws domain_error when unknown.
using FieldResolver = std::function<FieldPtr(const std::string&)>;

json to_json(const Rational& q);
Rational rational_from_json(const json& j);

/// Coefficient arrays, constant term first.
json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

/// {"minpoly": [...], "signature": [r, s]}
json field_to_json(const FieldPtr& field);
/// Rebuilds the field and checks the recorded signature.
FieldPtr field_from_json(const json& j);

/// {"field": id, "coords": [...]}
json element_to_json(const FieldElement& a, const std::string& field_id);
FieldElement element_from_json(const json& j, const FieldResolver& resolve);

/// Exact coefficients carry "p/q" strings, approximate ones JSON numbers.
json to_json(const Coefficient& c);
Coefficient coefficient_from_json(const json& re, const json& im, Mode mode);

/// {"field": id, "mode": ..., "terms": [{"index": coords, "re": ..., "im": ...}]},
/// terms in lexicographic order of their index coordinates.
json algebra_to_json(const AlgebraElement& f, const std::string& field_id);
AlgebraElement algebra_from_json(const json& j, const FieldResolver& resolve);

json to_json(const SignVector& v);
SignVector sign_vector_from_json(const json& j, const FieldPtr& field);

/// {check, samples, failures: [{inputs, lhs, rhs, delta}]}
json to_json(const CheckReport& r);
CheckReport report_from_json(const json& j);

json to_json(const EvalResult& r);

}  // namespace nlnf::cli

#endif  // NLNF_CLI_JSON_IO_HPP
