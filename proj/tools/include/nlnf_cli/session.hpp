#ifndef NLNF_CLI_SESSION_HPP
#define NLNF_CLI_SESSION_HPP

#include <filesystem>
#include <map>
#include <string>

#include "nlnf_cli/json_io.hpp"

namespace nlnf::cli {

template <class T>
struct Named {
  std::string field;
  T value;
};

/// Named objects shared between commands. Elements, algebra elements and
/// groups refer to their field by name.
class Session {
 public:
  void add_field(const std::string& name, FieldPtr field);
  void add_element(const std::string& name, const std::string& field, FieldElement value);
  void add_algebra(const std::string& name, const std::string& field, AlgebraElement value);
  void add_group(const std::string& name, const std::string& field, GroupFamily family);

  /// Throw domain_error for unknown names.
  FieldPtr field(const std::string& name) const;
  const Named<FieldElement>& element(const std::string& name) const;
  const Named<AlgebraElement>& algebra(const std::string& name) const;
  const Named<GroupFamily>& group(const std::string& name) const;

  const std::map<std::string, FieldPtr>& fields() const { return fields_; }
  FieldResolver resolver() const;

  json to_json() const;
  /// Rejects duplicate names and references to missing fields.
  static Session from_json(const json& j);

  void save(const std::filesystem::path& path) const;
  static Session load(const std::filesystem::path& path);

 private:
  void claim(const std::string& kind, const std::string& name, bool taken) const;

  std::map<std::string, FieldPtr> fields_;
  std::map<std::string, Named<FieldElement>> elements_;
  std::map<std::string, Named<AlgebraElement>> algebra_;
  std::map<std::string, Named<GroupFamily>> groups_;
};

json family_to_json(const GroupFamily& family, const std::string& field_id);
GroupFamily family_from_json(const json& j, const FieldResolver& resolve);

}  // namespace nlnf::cli

#endif  // NLNF_CLI_SESSION_HPP
