#include "nlnf_cli/session.hpp"

#include <fstream>

#include "nlnf/errors.hpp"

namespace nlnf::cli {

namespace {

template <class Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& kind, const std::string& name) {
  auto it = m.find(name);
  if (it == m.end()) throw domain_error("unknown " + kind + " '" + name + "'");
  return it->second;
}

}  // namespace

void Session::claim(const std::string& kind, const std::string& name, bool taken) const {
  if (name.empty()) throw domain_error(kind + " names must be nonempty");
  if (taken) throw domain_error(kind + " '" + name + "' already exists");
}

void Session::add_field(const std::string& name, FieldPtr field) {
  claim("field", name, fields_.count(name) != 0);
  fields_.emplace(name, std::move(field));
}

void Session::add_element(const std::string& name, const std::string& field, FieldElement value) {
  claim("element", name, elements_.count(name) != 0);
  if (value.field() != this->field(field)) throw domain_error("element '" + name + "' is not in field '" + field + "'");
  elements_.emplace(name, Named<FieldElement>{field, std::move(value)});
}

void Session::add_algebra(const std::string& name, const std::string& field, AlgebraElement value) {
  claim("algebra element", name, algebra_.count(name) != 0);
  if (value.field() != this->field(field)) throw domain_error("algebra element '" + name + "' is not over field '" + field + "'");
  algebra_.emplace(name, Named<AlgebraElement>{field, std::move(value)});
}

void Session::add_group(const std::string& name, const std::string& field, GroupFamily family) {
  claim("group", name, groups_.count(name) != 0);
  group_from_family(this->field(field), family);
  groups_.emplace(name, Named<GroupFamily>{field, std::move(family)});
}

FieldPtr Session::field(const std::string& name) const { return lookup(fields_, "field", name); }

const Named<FieldElement>& Session::element(const std::string& name) const {
  return lookup(elements_, "element", name);
}

const Named<AlgebraElement>& Session::algebra(const std::string& name) const {
  return lookup(algebra_, "algebra element", name);
}

const Named<GroupFamily>& Session::group(const std::string& name) const { return lookup(groups_, "group", name); }

FieldResolver Session::resolver() const {
  return [this](const std::string& name) { return field(name); };
}

json family_to_json(const GroupFamily& family, const std::string& field_id) {
  switch (family.kind) {
    case GroupFamily::Kind::quadratic:
      return {{"field", field_id}, {"family", "quadratic"}};
    case GroupFamily::Kind::cyclotomic:
      return {{"field", field_id}, {"family", "cyclotomic"}, {"n", family.n}};
    case GroupFamily::Kind::explicit_images: {
      json images = json::array();
      for (const auto& a : family.images) images.push_back(element_to_json(a, field_id)["coords"]);
      return {{"field", field_id}, {"family", "explicit"}, {"images", std::move(images)}};
    }
  }
  throw domain_error("unknown group family");
}

GroupFamily family_from_json(const json& j, const FieldResolver& resolve) {
  const std::string kind = j.at("family").get<std::string>();
  if (kind == "quadratic") return GroupFamily::quadratic();
  if (kind == "cyclotomic") return GroupFamily::cyclotomic(j.at("n").get<unsigned>());
  if (kind == "explicit") {
    std::vector<FieldElement> images;
    for (const auto& coords : j.at("images")) {
      images.push_back(element_from_json({{"field", j.at("field")}, {"coords", coords}}, resolve));
    }
    return GroupFamily::explicit_images(std::move(images));
  }
  throw domain_error("unknown group family '" + kind + "'");
}

json Session::to_json() const {
  json out = {{"fields", json::object()}, {"elements", json::object()}, {"algebra", json::object()},
              {"groups", json::object()}};
  for (const auto& [name, k] : fields_) out["fields"][name] = field_to_json(k);
  for (const auto& [name, e] : elements_) out["elements"][name] = element_to_json(e.value, e.field);
  for (const auto& [name, f] : algebra_) out["algebra"][name] = algebra_to_json(f.value, f.field);
  for (const auto& [name, g] : groups_) out["groups"][name] = family_to_json(g.value, g.field);
  return out;
}

Session Session::from_json(const json& j) {
  if (!j.is_object()) throw domain_error("a session is a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (key != "fields" && key != "elements" && key != "algebra" && key != "groups") {
      throw domain_error("unexpected session member '" + key + "'");
    }
  }
  Session s;
  const FieldResolver resolve = s.resolver();
  static const json empty = json::object();
  auto section = [&](const char* key) -> const json& { return j.contains(key) ? j.at(key) : empty; };
  for (const auto& [name, f] : section("fields").items()) s.add_field(name, field_from_json(f));
  for (const auto& [name, e] : section("elements").items()) {
    s.add_element(name, e.at("field").get<std::string>(), element_from_json(e, resolve));
  }
  for (const auto& [name, f] : section("algebra").items()) {
    s.add_algebra(name, f.at("field").get<std::string>(), algebra_from_json(f, resolve));
  }
  for (const auto& [name, g] : section("groups").items()) {
    s.add_group(name, g.at("field").get<std::string>(), family_from_json(g, resolve));
  }
  return s;
}

void Session::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw domain_error("cannot write session file " + path.string());
  out << to_json().dump(2) << '\n';
}

Session Session::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot read session file " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw domain_error("session file " + path.string() + " is not valid JSON: " + e.what());
  }
  return from_json(j);
}

}  // namespace nlnf::cli
