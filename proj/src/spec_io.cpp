#include "solvpot/spec_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace solvpot {

FamilySpec spec_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidSpec(std::string("spec is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw InvalidSpec("spec needs a string field 'kind'");
  if (!j.contains("params") || !j["params"].is_object()) throw InvalidSpec("spec needs an object field 'params'");
  const FamilyKind kind = kind_from_name(j["kind"].get<std::string>());
  std::map<std::string, double, std::less<>> params;
  for (const auto& [name, value] : j["params"].items()) {
    if (!value.is_number()) throw InvalidSpec("parameter '" + name + "' is not a number");
    params[name] = value.get<double>();
  }
  return FamilySpec::from_named(kind, params);
}

std::string spec_to_json(const FamilySpec& spec, int indent) {
  nlohmann::ordered_json j;
  j["kind"] = std::string(kind_name(spec.kind()));
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  const auto names = parameter_names(spec.kind());
  for (std::size_t i = 0; i < names.size(); ++i) params[std::string(names[i])] = spec.params()[i];
  j["params"] = std::move(params);
  return j.dump(indent);
}

FamilySpec read_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidSpec("cannot read spec file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return spec_from_json(ss.str());
}

}  // namespace solvpot
