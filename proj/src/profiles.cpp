#include "ec3/profiles.hpp"

#include <fstream>

#include <json.hpp>

#include "ec3/errors.hpp"
#include "ec3/profiles_data.hpp"

namespace ec3 {

namespace {

nlohmann::json load_profiles(const std::string& path) {
  if (path.empty()) return nlohmann::json::parse(detail::kProfilesJson);
  std::ifstream in(path);
  if (!in) throw IoError("profiles: cannot open " + path);
  nlohmann::json parsed;
  try {
    in >> parsed;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("profiles: " + path + ": " + e.what());
  }
  return parsed;
}

ObjectiveParams from_json(const nlohmann::json& entry) {
  ObjectiveParams params;
  params.alpha = entry.at("alpha").get<double>();
  params.beta = entry.at("beta").get<double>();
  params.gamma = entry.at("gamma").get<double>();
  params.delta = entry.at("delta").get<double>();
  params.validate();
  return params;
}

}  // namespace

ObjectiveParams profile_params(const std::string& name, const std::string& profiles_path) {
  const nlohmann::json table = load_profiles(profiles_path);
  if (name == "default") return from_json(table.at("default"));
  const auto& profiles = table.at("profiles");
  if (!profiles.contains(name)) {
    std::string known = "default";
    for (const auto& [key, value] : profiles.items()) {
      (void)value;
      known += ", " + key;
    }
    throw ValidationError("unknown profile '" + name + "' (known: " + known + ")");
  }
  return from_json(profiles.at(name));
}

ObjectiveParams default_params() { return profile_params("default"); }

std::vector<std::string> profile_names(const std::string& profiles_path) {
  const nlohmann::json table = load_profiles(profiles_path);
  std::vector<std::string> names{"default"};
  for (const auto& [key, value] : table.at("profiles").items()) {
    (void)value;
    names.push_back(key);
  }
  return names;
}

}  // namespace ec3
