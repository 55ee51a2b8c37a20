#include <fstream>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bwd/error.hpp"
#include "bwd/harness.hpp"

namespace bwd {

namespace {

using Json = nlohmann::json;

template <typename T>
T unsigned_field(const Json& value, const std::string& key) {
  if (!value.is_number_unsigned()) {
    throw ConfigError("config key '" + key + "' must be a non-negative integer");
  }
  const auto raw = value.get<std::uint64_t>();
  if (raw > std::numeric_limits<T>::max()) {
    throw ConfigError("config key '" + key + "' is out of range");
  }
  return static_cast<T>(raw);
}

std::string string_field(const Json& value, const std::string& key) {
  if (!value.is_string()) throw ConfigError("config key '" + key + "' must be a string");
  return value.get<std::string>();
}

std::vector<std::string> string_list(const Json& value, const std::string& key) {
  if (!value.is_array()) throw ConfigError("config key '" + key + "' must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : value) out.push_back(string_field(item, key));
  return out;
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");

  ExperimentConfig cfg;
  for (const auto& [key, value] : doc.items()) {
    if (key == "p") {
      cfg.p = unsigned_field<std::uint32_t>(value, key);
    } else if (key == "n") {
      cfg.n = unsigned_field<std::uint32_t>(value, key);
    } else if (key == "sets") {
      cfg.sets = string_list(value, key);
    } else if (key == "function") {
      cfg.function = string_field(value, key);
    } else if (key == "chi") {
      cfg.chi = unsigned_field<std::uint64_t>(value, key);
    } else if (key == "psi") {
      cfg.psi = unsigned_field<std::uint32_t>(value, key);
    } else if (key == "suites") {
      cfg.suites = string_list(value, key);
    } else if (key == "trials") {
      cfg.trials = unsigned_field<std::uint32_t>(value, key);
    } else if (key == "seed") {
      cfg.seed = unsigned_field<std::uint64_t>(value, key);
    } else if (key == "output") {
      cfg.output = string_field(value, key);
    } else if (key == "threshold_fraction") {
      if (!value.is_number() || value.get<double>() <= 0) {
        throw ConfigError("config key 'threshold_fraction' must be a positive number");
      }
      cfg.threshold_fraction = value.get<double>();
    } else if (key == "lambdas") {
      if (!value.is_array()) throw ConfigError("config key 'lambdas' must be an array");
      cfg.lambdas.clear();
      for (const auto& item : value) cfg.lambdas.push_back(unsigned_field<std::uint32_t>(item, key));
    } else if (key == "record_runtime") {
      if (!value.is_boolean()) throw ConfigError("config key 'record_runtime' must be a boolean");
      cfg.record_runtime = value.get<bool>();
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  for (const auto& name : cfg.suites) {
    bool known = false;
    for (const auto& s : suite_names()) known = known || s == name;
    if (!known) throw ConfigError("config key 'suites': unknown suite '" + name + "'");
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

}  // namespace bwd
