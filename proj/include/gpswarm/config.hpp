#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gpswarm/harness.hpp"
#include "gpswarm/toml_lite.hpp"

namespace gpswarm {

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// One experiment manifest; TOML and JSON files map onto the same struct.
struct ExperimentConfig {
  std::vector<std::string> functions;
  std::vector<std::string> variants;
  int runs = 20;
  int dim = 10;
  int budget_per_dim = 100;
  int particles = 50;
  std::uint64_t base_seed = 20240817;
  int refit_every = 5;
  int fit_restarts = 10;
  std::size_t memory_cap = 0;  // 0 = 25 * particles
  double rho = 1.15;
  long long record_every = 0;
  int parallelism = 0;  // 0 = hardware concurrency
  std::string reference;  // variant for the significance table; empty = skip
  bool shift = true;
  bool rotate = true;
  bool pooled_variance = false;
  std::map<std::string, std::pair<double, double>> domains;  // per-function box override
};

inline ExperimentConfig default_desk_config() {
  ExperimentConfig c;
  c.functions = {"sphere", "ackley", "rastrigin", "griewank", "rosenbrock",
                 "expanded_schaffer_f6"};
  c.variants = {"spso2011", "a3", "b", "c1"};
  c.reference = "a3";
  c.domains = {{"ackley", {-5.0, 5.0}},
               {"rastrigin", {-5.0, 5.0}},
               {"rosenbrock", {-5.0, 5.0}},
               {"griewank", {-600.0, 600.0}}};
  return c;
}

namespace config_detail {

inline ExperimentConfig from_toml(const std::string& text) {
  toml::Table t = toml::parse(text);
  ExperimentConfig c;
  c.functions.clear();
  auto get_int = [&](const char* key, auto& dst) {
    auto it = t.find(key);
    if (it == t.end()) return;
    if (!it->second.is_int()) throw ConfigError(std::string("field '") + key + "' must be an integer");
    dst = static_cast<std::decay_t<decltype(dst)>>(it->second.as_int());
  };
  auto get_f64 = [&](const char* key, double& dst) {
    auto it = t.find(key);
    if (it == t.end()) return;
    if (!it->second.is_int() && !it->second.is_float())
      throw ConfigError(std::string("field '") + key + "' must be a number");
    dst = it->second.as_number();
  };
  auto get_bool = [&](const char* key, bool& dst) {
    auto it = t.find(key);
    if (it == t.end()) return;
    if (!it->second.is_bool()) throw ConfigError(std::string("field '") + key + "' must be a boolean");
    dst = it->second.as_bool();
  };
  auto get_strings = [&](const char* key, std::vector<std::string>& dst) {
    auto it = t.find(key);
    if (it == t.end()) return;
    if (!it->second.is_array()) throw ConfigError(std::string("field '") + key + "' must be an array");
    dst.clear();
    for (const toml::Value& v : it->second.as_array()) {
      if (!v.is_string()) throw ConfigError(std::string("field '") + key + "' must hold strings");
      dst.push_back(v.as_string());
    }
  };

  get_strings("functions", c.functions);
  get_strings("variants", c.variants);
  get_int("runs", c.runs);
  get_int("dim", c.dim);
  get_int("budget_per_dim", c.budget_per_dim);
  get_int("particles", c.particles);
  get_int("base_seed", c.base_seed);
  get_int("refit_every", c.refit_every);
  get_int("fit_restarts", c.fit_restarts);
  get_int("memory_cap", c.memory_cap);
  get_f64("rho", c.rho);
  get_int("record_every", c.record_every);
  get_int("parallelism", c.parallelism);
  get_bool("shift", c.shift);
  get_bool("rotate", c.rotate);
  get_bool("pooled_variance", c.pooled_variance);
  if (auto it = t.find("reference"); it != t.end()) {
    if (!it->second.is_string()) throw ConfigError("field 'reference' must be a string");
    c.reference = it->second.as_string();
  }
  for (const auto& [key, val] : t) {
    if (key.rfind("domains.", 0) != 0) continue;
    if (!val.is_array() || val.as_array().size() != 2)
      throw ConfigError("field '" + key + "' must be a [lower, upper] pair");
    c.domains[key.substr(8)] = {val.as_array()[0].as_number(), val.as_array()[1].as_number()};
  }
  return c;
}

inline ExperimentConfig from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("json parse error: ") + e.what());
  }
  ExperimentConfig c;
  c.functions.clear();
  try {
    if (j.contains("functions")) c.functions = j["functions"].get<std::vector<std::string>>();
    if (j.contains("variants")) c.variants = j["variants"].get<std::vector<std::string>>();
    if (j.contains("runs")) c.runs = j["runs"].get<int>();
    if (j.contains("dim")) c.dim = j["dim"].get<int>();
    if (j.contains("budget_per_dim")) c.budget_per_dim = j["budget_per_dim"].get<int>();
    if (j.contains("particles")) c.particles = j["particles"].get<int>();
    if (j.contains("base_seed")) c.base_seed = j["base_seed"].get<std::uint64_t>();
    if (j.contains("refit_every")) c.refit_every = j["refit_every"].get<int>();
    if (j.contains("fit_restarts")) c.fit_restarts = j["fit_restarts"].get<int>();
    if (j.contains("memory_cap")) c.memory_cap = j["memory_cap"].get<std::size_t>();
    if (j.contains("rho")) c.rho = j["rho"].get<double>();
    if (j.contains("record_every")) c.record_every = j["record_every"].get<long long>();
    if (j.contains("parallelism")) c.parallelism = j["parallelism"].get<int>();
    if (j.contains("reference")) c.reference = j["reference"].get<std::string>();
    if (j.contains("shift")) c.shift = j["shift"].get<bool>();
    if (j.contains("rotate")) c.rotate = j["rotate"].get<bool>();
    if (j.contains("pooled_variance")) c.pooled_variance = j["pooled_variance"].get<bool>();
    if (j.contains("domains"))
      for (auto& [name, box] : j["domains"].items())
        c.domains[name] = {box[0].get<double>(), box[1].get<double>()};
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("json field error: ") + e.what());
  }
  return c;
}

}  // namespace config_detail

inline ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  try {
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
      return config_detail::from_json(text);
    return config_detail::from_toml(text);
  } catch (const toml::ParseError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

inline void validate(const ExperimentConfig& c) {
  if (c.functions.empty()) throw ConfigError("config: function list is empty");
  if (c.variants.empty()) throw ConfigError("config: variant list is empty");
  if (c.runs < 1) throw ConfigError("config: runs must be positive");
  if (c.dim < 1) throw ConfigError("config: dim must be positive");
  if (c.budget_per_dim < 1) throw ConfigError("config: budget_per_dim must be positive");
  if (c.particles < 1) throw ConfigError("config: particles must be positive");
  for (const std::string& f : c.functions) function_info(f);  // throws UnknownFunction
  for (const std::string& v : c.variants) variant_from_name(v);
  if (!c.reference.empty()) variant_from_name(c.reference);
}

// Materialize the experiment grid. Each function's shift/rotation seed derives
// from the base seed and the function name, so every variant and run sees the
// same benchmark instance.
inline Experiment build_experiment(const ExperimentConfig& c) {
  validate(c);
  Experiment e;
  for (const std::string& name : c.functions) {
    BenchOptions opt;
    opt.with_shift = c.shift;
    opt.with_rotation = c.rotate;
    opt.seed = derive_seed(c.base_seed, fnv1a(name));
    if (auto it = c.domains.find(name); it != c.domains.end()) opt.domain = it->second;
    e.functions.push_back(make_spec(name, static_cast<std::size_t>(c.dim), opt));
  }
  for (const std::string& vname : c.variants) {
    VariantSpec vs = variant_spec(vname);
    vs.params.n_par = c.particles;
    e.variants.push_back(std::move(vs));
  }
  e.runs = c.runs;
  e.budget_per_dim = c.budget_per_dim;
  e.base_seed = c.base_seed;
  e.memory.rho = c.rho;
  e.memory.cap = c.memory_cap;
  e.refit_every = c.refit_every;
  e.fit_restarts = c.fit_restarts;
  e.record_every = c.record_every;
  e.parallelism = c.parallelism;
  return e;
}

}  // namespace gpswarm
