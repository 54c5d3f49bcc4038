#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "gpswarm/config.hpp"

using namespace gpswarm;
namespace fs = std::filesystem;

namespace {

fs::path write_temp(const std::string& name, const std::string& body) {
  fs::path p = fs::temp_directory_path() / name;
  std::ofstream out(p);
  out << body;
  return p;
}

}  // namespace

TEST_CASE("toml subset parser") {
  auto t = toml::parse(R"(
# comment
runs = 20
rho = 1.15             # trailing comment
shift = true
reference = "a3"
functions = ["sphere", "ackley"]
box = [-5.0, 5.0]

[domains]
ackley = [-5, 5]
)");
  REQUIRE(t.at("runs").as_int() == 20);
  REQUIRE(t.at("rho").as_number() == 1.15);
  REQUIRE(t.at("shift").as_bool());
  REQUIRE(t.at("reference").as_string() == "a3");
  REQUIRE(t.at("functions").as_array().size() == 2);
  REQUIRE(t.at("functions").as_array()[1].as_string() == "ackley");
  REQUIRE(t.at("box").as_array()[0].as_number() == -5.0);
  REQUIRE(t.at("domains.ackley").as_array()[1].as_number() == 5.0);

  REQUIRE_THROWS_AS(toml::parse("key"), toml::ParseError);
  REQUIRE_THROWS_AS(toml::parse("[unterminated"), toml::ParseError);
  REQUIRE_THROWS_AS(toml::parse("a = \"open"), toml::ParseError);
  try {
    toml::parse("ok = 1\nbroken line\n");
    FAIL("expected ParseError");
  } catch (const toml::ParseError& e) {
    REQUIRE(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("toml and json configs map onto the same experiment") {
  fs::path toml_path = write_temp("gpswarm_cfg.toml", R"(
base_seed = 99
runs = 4
dim = 3
budget_per_dim = 50
particles = 8
variants = ["spso2011", "a3"]
functions = ["sphere", "ackley"]
reference = "a3"
shift = true
rotate = false

[domains]
ackley = [-5.0, 5.0]
)");
  fs::path json_path = write_temp("gpswarm_cfg.json", R"({
  "base_seed": 99,
  "runs": 4,
  "dim": 3,
  "budget_per_dim": 50,
  "particles": 8,
  "variants": ["spso2011", "a3"],
  "functions": ["sphere", "ackley"],
  "reference": "a3",
  "shift": true,
  "rotate": false,
  "domains": {"ackley": [-5.0, 5.0]}
})");

  ExperimentConfig a = load_experiment_config(toml_path.string());
  ExperimentConfig b = load_experiment_config(json_path.string());
  REQUIRE(a.base_seed == b.base_seed);
  REQUIRE(a.runs == b.runs);
  REQUIRE(a.functions == b.functions);
  REQUIRE(a.variants == b.variants);
  REQUIRE(a.domains == b.domains);
  REQUIRE(a.reference == b.reference);
  REQUIRE(a.shift == b.shift);
  REQUIRE(a.rotate == b.rotate);

  Experiment ea = build_experiment(a);
  Experiment eb = build_experiment(b);
  REQUIRE(ea.functions.size() == 2);
  REQUIRE(ea.functions[1].domain.lower[0] == -5.0);
  REQUIRE(ea.functions[1].domain.upper[0] == 5.0);
  REQUIRE(ea.functions[0].shift == eb.functions[0].shift);
  REQUIRE(ea.variants[1].params.n_par == 8);
  REQUIRE(ea.variants[1].params.phi_g == 1.55);

  fs::remove(toml_path);
  fs::remove(json_path);
}

TEST_CASE("config validation rejects bad manifests") {
  ExperimentConfig c = default_desk_config();
  c.functions.clear();
  REQUIRE_THROWS_AS(build_experiment(c), ConfigError);

  c = default_desk_config();
  c.functions = {"no_such_function"};
  REQUIRE_THROWS_AS(build_experiment(c), UnknownFunction);

  c = default_desk_config();
  c.variants = {"zz"};
  REQUIRE_THROWS_AS(build_experiment(c), std::invalid_argument);

  c = default_desk_config();
  c.runs = 0;
  REQUIRE_THROWS_AS(build_experiment(c), ConfigError);

  REQUIRE_THROWS_AS(load_experiment_config("/nonexistent/path.toml"), ConfigError);

  fs::path bad = write_temp("gpswarm_bad.toml", "functions = [\n");
  REQUIRE_THROWS_AS(load_experiment_config(bad.string()), ConfigError);
  fs::remove(bad);

  fs::path badjson = write_temp("gpswarm_bad.json", "{\"runs\": }");
  REQUIRE_THROWS_AS(load_experiment_config(badjson.string()), ConfigError);
  fs::remove(badjson);
}

TEST_CASE("default desk config is a valid experiment") {
  ExperimentConfig c = default_desk_config();
  Experiment e = build_experiment(c);
  REQUIRE(e.functions.size() == 6);
  REQUIRE(e.variants.size() == 4);
  REQUIRE(e.runs == 20);
  REQUIRE(e.budget_per_dim == 100);
  // every function instance is reproducible from the base seed
  Experiment e2 = build_experiment(c);
  for (std::size_t i = 0; i < e.functions.size(); ++i) {
    REQUIRE(e.functions[i].shift == e2.functions[i].shift);
    REQUIRE(e.functions[i].rotation == e2.functions[i].rotation);
  }
}

TEST_CASE("bundled desk_scale.toml matches the built-in default") {
  // the repo ships the default experiment as a file; keep the two in sync
  ExperimentConfig file = load_experiment_config(GPSWARM_DESK_CONFIG);
  ExperimentConfig code = default_desk_config();
  REQUIRE(file.functions == code.functions);
  REQUIRE(file.variants == code.variants);
  REQUIRE(file.runs == code.runs);
  REQUIRE(file.dim == code.dim);
  REQUIRE(file.budget_per_dim == code.budget_per_dim);
  REQUIRE(file.particles == code.particles);
  REQUIRE(file.base_seed == code.base_seed);
  REQUIRE(file.domains == code.domains);
  REQUIRE(file.reference == code.reference);
}
