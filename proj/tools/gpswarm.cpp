// Command-line front end: single runs, full experiments, significance tables,
// the illustrative-run data dump, and the function registry listing.

#include <atomic>
#include <csignal>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "gpswarm/config.hpp"
#include "gpswarm/harness.hpp"
#include "gpswarm/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::atomic<bool> g_interrupted{false};

void handle_sigint(int) { g_interrupted.store(true); }

int resolve_parallelism(int requested) {
  if (const char* env = std::getenv("GPSWARM_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

json record_summary_json(const gpswarm::RunRecord& rec) {
  return json{{"function", rec.function},
              {"variant", rec.variant},
              {"seed", rec.seed},
              {"best_value", rec.best_value},
              {"best_x", rec.best_x},
              {"evaluations", rec.evaluations},
              {"iterations", rec.iterations},
              {"wall_time_s", rec.wall_time_s}};
}

void write_json(const json& j, const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << j.dump(2) << '\n';
}

json manifest_json(const gpswarm::ExperimentConfig& cfg, const gpswarm::Experiment& e,
                   bool complete) {
  json functions = json::array();
  for (const auto& spec : e.functions) {
    json f{{"name", spec.name},
           {"dim", spec.dim},
           {"lower", spec.domain.lower},
           {"upper", spec.domain.upper},
           {"offset", spec.offset},
           {"shifted", !spec.shift.empty()},
           {"rotated", !spec.rotation.empty()}};
    if (!spec.shift.empty()) f["shift"] = spec.shift;
    functions.push_back(std::move(f));
  }
  json seeds = json::object();
  for (const auto& spec : e.functions)
    for (const auto& vs : e.variants)
      for (int r = 0; r < e.runs; ++r)
        seeds[spec.name + "/" + vs.name + "/" + std::to_string(r)] =
            gpswarm::run_seed(e.base_seed, spec.name, vs.name, r);
  return json{{"library_version", gpswarm::kVersion},
              {"complete", complete},
              {"config",
               {{"functions", cfg.functions},
                {"variants", cfg.variants},
                {"runs", cfg.runs},
                {"dim", cfg.dim},
                {"budget_per_dim", cfg.budget_per_dim},
                {"particles", cfg.particles},
                {"base_seed", cfg.base_seed},
                {"refit_every", cfg.refit_every},
                {"fit_restarts", cfg.fit_restarts},
                {"memory_cap", cfg.memory_cap},
                {"rho", cfg.rho},
                {"record_every", cfg.record_every},
                {"reference", cfg.reference},
                {"shift", cfg.shift},
                {"rotate", cfg.rotate},
                {"pooled_variance", cfg.pooled_variance}}},
              {"functions", functions},
              {"derived_seeds", seeds}};
}

int cmd_run(const std::string& variant, const std::string& function, int dim, long long budget,
            std::uint64_t seed, const std::string& out_dir, int particles, int refit_every,
            std::size_t memory_cap, double rho, bool shift, bool rotate) {
  gpswarm::BenchOptions opt;
  opt.with_shift = shift;
  opt.with_rotation = rotate;
  opt.seed = gpswarm::derive_seed(seed, gpswarm::fnv1a(function));
  gpswarm::BenchSpec spec = gpswarm::make_spec(function, static_cast<std::size_t>(dim), opt);
  gpswarm::Objective obj = gpswarm::make_function(spec);

  gpswarm::PsoParams params = gpswarm::default_params(gpswarm::variant_from_name(variant));
  params.n_par = particles;
  gpswarm::RunConfig cfg;
  cfg.budget = budget;
  cfg.seed = seed;
  cfg.refit_every = refit_every;
  cfg.memory.cap = memory_cap;
  cfg.memory.rho = rho;

  gpswarm::RunRecord rec = gpswarm::optimize(obj, spec.domain, params, cfg);
  rec.function = spec.name;

  fs::create_directories(out_dir);
  gpswarm::emit_convergence_data({rec}, (fs::path(out_dir) / "trace.csv").string());
  json summary = record_summary_json(rec);
  summary["offset"] = spec.offset;
  summary["best_minus_offset"] = rec.best_value - spec.offset;
  write_json(summary, fs::path(out_dir) / "summary.json");

  std::cout << "final best " << gpswarm::io_detail::fmt(rec.best_value) << " after "
            << rec.evaluations << " evaluations (" << gpswarm::io_detail::fmt(rec.wall_time_s)
            << " s)\n";
  return 0;
}

int cmd_experiment(const gpswarm::ExperimentConfig& cfg, const std::string& out_dir) {
  gpswarm::Experiment e = gpswarm::build_experiment(cfg);
  e.parallelism = resolve_parallelism(cfg.parallelism);

  std::signal(SIGINT, handle_sigint);
  gpswarm::ExperimentResult result = gpswarm::run_experiment(e, &g_interrupted);
  std::signal(SIGINT, SIG_DFL);

  fs::create_directories(out_dir);
  gpswarm::write_summary_csv(result.summary, (fs::path(out_dir) / "summary.csv").string());
  gpswarm::write_runs_csv(result.records, (fs::path(out_dir) / "runs.csv").string());

  fs::path traces = fs::path(out_dir) / "traces";
  fs::create_directories(traces);
  for (const auto& spec : e.functions) {
    std::vector<gpswarm::RunRecord> group;
    for (const auto& rec : result.records)
      if (rec.function == spec.name) group.push_back(rec);
    if (!group.empty())
      gpswarm::emit_convergence_data(group, (traces / (spec.name + ".csv")).string());
  }

  if (!cfg.reference.empty() && !result.interrupted) {
    auto rows = gpswarm::significance_table(result.records, cfg.reference, cfg.pooled_variance);
    gpswarm::write_significance_csv(rows, (fs::path(out_dir) / "significance.csv").string());
  }

  write_json(manifest_json(cfg, e, !result.interrupted),
             fs::path(out_dir) / "manifest.json");

  for (const std::string& f : result.failures) std::cerr << "run failed: " << f << '\n';
  if (result.interrupted) {
    std::cerr << "interrupted; partial results flushed to " << out_dir << '\n';
    return 1;
  }
  std::cout << result.records.size() << " runs -> " << out_dir << '\n';
  return result.failures.empty() ? 0 : 1;
}

int cmd_significance(const std::string& in_dir, const std::string& reference, bool pooled,
                     const std::string& out_path) {
  fs::path runs_csv = fs::path(in_dir) / "runs.csv";
  std::ifstream in(runs_csv);
  if (!in) throw gpswarm::ConfigError("cannot read " + runs_csv.string());
  std::vector<gpswarm::RunRecord> records;
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string fn, var, seed, best, evals, rt;
    std::getline(ss, fn, ',');
    std::getline(ss, var, ',');
    std::getline(ss, seed, ',');
    std::getline(ss, best, ',');
    std::getline(ss, evals, ',');
    std::getline(ss, rt, ',');
    gpswarm::RunRecord rec;
    rec.function = fn;
    rec.variant = var;
    rec.seed = std::stoull(seed);
    rec.best_value = std::stod(best);
    records.push_back(std::move(rec));
  }
  if (records.empty()) throw gpswarm::ConfigError("no runs found in " + runs_csv.string());
  auto rows = gpswarm::significance_table(records, reference, pooled);
  gpswarm::write_significance_csv(rows, out_path);
  std::cout << rows.size() << " comparisons -> " << out_path << '\n';
  return 0;
}

// Snapshot dump of a C1 run on the 2D Ackley box: particle cloud, incumbent,
// surrogate mean/variance and the LCB acquisition on a 64 x 64 grid, plus the
// current exploration target, at 0, 6 and 18 completed steps.
int cmd_illustrate(const std::string& out_dir, std::uint64_t seed) {
  constexpr int kGrid = 64;
  const std::vector<long> snaps = {0, 6, 18};

  gpswarm::BenchOptions opt;  // plain Ackley, no shift/rotation, zero offset
  opt.offset = 0.0;
  opt.domain = {{-5.0, 5.0}};
  gpswarm::BenchSpec spec = gpswarm::make_spec("ackley", 2, opt);
  gpswarm::Objective obj = gpswarm::make_function(spec);

  gpswarm::PsoParams params = gpswarm::default_params(gpswarm::Variant::C1);
  params.n_par = 10;
  gpswarm::RunConfig cfg;
  cfg.seed = seed;
  // 19 full sweeps keep the model fit of the 18-step snapshot inside the loop
  cfg.budget = static_cast<long long>(params.n_par) * 20;

  fs::create_directories(out_dir);
  const gpswarm::Domain& d = spec.domain;

  auto write_grid = [&](const fs::path& path, auto&& value_at) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    for (int c = 0; c < kGrid; ++c) out << (c ? "," : "") << "c" << c;
    out << '\n';
    for (int r = 0; r < kGrid; ++r) {
      for (int c = 0; c < kGrid; ++c) {
        double x = d.lower[0] + (c + 0.5) * d.range(0) / kGrid;
        double y = d.lower[1] + (r + 0.5) * d.range(1) / kGrid;
        out << (c ? "," : "") << gpswarm::io_detail::fmt(value_at(gpswarm::Vec{x, y}));
      }
      out << '\n';
    }
  };

  auto hook = [&](const gpswarm::Snapshot& snap) {
    if (std::find(snaps.begin(), snaps.end(), snap.steps_completed) == snaps.end()) return;
    char name[32];
    std::snprintf(name, sizeof(name), "snap_%03ld", snap.steps_completed);
    fs::path dir = fs::path(out_dir) / name;
    fs::create_directories(dir);

    {
      std::ofstream out(dir / "particles.csv");
      out << "particle,x0,x1,v0,v1,best0,best1,best_value,value\n";
      for (std::size_t j = 0; j < snap.state.particles.size(); ++j) {
        const gpswarm::Particle& p = snap.state.particles[j];
        out << j << ',' << gpswarm::io_detail::fmt(p.x[0]) << ','
            << gpswarm::io_detail::fmt(p.x[1]) << ',' << gpswarm::io_detail::fmt(p.v[0]) << ','
            << gpswarm::io_detail::fmt(p.v[1]) << ',' << gpswarm::io_detail::fmt(p.best_x[0])
            << ',' << gpswarm::io_detail::fmt(p.best_x[1]) << ','
            << gpswarm::io_detail::fmt(p.best_value) << ',' << gpswarm::io_detail::fmt(p.value)
            << '\n';
      }
    }

    json meta{{"steps_completed", snap.steps_completed},
              {"evaluations", snap.evaluations},
              {"incumbent_x", snap.state.best_x},
              {"incumbent_value", snap.state.best_value},
              {"grid", kGrid},
              {"lower", d.lower},
              {"upper", d.upper},
              {"surrogate_available", snap.model != nullptr}};

    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (snap.model) {
      const gpswarm::GpModel& m = *snap.model;
      write_grid(dir / "mean.csv", [&](const gpswarm::Vec& q) { return m.mean_at(q); });
      write_grid(dir / "variance.csv",
                 [&](const gpswarm::Vec& q) { return m.mean_var_at(q).second; });
      write_grid(dir / "acquisition.csv", [&](const gpswarm::Vec& q) {
        return gpswarm::acquisition_value(m, gpswarm::Acquisition::Lcb, q);
      });
      gpswarm::Vec target =
          gpswarm::surrogate_argmin(m, d, gpswarm::Acquisition::Lcb, snap.state.best_x);
      meta["exploration_target"] = target;
      meta["exploration_target_value"] =
          gpswarm::acquisition_value(m, gpswarm::Acquisition::Lcb, target);
    } else {
      write_grid(dir / "mean.csv", [&](const gpswarm::Vec&) { return nan; });
      write_grid(dir / "variance.csv", [&](const gpswarm::Vec&) { return nan; });
      write_grid(dir / "acquisition.csv", [&](const gpswarm::Vec&) { return nan; });
    }
    write_json(meta, dir / "meta.json");
  };

  gpswarm::RunRecord rec = gpswarm::run(obj, spec.domain, params, cfg, hook);
  rec.function = spec.name;
  gpswarm::emit_convergence_data({rec}, (fs::path(out_dir) / "trace.csv").string());
  write_json(record_summary_json(rec), fs::path(out_dir) / "summary.json");
  std::cout << "snapshots in " << out_dir << "; final best "
            << gpswarm::io_detail::fmt(rec.best_value) << '\n';
  return 0;
}

int cmd_list_functions() {
  std::printf("%-22s %-18s %s\n", "name", "default domain", "offset");
  for (const auto& f : gpswarm::function_registry())
    std::printf("%-22s [%g, %g]^D %14g\n", std::string(f.name).c_str(), f.default_lo,
                f.default_hi, f.cec_offset);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GP-guided particle swarm optimization benchmark suite"};
  app.require_subcommand(1);

  // run
  auto* run_cmd = app.add_subcommand("run", "execute a single optimization run");
  std::string variant = "spso2011", function = "sphere", out_dir = "gpswarm_out";
  int dim = 2, particles = 50, refit_every = 5;
  long long budget = 2000;
  std::uint64_t seed = 42;
  std::size_t memory_cap = 0;
  double rho = 1.15;
  bool shift = false, rotate = false;
  run_cmd->add_option("--variant", variant, "algorithm variant")->capture_default_str();
  run_cmd->add_option("--function", function, "benchmark function name")->capture_default_str();
  run_cmd->add_option("--dim", dim, "problem dimension")->capture_default_str();
  run_cmd->add_option("--budget", budget, "max objective evaluations")->capture_default_str();
  run_cmd->add_option("--seed", seed, "run seed")->capture_default_str();
  run_cmd->add_option("--out", out_dir, "output directory")->capture_default_str();
  run_cmd->add_option("--particles", particles, "swarm size")->capture_default_str();
  run_cmd->add_option("--refit-every", refit_every, "hyperparameter re-fit cadence")
      ->capture_default_str();
  run_cmd->add_option("--memory-cap", memory_cap, "memory bound (0 = 25x particles)")
      ->capture_default_str();
  run_cmd->add_option("--rho", rho, "memory confidence multiplier")->capture_default_str();
  run_cmd->add_flag("--shift", shift, "apply a seeded shift to the function");
  run_cmd->add_flag("--rotate", rotate, "apply a seeded rotation to the function");

  // experiment
  auto* exp_cmd = app.add_subcommand("experiment", "run a full benchmark experiment");
  std::string config_path, exp_out = "experiment_out";
  int parallelism = 0, runs_override = -1, refit_override = -1;
  long long memcap_override = -1;
  double rho_override = -1.0;
  std::uint64_t seed_override = 0;
  bool seed_given = false, pooled = false;
  exp_cmd->add_option("--config", config_path, "experiment config (.toml or .json)");
  exp_cmd->add_option("--out", exp_out, "output directory")->capture_default_str();
  exp_cmd->add_option("--parallelism", parallelism, "worker pool size (0 = hardware)")
      ->capture_default_str();
  exp_cmd->add_option("--runs", runs_override, "override run count");
  exp_cmd->add_option("--seed", seed_override, "override base seed")
      ->trigger_on_parse()
      ->each([&](const std::string&) { seed_given = true; });
  exp_cmd->add_option("--refit-every", refit_override, "override re-fit cadence");
  exp_cmd->add_option("--memory-cap", memcap_override, "override memory bound");
  exp_cmd->add_option("--rho", rho_override, "override memory confidence multiplier");
  exp_cmd->add_flag("--pooled-variance", pooled, "Student t-test instead of Welch");

  // significance
  auto* sig_cmd = app.add_subcommand("significance", "one-sided t-tests from experiment output");
  std::string sig_in, sig_ref = "a3", sig_out;
  bool sig_pooled = false;
  sig_cmd->add_option("--in", sig_in, "experiment output directory (with runs.csv)")->required();
  sig_cmd->add_option("--reference", sig_ref, "reference variant")->capture_default_str();
  sig_cmd->add_option("--out", sig_out, "output CSV (default <in>/significance.csv)");
  sig_cmd->add_flag("--pooled-variance", sig_pooled, "Student t-test instead of Welch");

  // illustrate
  auto* ill_cmd = app.add_subcommand("illustrate", "snapshot dump of a C1 run on 2D Ackley");
  std::string ill_out = "illustrate_out";
  std::uint64_t ill_seed = 1;
  ill_cmd->add_option("--out", ill_out, "output directory")->capture_default_str();
  ill_cmd->add_option("--seed", ill_seed, "run seed")->capture_default_str();

  app.add_subcommand("list-functions", "print the benchmark function registry");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed())
      return cmd_run(variant, function, dim, budget, seed, out_dir, particles, refit_every,
                     memory_cap, rho, shift, rotate);
    if (exp_cmd->parsed()) {
      gpswarm::ExperimentConfig cfg =
          config_path.empty() ? gpswarm::default_desk_config()
                              : gpswarm::load_experiment_config(config_path);
      if (runs_override > 0) cfg.runs = runs_override;
      if (seed_given) cfg.base_seed = seed_override;
      if (parallelism > 0) cfg.parallelism = parallelism;
      if (refit_override > 0) cfg.refit_every = refit_override;
      if (memcap_override >= 0) cfg.memory_cap = static_cast<std::size_t>(memcap_override);
      if (rho_override > 0.0) cfg.rho = rho_override;
      if (pooled) cfg.pooled_variance = true;
      return cmd_experiment(cfg, exp_out);
    }
    if (sig_cmd->parsed()) {
      if (sig_out.empty()) sig_out = (fs::path(sig_in) / "significance.csv").string();
      return cmd_significance(sig_in, sig_ref, sig_pooled, sig_out);
    }
    if (ill_cmd->parsed()) return cmd_illustrate(ill_out, ill_seed);
    return cmd_list_functions();
  } catch (const gpswarm::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const gpswarm::UnknownFunction& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
