#pragma once

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "gpswarm/benchfns.hpp"
#include "gpswarm/optimizer.hpp"
#include "gpswarm/stats.hpp"

namespace gpswarm {

struct MissingCell : std::runtime_error {
  MissingCell(const std::string& fn, const std::string& variant)
      : std::runtime_error("no runs recorded for function '" + fn + "', variant '" + variant + "'") {}
};

struct VariantSpec {
  std::string name;
  PsoParams params;
};

inline VariantSpec variant_spec(const std::string& name) {
  Variant v = variant_from_name(name);
  return VariantSpec{variant_name(v), default_params(v)};
}

struct Experiment {
  std::vector<BenchSpec> functions;
  std::vector<VariantSpec> variants;
  int runs = 20;
  int budget_per_dim = 100;
  std::uint64_t base_seed = 1;
  MemoryConfig memory{};
  int refit_every = 5;
  int fit_restarts = 10;
  long long record_every = 0;
  int parallelism = 1;
};

struct SummaryRow {
  std::string function;
  std::string variant;
  double min = 0.0, median = 0.0, mean = 0.0, max = 0.0, sd = 0.0;
  double mean_runtime_s = 0.0;
};

struct ExperimentResult {
  std::vector<SummaryRow> summary;
  std::vector<RunRecord> records;       // ordered by (function, variant, run)
  std::vector<std::string> failures;    // human-readable entries for runs that errored
  bool interrupted = false;
};

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Run seeds depend on the (function, variant, run) identity, not on grid
// position, so reordering the experiment grid never changes any single trace.
inline std::uint64_t run_seed(std::uint64_t base, std::string_view function,
                              std::string_view variant, int run_index) {
  std::uint64_t s = derive_seed(base, fnv1a(function));
  s = derive_seed(s, fnv1a(variant));
  return derive_seed(s, static_cast<std::uint64_t>(run_index) + 1);
}

inline ExperimentResult run_experiment(const Experiment& e,
                                       const std::atomic<bool>* cancel = nullptr) {
  if (e.functions.empty()) throw std::invalid_argument("experiment: no functions configured");
  if (e.variants.empty()) throw std::invalid_argument("experiment: no variants configured");
  if (e.runs < 1) throw std::invalid_argument("experiment: runs must be positive");

  struct Task {
    std::size_t f, v;
    int r;
  };
  std::vector<Task> tasks;
  for (std::size_t f = 0; f < e.functions.size(); ++f)
    for (std::size_t v = 0; v < e.variants.size(); ++v)
      for (int r = 0; r < e.runs; ++r) tasks.push_back({f, v, r});

  struct Slot {
    RunRecord record;
    bool done = false;
    std::string error;
    bool skipped = false;
  };
  std::vector<Slot> slots(tasks.size());

  auto worker_body = [&](std::size_t t) {
    const Task& task = tasks[t];
    Slot& slot = slots[t];
    if (cancel && cancel->load()) {
      slot.skipped = true;
      return;
    }
    const BenchSpec& spec = e.functions[task.f];
    const VariantSpec& vs = e.variants[task.v];
    try {
      Objective obj = make_function(spec);
      RunConfig cfg;
      cfg.budget = static_cast<long long>(e.budget_per_dim) * static_cast<long long>(spec.dim);
      cfg.seed = run_seed(e.base_seed, spec.name, vs.name, task.r);
      cfg.memory = e.memory;
      cfg.refit_every = e.refit_every;
      cfg.fit_restarts = e.fit_restarts;
      cfg.record_every = e.record_every;
      slot.record = optimize(obj, spec.domain, vs.params, cfg);
      slot.record.function = spec.name;
      slot.done = true;
    } catch (const std::exception& ex) {
      slot.error = ex.what();
    }
  };

  int workers = std::max(1, e.parallelism);
  if (workers == 1) {
    for (std::size_t t = 0; t < tasks.size(); ++t) worker_body(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&]() {
        for (;;) {
          std::size_t t = next.fetch_add(1);
          if (t >= tasks.size()) return;
          worker_body(t);
        }
      });
    for (std::thread& th : pool) th.join();
  }

  ExperimentResult out;
  out.interrupted = cancel && cancel->load();
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    const Task& task = tasks[t];
    Slot& slot = slots[t];
    if (slot.done) {
      out.records.push_back(std::move(slot.record));
    } else if (!slot.skipped) {
      out.failures.push_back(e.functions[task.f].name + "/" + e.variants[task.v].name + "/run" +
                             std::to_string(task.r) + ": " + slot.error);
    }
  }

  for (const BenchSpec& spec : e.functions) {
    for (const VariantSpec& vs : e.variants) {
      std::vector<double> finals;
      std::vector<double> runtimes;
      for (const RunRecord& r : out.records)
        if (r.function == spec.name && r.variant == vs.name) {
          finals.push_back(r.best_value);
          runtimes.push_back(r.wall_time_s);
        }
      if (finals.empty()) continue;  // complete failure of a cell is reported, not summarized
      SummaryRow row;
      row.function = spec.name;
      row.variant = vs.name;
      row.min = *std::min_element(finals.begin(), finals.end());
      row.max = *std::max_element(finals.begin(), finals.end());
      row.median = sample_median(finals);
      row.mean = sample_mean(finals);
      row.sd = sample_sd(finals);
      row.mean_runtime_s = sample_mean(runtimes);
      out.summary.push_back(std::move(row));
    }
  }
  return out;
}

struct SignificanceRow {
  std::string function;
  std::string reference;
  std::string other;
  double t = 0.0;
  double p = 0.5;
  bool significant = false;  // p < 0.05
};

// Final best values grouped per (function, variant), in run order.
inline std::map<std::pair<std::string, std::string>, std::vector<double>> final_values(
    const std::vector<RunRecord>& records) {
  std::map<std::pair<std::string, std::string>, std::vector<double>> m;
  for (const RunRecord& r : records) m[{r.function, r.variant}].push_back(r.best_value);
  return m;
}

inline std::vector<SignificanceRow> significance_table(const std::vector<RunRecord>& records,
                                                       const std::string& reference,
                                                       bool pooled = false) {
  auto cells = final_values(records);
  std::vector<std::string> functions, variants;
  for (const auto& [key, vals] : cells) {
    if (std::find(functions.begin(), functions.end(), key.first) == functions.end())
      functions.push_back(key.first);
    if (std::find(variants.begin(), variants.end(), key.second) == variants.end())
      variants.push_back(key.second);
  }
  std::vector<SignificanceRow> rows;
  for (const std::string& fn : functions) {
    auto ref_it = cells.find({fn, reference});
    if (ref_it == cells.end()) throw MissingCell(fn, reference);
    for (const std::string& other : variants) {
      auto other_it = cells.find({fn, other});
      if (other_it == cells.end()) throw MissingCell(fn, other);
      WelchResult w = welch_one_sided(ref_it->second, other_it->second, pooled);
      rows.push_back({fn, reference, other, w.t, w.p, w.p < 0.05});
    }
  }
  return rows;
}

namespace io_detail {

inline std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

// full round-trip precision, for files that feed later computations
inline std::string fmt_exact(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

}  // namespace io_detail

// Schema: function,variant,min,median,mean,max,sd,mean_runtime_s
inline void write_summary_csv(const std::vector<SummaryRow>& rows, const std::string& path) {
  auto out = io_detail::open_out(path);
  out << "function,variant,min,median,mean,max,sd,mean_runtime_s\n";
  for (const SummaryRow& r : rows)
    out << r.function << ',' << r.variant << ',' << io_detail::fmt(r.min) << ','
        << io_detail::fmt(r.median) << ',' << io_detail::fmt(r.mean) << ','
        << io_detail::fmt(r.max) << ',' << io_detail::fmt(r.sd) << ','
        << io_detail::fmt(r.mean_runtime_s) << '\n';
}

// Per-run final values; consumed by the significance subcommand.
inline void write_runs_csv(const std::vector<RunRecord>& records, const std::string& path) {
  auto out = io_detail::open_out(path);
  out << "function,variant,seed,final_best,evaluations,runtime_s\n";
  for (const RunRecord& r : records)
    out << r.function << ',' << r.variant << ',' << r.seed << ','
        << io_detail::fmt_exact(r.best_value) << ',' << r.evaluations << ','
        << io_detail::fmt(r.wall_time_s) << '\n';
}

// Schema: function,reference,other,t,p,significant_5pct
inline void write_significance_csv(const std::vector<SignificanceRow>& rows,
                                   const std::string& path) {
  auto out = io_detail::open_out(path);
  out << "function,reference,other,t,p,significant_5pct\n";
  for (const SignificanceRow& r : rows)
    out << r.function << ',' << r.reference << ',' << r.other << ',' << io_detail::fmt(r.t)
        << ',' << io_detail::fmt(r.p) << ',' << (r.significant ? "true" : "false") << '\n';
}

// Long-format trace CSV for external plotting, plus a per-variant
// median-across-seeds series in a sibling "_median" file. All records must
// share one function.
inline void emit_convergence_data(const std::vector<RunRecord>& records,
                                  const std::string& path) {
  if (records.empty()) throw std::invalid_argument("emit_convergence_data: no records");
  for (const RunRecord& r : records)
    if (r.function != records.front().function)
      throw std::invalid_argument("emit_convergence_data: records must share a function");

  {
    auto out = io_detail::open_out(path);
    out << "function,variant,seed,evaluations,best_so_far,elapsed_seconds\n";
    for (const RunRecord& r : records)
      for (const TracePoint& t : r.trace)
        out << r.function << ',' << r.variant << ',' << r.seed << ',' << t.evals << ','
            << io_detail::fmt(t.best) << ',' << io_detail::fmt(t.elapsed_s) << '\n';
  }

  std::filesystem::path p(path);
  std::filesystem::path median_path = p.parent_path() / (p.stem().string() + "_median" +
                                                         p.extension().string());
  // per-variant median of best-so-far at each recorded evaluation count
  std::map<std::string, std::map<long long, std::vector<double>>> by_variant;
  for (const RunRecord& r : records)
    for (const TracePoint& t : r.trace) by_variant[r.variant][t.evals].push_back(t.best);
  auto out = io_detail::open_out(median_path.string());
  out << "function,variant,evaluations,median_best\n";
  for (const auto& [variant, series] : by_variant)
    for (const auto& [evals, vals] : series)
      out << records.front().function << ',' << variant << ',' << evals << ','
          << io_detail::fmt(sample_median(vals)) << '\n';
}

}  // namespace gpswarm
