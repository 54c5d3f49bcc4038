#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gpswarm/core.hpp"
#include "gpswarm/gp.hpp"
#include "gpswarm/memory.hpp"
#include "gpswarm/rng.hpp"

namespace gpswarm {

enum class Variant { Opso, Spso2011, A1, A2, A3, B, C1, C2, Bo };

inline const char* variant_name(Variant v) {
  switch (v) {
    case Variant::Opso: return "opso";
    case Variant::Spso2011: return "spso2011";
    case Variant::A1: return "a1";
    case Variant::A2: return "a2";
    case Variant::A3: return "a3";
    case Variant::B: return "b";
    case Variant::C1: return "c1";
    case Variant::C2: return "c2";
    case Variant::Bo: return "bo";
  }
  return "?";
}

inline Variant variant_from_name(std::string name) {
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (Variant v : {Variant::Opso, Variant::Spso2011, Variant::A1, Variant::A2, Variant::A3,
                    Variant::B, Variant::C1, Variant::C2, Variant::Bo})
    if (name == variant_name(v)) return v;
  throw std::invalid_argument("unknown variant: " + name);
}

struct PsoParams {
  double omega = 0.0;
  double phi_p = 0.0;
  double phi_g = 0.0;
  double phi_h = 0.0;  // heuristic weight, variants A only
  int n_par = 50;
  Variant variant = Variant::Spso2011;
  // Alternative variant-A kinematics: fold the heuristic influence into the
  // SPSO2011 center of gravity (denominator 4) instead of the componentwise
  // uniform mixing. Off by default.
  bool heuristic_in_sphere = false;
};

// Per-variant parameter presets of the evaluated algorithms.
inline PsoParams default_params(Variant v) {
  PsoParams p;
  p.variant = v;
  switch (v) {
    case Variant::Opso:
      p.omega = 1.0; p.phi_p = 2.0; p.phi_g = 2.0; break;
    case Variant::Spso2011:
      p.omega = 1.0 / (2.0 * std::log(2.0));
      p.phi_p = p.phi_g = 0.5 + std::log(2.0);
      break;
    case Variant::A1:
      p.omega = 0.42; p.phi_p = 1.2; p.phi_g = 1.2; p.phi_h = 0.75; break;
    case Variant::A2:
      p.omega = 0.42; p.phi_p = 1.55; p.phi_g = 0.75; p.phi_h = 0.75; break;
    case Variant::A3:
      p.omega = 0.42; p.phi_p = 0.75; p.phi_g = 1.55; p.phi_h = 0.75; break;
    case Variant::B:
    case Variant::C1:
    case Variant::C2:
      p.omega = 0.42; p.phi_p = 1.55; p.phi_g = 1.55; break;
    case Variant::Bo:
      p.n_par = 1; break;
  }
  return p;
}

inline bool variant_uses_gp(Variant v) {
  switch (v) {
    case Variant::A1:
    case Variant::A2:
    case Variant::A3:
    case Variant::B:
    case Variant::C1:
    case Variant::C2:
      return true;
    default:
      return false;
  }
}

struct RunConfig {
  long long budget = 0;       // max objective evaluations
  std::uint64_t seed = 0;
  MemoryConfig memory{};      // cap 0 = 25 * n_par
  int refit_every = 5;        // hyperparameter re-fit cadence; 1 = every iteration
  int fit_restarts = 10;
  long long record_every = 0; // 0 = auto: 1 for budgets <= 1e4, else 10
};

struct TracePoint {
  long long evals = 0;
  double best = 0.0;
  double elapsed_s = 0.0;
};

struct IterationDiag {
  long iteration = 0;
  std::size_t memory_size = 0;
  std::size_t train_size = 0;
  int jitter_escalations = 0;
  bool surrogate_ok = false;
  bool refit = false;
};

struct RunRecord {
  std::string variant;
  std::string function;
  std::uint64_t seed = 0;
  std::vector<TracePoint> trace;  // best-so-far sampled every record_every evaluations
  Vec best_x;
  double best_value = std::numeric_limits<double>::infinity();
  long long evaluations = 0;
  long iterations = 0;
  double wall_time_s = 0.0;
  std::vector<IterationDiag> diagnostics;
};

// Budget guard plus incumbent trace shared by all step functions.
class Evaluator {
 public:
  Evaluator(Objective& f, long long budget, long long record_every,
            std::vector<TracePoint>& trace)
      : f_(f), budget_(budget), record_every_(record_every), trace_(trace),
        t0_(std::chrono::steady_clock::now()) {}

  bool exhausted() const { return used_ >= budget_; }
  long long used() const { return used_; }
  double best() const { return best_; }
  const Vec& best_x() const { return best_x_; }

  double elapsed_s() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

  double evaluate(const Vec& x) {
    double v = f_(std::span<const double>(x));
    ++used_;
    if (v < best_) {
      best_ = v;
      best_x_ = x;
    }
    if (record_every_ > 0 && used_ % record_every_ == 0)
      trace_.push_back({used_, best_, elapsed_s()});
    return v;
  }

 private:
  Objective& f_;
  long long budget_;
  long long used_ = 0;
  long long record_every_;
  std::vector<TracePoint>& trace_;
  double best_ = std::numeric_limits<double>::infinity();
  Vec best_x_;
  std::chrono::steady_clock::time_point t0_;
};

namespace step_detail {

inline void finish_move(SwarmState& state, Particle& p, Evaluator& ev) {
  p.value = ev.evaluate(p.x);
  p.eval_id = state.next_eval_id++;
  if (p.value < p.best_value) {
    p.best_value = p.value;
    p.best_x = p.x;
  }
}

inline bool same_point(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

// SPSO2011 kinematics for one particle against a fixed global best g.
// Draw order: D normals then one uniform (ball sample).
inline void spso_move(Particle& p, const Vec& g, const PsoParams& par, const Domain& d,
                      Rng& rng) {
  const std::size_t dim = d.dim();
  Vec center(dim);
  if (same_point(p.best_x, g)) {
    for (std::size_t i = 0; i < dim; ++i)
      center[i] = p.x[i] + 0.5 * par.phi_p * (p.best_x[i] - p.x[i]);
  } else {
    for (std::size_t i = 0; i < dim; ++i)
      center[i] = p.x[i] + (par.phi_p * (p.best_x[i] - p.x[i]) +
                            par.phi_g * (g[i] - p.x[i])) / 3.0;
  }
  Vec diff(dim);
  for (std::size_t i = 0; i < dim; ++i) diff[i] = center[i] - p.x[i];
  Vec y = sample_in_ball(rng, center, norm(diff));
  for (std::size_t i = 0; i < dim; ++i) {
    p.v[i] = par.omega * p.v[i] + (y[i] - p.x[i]);
    p.x[i] += p.v[i];
  }
  clamp_to_domain(p.x, p.v, d);
}

}  // namespace step_detail

// Original PSO velocity update with inertia weight: per component,
//   v' = w v + phi_p R_p (p - x) + phi_g R_g (g - x),  R ~ U(0,1) i.i.d.
// Draw order per particle: (R_p, R_g) per dimension.
inline void step_opso(SwarmState& state, const PsoParams& par, const Domain& d, Rng& rng,
                      Evaluator& ev) {
  const Vec g = state.best_x;
  for (Particle& p : state.particles) {
    if (ev.exhausted()) break;
    for (std::size_t i = 0; i < d.dim(); ++i) {
      double rp = rng.uniform01();
      double rg = rng.uniform01();
      p.v[i] = par.omega * p.v[i] + par.phi_p * rp * (p.best_x[i] - p.x[i]) +
               par.phi_g * rg * (g[i] - p.x[i]);
      p.x[i] += p.v[i];
    }
    clamp_to_domain(p.x, p.v, d);
    step_detail::finish_move(state, p, ev);
  }
  state.refresh_global_best();
}

// SPSO2011: v' = w v + (y - x) with y uniform in the ball around the center of
// gravity G = x + (phi_p CI + phi_g SI)/3; when p = g the social term drops and
// the denominator becomes 2.
inline void step_spso2011(SwarmState& state, const PsoParams& par, const Domain& d, Rng& rng,
                          Evaluator& ev) {
  const Vec g = state.best_x;
  for (Particle& p : state.particles) {
    if (ev.exhausted()) break;
    step_detail::spso_move(p, g, par, d, rng);
    step_detail::finish_move(state, p, ev);
  }
  state.refresh_global_best();
}

// Variant A: one surrogate-mean argmin per iteration becomes a third,
// heuristic influence h - x in the componentwise update. With phi_h = 0 this
// is exactly the OPSO step (same draws, same trace).
inline void step_variant_a(SwarmState& state, const PsoParams& par, const Domain& d, Rng& rng,
                           Evaluator& ev, const GpModel& model) {
  if (par.phi_h == 0.0) {
    step_opso(state, par, d, rng, ev);
    return;
  }
  const Vec h = surrogate_argmin(model, d, Acquisition::Mean, state.best_x);
  const Vec g = state.best_x;
  for (Particle& p : state.particles) {
    if (ev.exhausted()) break;
    if (par.heuristic_in_sphere) {
      const std::size_t dim = d.dim();
      Vec center(dim);
      for (std::size_t i = 0; i < dim; ++i)
        center[i] = p.x[i] + (par.phi_p * (p.best_x[i] - p.x[i]) +
                              par.phi_g * (g[i] - p.x[i]) +
                              par.phi_h * (h[i] - p.x[i])) / 4.0;
      Vec diff(dim);
      for (std::size_t i = 0; i < dim; ++i) diff[i] = center[i] - p.x[i];
      Vec y = sample_in_ball(rng, center, norm(diff));
      for (std::size_t i = 0; i < dim; ++i) {
        p.v[i] = par.omega * p.v[i] + (y[i] - p.x[i]);
        p.x[i] += p.v[i];
      }
    } else {
      for (std::size_t i = 0; i < d.dim(); ++i) {
        double rp = rng.uniform01();
        double rg = rng.uniform01();
        double rh = rng.uniform01();
        p.v[i] = par.omega * p.v[i] + par.phi_p * rp * (p.best_x[i] - p.x[i]) +
                 par.phi_g * rg * (g[i] - p.x[i]) + par.phi_h * rh * (h[i] - p.x[i]);
        p.x[i] += p.v[i];
      }
    }
    clamp_to_domain(p.x, p.v, d);
    step_detail::finish_move(state, p, ev);
  }
  state.refresh_global_best();
}

namespace step_detail {

inline std::size_t worst_particle(const SwarmState& state) {
  std::size_t worst = 0;
  for (std::size_t j = 1; j < state.particles.size(); ++j)
    if (state.particles[j].value > state.particles[worst].value) worst = j;
  return worst;
}

// Shared body of variants B/C: relocate the worst particle to `target`
// (velocity resampled componentwise standard normal, personal best kept only
// if it beats the new value), all other particles take SPSO2011 moves.
inline void relocation_step(SwarmState& state, const PsoParams& par, const Domain& d,
                            Rng& rng, Evaluator& ev, const Vec& target) {
  const Vec g = state.best_x;
  const std::size_t jstar = worst_particle(state);
  for (std::size_t j = 0; j < state.particles.size(); ++j) {
    if (ev.exhausted()) break;
    Particle& p = state.particles[j];
    if (j == jstar) {
      p.x = target;
      for (std::size_t i = 0; i < d.dim(); ++i) p.v[i] = rng.normal();
      p.value = ev.evaluate(p.x);
      p.eval_id = state.next_eval_id++;
      if (!(p.value > p.best_value)) {  // keep the old best only when strictly better
        p.best_value = p.value;
        p.best_x = p.x;
      }
    } else {
      spso_move(p, g, par, d, rng);
      finish_move(state, p, ev);
    }
  }
  state.refresh_global_best();
}

}  // namespace step_detail

// Variant B, heuristic exploitation: relocation target is the surrogate-mean
// minimizer, search started at the incumbent.
inline void step_variant_b(SwarmState& state, const PsoParams& par, const Domain& d, Rng& rng,
                           Evaluator& ev, const GpModel& model) {
  const Vec target = surrogate_argmin(model, d, Acquisition::Mean, state.best_x);
  step_detail::relocation_step(state, par, d, rng, ev, target);
}

// Variant C, heuristic exploration: C1 relocates to the minimizer of the
// lower confidence bound m - 1.6 sigma started at the incumbent; C2 relocates
// to a maximizer of sigma, its inner search started at the best of a 64-point
// seeded uniform scan (max-variance surfaces are flat near data, so the
// incumbent is a poor simplex seed).
inline void step_variant_c(SwarmState& state, const PsoParams& par, const Domain& d, Rng& rng,
                           Evaluator& ev, const GpModel& model, Variant kind) {
  Vec target;
  if (kind == Variant::C1) {
    target = surrogate_argmin(model, d, Acquisition::Lcb, state.best_x);
  } else {
    Vec start = state.best_x;
    double best_sigma = -1.0;
    for (int k = 0; k < 64; ++k) {
      Vec cand = uniform_in_domain(rng, d);
      double s = model.sigma_at(cand);
      if (s > best_sigma) {
        best_sigma = s;
        start = std::move(cand);
      }
    }
    target = surrogate_argmin(model, d, Acquisition::MaxVar, start);
  }
  step_detail::relocation_step(state, par, d, rng, ev, target);
}

// Observer slot for plotting/diagnostics; fires once per iteration after the
// surrogate fit and before the particles move.
struct Snapshot {
  const SwarmState& state;
  const GpModel* model;     // null when the iteration has no usable surrogate
  long steps_completed;     // 0 right after initialization
  long long evaluations;
};
using SnapshotHook = std::function<void(const Snapshot&)>;

namespace run_detail {

struct TrainSet {
  std::vector<Vec> x;
  Vec y;
};

// Memory-union-swarm training set; particle evaluations already present in
// memory (by id) are not duplicated.
inline TrainSet training_set(const SwarmState& state) {
  TrainSet t;
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(state.memory.size());
  for (const MemoryEntry& e : state.memory) {
    seen.insert(e.id);
    t.x.push_back(e.x);
    t.y.push_back(e.value);
  }
  for (const Particle& p : state.particles) {
    if (seen.count(p.eval_id)) continue;
    t.x.push_back(p.x);
    t.y.push_back(p.value);
  }
  return t;
}

inline void append_all_current(SwarmState& state, std::size_t cap) {
  std::unordered_set<std::uint64_t> seen;
  for (const MemoryEntry& e : state.memory) seen.insert(e.id);
  for (const Particle& p : state.particles)
    if (!seen.count(p.eval_id))
      state.memory.push_back(MemoryEntry{p.eval_id, p.x, p.value});
  if (cap > 0 && state.memory.size() > cap)  // no model for surprise ranking; drop oldest
    state.memory.erase(state.memory.begin(),
                       state.memory.begin() + static_cast<long>(state.memory.size() - cap));
}

inline long long auto_record_every(const RunConfig& cfg) {
  if (cfg.record_every > 0) return cfg.record_every;
  return cfg.budget <= 10000 ? 1 : 10;
}

inline void finalize_record(RunRecord& rec, const Evaluator& ev, const SwarmState* state) {
  rec.evaluations = ev.used();
  rec.best_value = ev.best();
  rec.best_x = ev.best_x();
  rec.wall_time_s = ev.elapsed_s();
  if (state) {
    // the evaluator incumbent and the swarm's best personal position agree
    rec.best_value = std::min(rec.best_value, state->best_value);
  }
  if (rec.trace.empty() || rec.trace.back().evals != rec.evaluations)
    rec.trace.push_back({rec.evaluations, rec.best_value, rec.wall_time_s});
}

}  // namespace run_detail

// One full swarm run: uniform initialization with normal velocities scaled to
// a tenth of the box, memory seeded with the initial sweep, then per-iteration
// surrogate fit / particle step / memory update until the budget is spent.
// Plain OPSO/SPSO2011 skip all surrogate work. Numeric failures in the GP
// degrade the iteration to the matching plain step; they never abort the run.
inline RunRecord run(Objective& objective, const Domain& domain, const PsoParams& params,
                     const RunConfig& cfg, const SnapshotHook& hook = {}) {
  if (params.variant == Variant::Bo)
    throw std::invalid_argument("run: the BO baseline has its own entry point");
  if (params.n_par < 1) throw std::invalid_argument("run: need at least one particle");
  if (cfg.budget < params.n_par)
    throw std::invalid_argument("run: budget must cover the initial sweep");
  if (objective.dim() != domain.dim())
    throw std::invalid_argument("run: objective/domain dimension mismatch");

  RunRecord rec;
  rec.variant = variant_name(params.variant);
  rec.seed = cfg.seed;

  MemoryConfig mem = cfg.memory;
  if (mem.cap == 0) mem.cap = 25 * static_cast<std::size_t>(params.n_par);
  mem.cap = std::max(mem.cap, static_cast<std::size_t>(params.n_par));

  Rng swarm_rng(derive_seed(cfg.seed, 1));
  Rng gp_rng(derive_seed(cfg.seed, 2));
  Evaluator ev(objective, cfg.budget, run_detail::auto_record_every(cfg), rec.trace);

  SwarmState state;
  state.particles.resize(static_cast<std::size_t>(params.n_par));
  for (Particle& p : state.particles) {
    p.x = uniform_in_domain(swarm_rng, domain);
    p.v.resize(domain.dim());
    for (std::size_t i = 0; i < domain.dim(); ++i)
      p.v[i] = 0.1 * domain.range(i) * swarm_rng.normal();
    p.value = ev.evaluate(p.x);
    p.eval_id = state.next_eval_id++;
    p.best_x = p.x;
    p.best_value = p.value;
    state.memory.push_back(MemoryEntry{p.eval_id, p.x, p.value});
  }
  state.refresh_global_best();

  const bool uses_gp = variant_uses_gp(params.variant);
  KernelParams kp;
  bool have_params = false;
  GpModel model;

  while (!ev.exhausted()) {
    long iter = ++state.iteration;
    IterationDiag diag;
    diag.iteration = iter;
    bool model_ok = false;

    if (uses_gp) {
      run_detail::TrainSet train = run_detail::training_set(state);
      diag.train_size = train.x.size();
      diag.refit = !have_params || ((iter - 1) % std::max(1, cfg.refit_every) == 0);
      if (diag.refit) {
        try {
          kp = fit_hyperparams(gp_rng, train.x, train.y, cfg.fit_restarts, domain.diameter());
          have_params = true;
        } catch (const FitFailure&) {
          // keep the previous parameters, if any
        }
      }
      if (have_params) {
        try {
          model = GpModel::fit(kp, std::move(train.x), train.y);
          model_ok = true;
          diag.jitter_escalations = model.jitter_escalations();
        } catch (const FactorizationFailure&) {
          model_ok = false;
        }
      }
    }

    if (hook) hook(Snapshot{state, model_ok ? &model : nullptr, iter - 1, ev.used()});

    switch (params.variant) {
      case Variant::Opso:
        step_opso(state, params, domain, swarm_rng, ev);
        break;
      case Variant::Spso2011:
        step_spso2011(state, params, domain, swarm_rng, ev);
        break;
      case Variant::A1:
      case Variant::A2:
      case Variant::A3:
        if (model_ok)
          step_variant_a(state, params, domain, swarm_rng, ev, model);
        else
          step_opso(state, params, domain, swarm_rng, ev);
        break;
      case Variant::B:
        if (model_ok)
          step_variant_b(state, params, domain, swarm_rng, ev, model);
        else
          step_spso2011(state, params, domain, swarm_rng, ev);
        break;
      case Variant::C1:
      case Variant::C2:
        if (model_ok)
          step_variant_c(state, params, domain, swarm_rng, ev, model, params.variant);
        else
          step_spso2011(state, params, domain, swarm_rng, ev);
        break;
      case Variant::Bo:
        break;  // unreachable
    }

    if (uses_gp) {
      if (model_ok)
        update_memory(state, model, mem);
      else
        run_detail::append_all_current(state, mem.cap);
    }
    diag.memory_size = state.memory.size();
    diag.surrogate_ok = model_ok;
    rec.diagnostics.push_back(diag);
  }

  rec.iterations = state.iteration;
  run_detail::finalize_record(rec, ev, &state);
  return rec;
}

// Sequential GP Bayesian optimization baseline: uniform initial design of
// 2D+1 points, then one LCB-argmin evaluation per iteration. The informative-
// observation heuristic bounds the training set exactly as in the swarm runs.
inline RunRecord run_bo_baseline(Objective& objective, const Domain& domain,
                                 const RunConfig& cfg) {
  if (objective.dim() != domain.dim())
    throw std::invalid_argument("run_bo_baseline: objective/domain dimension mismatch");
  const long long n_init =
      std::min<long long>(cfg.budget, 2 * static_cast<long long>(domain.dim()) + 1);
  if (cfg.budget < 1 || n_init < 1)
    throw std::invalid_argument("run_bo_baseline: budget must cover the initial design");

  RunRecord rec;
  rec.variant = variant_name(Variant::Bo);
  rec.seed = cfg.seed;

  MemoryConfig mem = cfg.memory;
  if (mem.cap == 0) mem.cap = 25 * static_cast<std::size_t>(std::max(1LL, n_init));

  Rng main_rng(derive_seed(cfg.seed, 1));
  Rng gp_rng(derive_seed(cfg.seed, 2));
  Evaluator ev(objective, cfg.budget, run_detail::auto_record_every(cfg), rec.trace);

  std::vector<MemoryEntry> memory;
  std::uint64_t next_id = 0;
  MemoryEntry latest;
  for (long long k = 0; k < n_init; ++k) {
    Vec x = uniform_in_domain(main_rng, domain);
    double v = ev.evaluate(x);
    latest = MemoryEntry{next_id++, std::move(x), v};
    memory.push_back(latest);
  }

  KernelParams kp;
  bool have_params = false;
  long iter = 0;
  while (!ev.exhausted()) {
    ++iter;
    IterationDiag diag;
    diag.iteration = iter;

    std::vector<Vec> tx;
    Vec ty;
    bool latest_in_memory = false;
    for (const MemoryEntry& e : memory) {
      tx.push_back(e.x);
      ty.push_back(e.value);
      if (e.id == latest.id) latest_in_memory = true;
    }
    if (!latest_in_memory) {
      tx.push_back(latest.x);
      ty.push_back(latest.value);
    }
    diag.train_size = tx.size();

    bool model_ok = false;
    GpModel model;
    diag.refit = !have_params || ((iter - 1) % std::max(1, cfg.refit_every) == 0);
    if (diag.refit) {
      try {
        kp = fit_hyperparams(gp_rng, tx, ty, cfg.fit_restarts, domain.diameter());
        have_params = true;
      } catch (const FitFailure&) {
      }
    }
    if (have_params) {
      try {
        model = GpModel::fit(kp, std::move(tx), ty);
        model_ok = true;
        diag.jitter_escalations = model.jitter_escalations();
      } catch (const FactorizationFailure&) {
      }
    }

    Vec x_next;
    if (model_ok) {
      // multistart LCB argmin: incumbent plus eight uniform seeds
      x_next = surrogate_argmin(model, domain, Acquisition::Lcb, ev.best_x());
      double best_acq = acquisition_value(model, Acquisition::Lcb, x_next);
      for (int s = 0; s < 8; ++s) {
        Vec cand = surrogate_argmin(model, domain, Acquisition::Lcb,
                                    uniform_in_domain(main_rng, domain));
        double a = acquisition_value(model, Acquisition::Lcb, cand);
        if (a < best_acq) {
          best_acq = a;
          x_next = std::move(cand);
        }
      }
    } else {
      x_next = uniform_in_domain(main_rng, domain);  // degrade to random search
    }

    double v = ev.evaluate(x_next);
    latest = MemoryEntry{next_id++, std::move(x_next), v};
    if (model_ok) {
      if (is_informative(model, mem.rho, latest.x, latest.value)) memory.push_back(latest);
      enforce_memory_cap(memory, model, mem.cap);
    } else {
      memory.push_back(latest);
    }

    diag.memory_size = memory.size();
    diag.surrogate_ok = model_ok;
    rec.diagnostics.push_back(diag);
  }

  rec.iterations = iter;
  run_detail::finalize_record(rec, ev, nullptr);
  return rec;
}

// Dispatch on the variant; the swarm algorithms and the BO baseline share the
// record format.
inline RunRecord optimize(Objective& objective, const Domain& domain, const PsoParams& params,
                          const RunConfig& cfg, const SnapshotHook& hook = {}) {
  if (params.variant == Variant::Bo) return run_bo_baseline(objective, domain, cfg);
  return run(objective, domain, params, cfg, hook);
}

}  // namespace gpswarm
