#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>

#include "gpswarm/benchfns.hpp"
#include "gpswarm/optimizer.hpp"

using namespace gpswarm;

namespace {

Objective sphere_objective(std::size_t dim) {
  return Objective(dim, [](std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
  });
}

// state with hand-placed particles; bests already consistent
SwarmState make_state(const std::vector<Particle>& particles) {
  SwarmState s;
  s.particles = particles;
  s.next_eval_id = 1000;
  s.refresh_global_best();
  return s;
}

Particle make_particle(Vec x, Vec v, Vec best, double best_value, double value) {
  Particle p;
  p.x = std::move(x);
  p.v = std::move(v);
  p.best_x = std::move(best);
  p.best_value = best_value;
  p.value = value;
  return p;
}

GpModel bump_model(const Vec& x0, double y0) {
  return GpModel::fit(KernelParams{1.0, 0.0, 0.0, 0.6}, {x0}, Vec{y0});
}

}  // namespace

TEST_CASE("opso: stationary at the shared best with zero velocity") {
  Domain d = Domain::cube(2, -10.0, 10.0);
  Objective f = sphere_objective(2);
  Vec spot{1.0, -2.0};
  auto state = make_state({make_particle(spot, {0.0, 0.0}, spot, 5.0, 5.0)});
  PsoParams par = default_params(Variant::Opso);
  std::vector<TracePoint> trace;
  Evaluator ev(f, 10, 1, trace);
  Rng rng(1);
  step_opso(state, par, d, rng, ev);
  REQUIRE(state.particles[0].x == spot);
  REQUIRE(state.particles[0].v == Vec{0.0, 0.0});
}

TEST_CASE("opso: zero coefficients leave pure inertia") {
  Domain d = Domain::cube(2, -10.0, 10.0);
  Objective f = sphere_objective(2);
  auto state =
      make_state({make_particle({1.0, 1.0}, {0.25, -0.5}, {3.0, 3.0}, 18.0, 2.0)});
  PsoParams par;
  par.variant = Variant::Opso;
  par.omega = 1.0;
  par.phi_p = par.phi_g = 0.0;
  std::vector<TracePoint> trace;
  Evaluator ev(f, 10, 1, trace);
  Rng rng(1);
  step_opso(state, par, d, rng, ev);
  REQUIRE(state.particles[0].x == Vec{1.25, 0.5});
  REQUIRE(state.particles[0].v == Vec{0.25, -0.5});
}

TEST_CASE("opso: single 1D particle matches a scalar replay") {
  Domain d = Domain::cube(1, -100.0, 100.0);
  Objective f = sphere_objective(1);
  double x = 2.0, v = -0.5, best = 1.5;
  auto state = make_state({make_particle({x}, {v}, {best}, best * best, x * x)});
  PsoParams par;
  par.variant = Variant::Opso;
  par.omega = 0.9;
  par.phi_p = 1.3;
  par.phi_g = 0.7;
  std::vector<TracePoint> trace;
  Evaluator ev(f, 100, 1, trace);

  Rng step_rng(77);
  Rng replay(77);
  // three sweeps, replaying the exact draw order (R_p then R_g per dimension)
  double g = best;
  for (int it = 0; it < 3; ++it) {
    step_opso(state, par, d, step_rng, ev);
    double rp = replay.uniform01();
    double rg = replay.uniform01();
    v = par.omega * v + par.phi_p * rp * (best - x) + par.phi_g * rg * (g - x);
    x = x + v;
    REQUIRE(state.particles[0].x[0] == x);
    REQUIRE(state.particles[0].v[0] == v);
    double fx = x * x;
    if (fx < best * best) best = x, g = x;  // personal best equals global best here
  }
}

TEST_CASE("spso2011: p = g = x collapses to inertia exactly") {
  Domain d = Domain::cube(3, -5.0, 5.0);
  Objective f = sphere_objective(3);
  Vec spot{0.5, -0.25, 1.0};
  Vec vel{0.125, -0.5, 0.75};
  auto state = make_state({make_particle(spot, vel, spot, 100.0, 100.0)});
  PsoParams par = default_params(Variant::Spso2011);
  std::vector<TracePoint> trace;
  Evaluator ev(f, 10, 1, trace);
  Rng rng(5);
  step_spso2011(state, par, d, rng, ev);
  for (std::size_t i = 0; i < 3; ++i) {
    REQUIRE(state.particles[0].v[i] == par.omega * vel[i]);
    REQUIRE(state.particles[0].x[i] == spot[i] + par.omega * vel[i]);
  }
}

TEST_CASE("spso2011: ball sampling centers on G") {
  // omega = 0 and p = g != x: x' is uniform in the ball around G, so the
  // empirical mean over many single steps approaches G
  Domain d = Domain::cube(2, -50.0, 50.0);
  PsoParams par = default_params(Variant::Spso2011);
  par.omega = 0.0;
  Vec x{1.0, 1.0}, p{3.0, -1.0};
  Vec center(2);
  // p = g: degenerate rule G = x + phi_p (p - x)/2
  for (std::size_t i = 0; i < 2; ++i) center[i] = x[i] + 0.5 * par.phi_p * (p[i] - x[i]);
  Vec diff{center[0] - x[0], center[1] - x[1]};
  double radius = norm(diff);

  double mx = 0.0, my = 0.0;
  const int n = 10000;
  for (int rep = 0; rep < n; ++rep) {
    Objective f = sphere_objective(2);
    auto state = make_state({make_particle(x, {0.0, 0.0}, p, -1.0, 10.0)});
    std::vector<TracePoint> trace;
    Evaluator ev(f, 10, 1, trace);
    Rng rng(9000 + rep);
    step_spso2011(state, par, d, rng, ev);
    mx += state.particles[0].x[0];
    my += state.particles[0].x[1];
  }
  mx /= n;
  my /= n;
  REQUIRE(std::abs(mx - center[0]) < 0.05 * radius);
  REQUIRE(std::abs(my - center[1]) < 0.05 * radius);
}

TEST_CASE("spso2011: seeded two-particle run replays identically") {
  Domain d = Domain::cube(2, -5.0, 5.0);
  auto one_run = [&]() {
    Objective f = sphere_objective(2);
    PsoParams par = default_params(Variant::Spso2011);
    par.n_par = 2;
    RunConfig cfg;
    cfg.budget = 2 * 4;  // init + 3 steps
    cfg.seed = 314;
    return run(f, d, par, cfg);
  };
  RunRecord a = one_run();
  RunRecord b = one_run();
  REQUIRE(a.trace.size() == b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    REQUIRE(a.trace[i].evals == b.trace[i].evals);
    REQUIRE(a.trace[i].best == b.trace[i].best);
  }
  REQUIRE(a.best_x == b.best_x);
}

TEST_CASE("variant A: phi_h = 0 reduces to OPSO draw-for-draw") {
  Domain d = Domain::cube(2, -3.0, 3.0);
  GpModel model = bump_model(Vec{0.0, 0.0}, -1.0);
  PsoParams par;
  par.variant = Variant::A3;
  par.omega = 0.42;
  par.phi_p = 0.75;
  par.phi_g = 1.55;
  par.phi_h = 0.0;

  auto particles = {make_particle({1.0, 2.0}, {0.1, -0.1}, {0.5, 0.5}, 0.5, 5.0),
                    make_particle({-1.0, -2.0}, {0.2, 0.3}, {-0.5, -0.5}, 0.6, 5.0)};
  auto sa = make_state(particles);
  auto so = make_state(particles);

  Objective fa = sphere_objective(2), fo = sphere_objective(2);
  std::vector<TracePoint> ta, to;
  Evaluator ea(fa, 100, 1, ta), eo(fo, 100, 1, to);
  Rng ra(55), ro(55);
  for (int it = 0; it < 5; ++it) {
    step_variant_a(sa, par, d, ra, ea, model);
    step_opso(so, par, d, ro, eo);
  }
  for (std::size_t j = 0; j < sa.particles.size(); ++j) {
    REQUIRE(sa.particles[j].x == so.particles[j].x);
    REQUIRE(sa.particles[j].v == so.particles[j].v);
  }
}

TEST_CASE("variant A: all influences vanish at a shared fixed point") {
  // x = p = g = h: craft the bump minimum at the particle position
  Vec spot{0.25, -0.5};
  GpModel model = bump_model(spot, -2.0);
  Domain d = Domain::cube(2, -3.0, 3.0);
  PsoParams par = default_params(Variant::A1);
  Vec vel{0.5, 0.25};
  auto state = make_state({make_particle(spot, vel, spot, -1.0, -1.0)});
  Objective f = sphere_objective(2);
  std::vector<TracePoint> trace;
  Evaluator ev(f, 10, 1, trace);
  Rng rng(3);
  step_variant_a(state, par, d, rng, ev, model);
  // h comes from the simplex, so it matches spot only to optimizer tolerance
  for (std::size_t i = 0; i < 2; ++i)
    REQUIRE(state.particles[0].v[i] == Catch::Approx(par.omega * vel[i]).margin(1e-3));
}

TEST_CASE("variant A: single-step expectation matches the half-weight formula") {
  // dense quadratic design saturates the surrogate; h is the quadratic minimum
  std::vector<Vec> pts;
  Vec ys;
  for (int i = 0; i <= 30; ++i) {
    double x = -2.0 + i * (4.0 / 30.0);
    pts.push_back(Vec{x});
    ys.push_back((x - 0.4) * (x - 0.4));
  }
  GpModel model = GpModel::fit(KernelParams{2.0, 0.0, 0.0, 1.2}, pts, ys);
  Domain d = Domain::cube(1, -2.0, 2.0);

  PsoParams par = default_params(Variant::A2);
  const double x = -1.0, v = 0.3, p = -1.3, g = 1.4;
  Vec h = surrogate_argmin(model, d, Acquisition::Mean, Vec{g});
  REQUIRE(h[0] == Catch::Approx(0.4).margin(1e-2));

  double sum_v = 0.0;
  const int n = 10000;
  for (int rep = 0; rep < n; ++rep) {
    auto state = make_state({make_particle({x}, {v}, {p}, 1.69, 1.0),
                             make_particle({g}, {0.0}, {g}, 0.5, 0.5)});
    Objective f = sphere_objective(1);
    std::vector<TracePoint> trace;
    Evaluator ev(f, 10, 1, trace);
    Rng rng(40000 + rep);
    step_variant_a(state, par, d, rng, ev, model);
    sum_v += state.particles[0].v[0];
  }
  double mean_v = sum_v / n;
  double expected = par.omega * v + 0.5 * (par.phi_p * (p - x) + par.phi_g * (g - x) +
                                           par.phi_h * (h[0] - x));
  REQUIRE(mean_v == Catch::Approx(expected).epsilon(0.02));
}

TEST_CASE("variant A: the spherical-heuristic flag changes the kinematics") {
  Domain d = Domain::cube(2, -3.0, 3.0);
  GpModel model = bump_model(Vec{0.5, 0.5}, -2.0);
  PsoParams par = default_params(Variant::A3);
  auto base = {make_particle({1.0, -1.0}, {0.1, 0.1}, {0.0, 0.0}, 0.0, 2.0)};
  auto s1 = make_state(base);
  auto s2 = make_state(base);
  PsoParams par_sphere = par;
  par_sphere.heuristic_in_sphere = true;

  Objective f1 = sphere_objective(2), f2 = sphere_objective(2);
  std::vector<TracePoint> t1, t2;
  Evaluator e1(f1, 10, 1, t1), e2(f2, 10, 1, t2);
  Rng r1(8), r2(8);
  step_variant_a(s1, par, d, r1, e1, model);
  step_variant_a(s2, par_sphere, d, r2, e2, model);
  REQUIRE(s1.particles[0].x != s2.particles[0].x);
  REQUIRE(d.contains(s2.particles[0].x));
}

TEST_CASE("variant B: relocation targets the surrogate minimum and resamples velocity") {
  Domain d = Domain::cube(2, -2.0, 2.0);
  Vec worst_pos{0.7, -0.3};
  GpModel model = bump_model(worst_pos, -5.0);
  Vec target = surrogate_argmin(model, d, Acquisition::Mean, Vec{-1.0, -1.0});
  REQUIRE(norm(Vec{target[0] - worst_pos[0], target[1] - worst_pos[1]}) < 1e-3);

  PsoParams par = default_params(Variant::B);
  auto state = make_state({make_particle({-1.0, -1.0}, {0.0, 0.0}, {-1.0, -1.0}, 2.0, 2.0),
                           make_particle(worst_pos, {9.0, 9.0}, worst_pos, 50.0, 50.0)});
  Objective f = sphere_objective(2);
  std::vector<TracePoint> trace;
  Evaluator ev(f, 10, 1, trace);
  Rng rng(12);
  step_variant_b(state, par, d, rng, ev, model);

  const Particle& relocated = state.particles[1];
  // position is the relocation target (a near no-op here), velocity is fresh
  REQUIRE(norm(Vec{relocated.x[0] - worst_pos[0], relocated.x[1] - worst_pos[1]}) < 1e-3);
  REQUIRE(relocated.v != Vec{9.0, 9.0});
  // f(target) ~ 0.58 beats the old personal best of 50: case rule updates p
  REQUIRE(relocated.best_x == relocated.x);
  REQUIRE(relocated.best_value == relocated.value);
}

TEST_CASE("variant B: a better old personal best survives the relocation") {
  Domain d = Domain::cube(1, -2.0, 2.0);
  GpModel model = bump_model(Vec{1.0}, -5.0);
  PsoParams par = default_params(Variant::B);
  // the worst particle already owns an excellent personal best
  auto state = make_state({make_particle({0.5}, {0.0}, {0.01}, 0.0001, 9.0)});
  Objective f = sphere_objective(1);
  std::vector<TracePoint> trace;
  Evaluator ev(f, 10, 1, trace);
  Rng rng(4);
  step_variant_b(state, par, d, rng, ev, model);
  REQUIRE(state.particles[0].best_x == Vec{0.01});
  REQUIRE(state.particles[0].best_value == 0.0001);
}

TEST_CASE("variant B: a single particle is always the relocated one") {
  Domain d = Domain::cube(1, -2.0, 2.0);
  GpModel model = bump_model(Vec{-0.5}, -3.0);
  PsoParams par = default_params(Variant::B);
  par.n_par = 1;
  auto state = make_state({make_particle({1.5}, {0.25}, {1.5}, 2.25, 2.25)});
  // the step's inner search starts at the incumbent; replicate it exactly
  Vec target = surrogate_argmin(model, d, Acquisition::Mean, state.best_x);
  Objective f = sphere_objective(1);
  std::vector<TracePoint> trace;
  Evaluator ev(f, 10, 1, trace);
  Rng step_rng(21);
  step_variant_b(state, par, d, step_rng, ev, model);
  REQUIRE(state.particles[0].x == target);
  // velocity equals the first normal draw of the same stream: no ball sampling
  Rng replay(21);
  REQUIRE(state.particles[0].v[0] == replay.normal());
}

TEST_CASE("variant C1 coincides with B on a saturated surface") {
  // tiny amplitude: sigma ~ 0 everywhere, LCB degenerates to the mean
  std::vector<Vec> pts;
  Vec ys;
  for (int i = 0; i <= 40; ++i) {
    double x = -2.0 + i * 0.1;
    pts.push_back(Vec{x});
    ys.push_back(std::cos(x) + 0.2 * x);
  }
  GpModel model = GpModel::fit(KernelParams{2.0, 0.0, 0.0, 1.0}, pts, ys);
  Domain d = Domain::cube(1, -2.0, 2.0);
  Vec b_target = surrogate_argmin(model, d, Acquisition::Mean, Vec{0.0});
  Vec c_target = surrogate_argmin(model, d, Acquisition::Lcb, Vec{0.0});
  REQUIRE(std::abs(b_target[0] - c_target[0]) < 1e-2);
}

TEST_CASE("variant C2 relocates into the unexplored region") {
  Domain d = Domain::cube(2, -5.0, 5.0);
  Vec center{0.0, 0.0};
  GpModel model = GpModel::fit(KernelParams{1.0, 0.0, 0.1, 1.0}, {center}, Vec{0.5});

  PsoParams par = default_params(Variant::C2);
  auto state = make_state({make_particle(center, {0.0, 0.0}, center, 0.5, 0.5)});
  Objective f = sphere_objective(2);
  std::vector<TracePoint> trace;
  Evaluator ev(f, 10, 1, trace);
  Rng rng(31);
  step_variant_c(state, par, d, rng, ev, model, Variant::C2);
  const Vec& target = state.particles[0].x;
  REQUIRE(model.sigma_at(target) >= model.sigma_at(center));
  REQUIRE(norm(target) > 1.0);  // far from the lone observation

  // grid oracle: the reached sigma is essentially the best on the box
  double best_sigma = 0.0;
  for (int i = 0; i <= 50; ++i)
    for (int j = 0; j <= 50; ++j)
      best_sigma = std::max(best_sigma, model.sigma_at(Vec{-5.0 + 0.2 * i, -5.0 + 0.2 * j}));
  REQUIRE(model.sigma_at(target) >= best_sigma - 1e-6);
}

TEST_CASE("run: budget equal to the swarm size stops after initialization") {
  Domain d = Domain::cube(3, -4.0, 4.0);
  Objective f = sphere_objective(3);
  PsoParams par = default_params(Variant::Spso2011);
  par.n_par = 10;
  RunConfig cfg;
  cfg.budget = 10;
  cfg.seed = 5;
  RunRecord rec = run(f, d, par, cfg);
  REQUIRE(rec.evaluations == 10);
  REQUIRE(rec.iterations == 0);
  REQUIRE(f.eval_count() == 10);
  REQUIRE(rec.trace.back().best == rec.best_value);
}

TEST_CASE("run: spso2011 contracts on the 2D sphere") {
  Domain d = Domain::cube(2, -100.0, 100.0);
  Objective f = sphere_objective(2);
  PsoParams par = default_params(Variant::Spso2011);
  RunConfig cfg;
  cfg.budget = 5000;
  cfg.seed = 99;
  RunRecord rec = run(f, d, par, cfg);
  REQUIRE(rec.best_value <= 1e-4);
}

TEST_CASE("run: traces are monotone and budgets exact across variants") {
  Domain d = Domain::cube(2, -5.0, 5.0);
  for (Variant v : {Variant::Opso, Variant::Spso2011, Variant::A3, Variant::B, Variant::C1,
                    Variant::C2}) {
    Objective f = sphere_objective(2);
    PsoParams par = default_params(v);
    par.n_par = 7;
    RunConfig cfg;
    cfg.budget = 7 * 4 + 3;  // ends mid-sweep
    cfg.seed = 17;
    RunRecord rec = run(f, d, par, cfg);
    INFO(variant_name(v));
    REQUIRE(rec.evaluations == cfg.budget);
    REQUIRE(f.eval_count() == cfg.budget);
    REQUIRE(rec.iterations == 4);
    for (std::size_t i = 1; i < rec.trace.size(); ++i) {
      REQUIRE(rec.trace[i].best <= rec.trace[i - 1].best);
      REQUIRE(rec.trace[i].evals > rec.trace[i - 1].evals);
    }
  }
}

TEST_CASE("run: personal and global bests dominate the history") {
  Domain d = Domain::cube(2, -5.0, 5.0);
  Objective f = sphere_objective(2);
  PsoParams par = default_params(Variant::C1);
  par.n_par = 6;
  RunConfig cfg;
  cfg.budget = 6 * 8;
  cfg.seed = 23;

  std::map<std::size_t, double> prev_best;
  bool saw_snapshots = false;
  auto hook = [&](const Snapshot& snap) {
    saw_snapshots = true;
    double global = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < snap.state.particles.size(); ++j) {
      const Particle& p = snap.state.particles[j];
      REQUIRE(p.best_value <= p.value);
      if (auto it = prev_best.find(j); it != prev_best.end())
        REQUIRE(p.best_value <= it->second);
      prev_best[j] = p.best_value;
      global = std::min(global, p.best_value);
    }
    REQUIRE(snap.state.best_value == global);
  };
  run(f, d, par, cfg, hook);
  REQUIRE(saw_snapshots);
}

TEST_CASE("run: identical seeds give identical traces for every variant") {
  BenchOptions opt;
  opt.with_shift = true;
  opt.seed = 8;
  opt.domain = {{-5.0, 5.0}};
  BenchSpec spec = make_spec("rastrigin", 2, opt);
  for (Variant v : {Variant::Opso, Variant::Spso2011, Variant::A3, Variant::B, Variant::C1,
                    Variant::C2, Variant::Bo}) {
    auto one = [&]() {
      Objective f = make_function(spec);
      PsoParams par = default_params(v);
      par.n_par = 8;
      RunConfig cfg;
      cfg.budget = 80;
      cfg.seed = 424242;
      return optimize(f, spec.domain, par, cfg);
    };
    RunRecord a = one();
    RunRecord b = one();
    INFO(variant_name(v));
    REQUIRE(a.evaluations == b.evaluations);
    REQUIRE(a.best_value == b.best_value);
    REQUIRE(a.best_x == b.best_x);
    REQUIRE(a.trace.size() == b.trace.size());
    for (std::size_t i = 0; i < a.trace.size(); ++i)
      REQUIRE(a.trace[i].best == b.trace[i].best);
  }
}

TEST_CASE("run: variant A with phi_h = 0 replays the OPSO evaluation trace") {
  Domain d = Domain::cube(2, -5.0, 5.0);
  PsoParams a3 = default_params(Variant::A3);
  a3.phi_h = 0.0;
  PsoParams opso;
  opso.variant = Variant::Opso;
  opso.omega = a3.omega;
  opso.phi_p = a3.phi_p;
  opso.phi_g = a3.phi_g;
  opso.n_par = a3.n_par = 6;

  RunConfig cfg;
  cfg.budget = 6 * 51;  // 50 iterations past initialization
  cfg.seed = 1234;

  Objective fa = sphere_objective(2), fo = sphere_objective(2);
  RunRecord ra = run(fa, d, a3, cfg);
  RunRecord ro = run(fo, d, opso, cfg);
  REQUIRE(ra.trace.size() == ro.trace.size());
  for (std::size_t i = 0; i < ra.trace.size(); ++i)
    REQUIRE(ra.trace[i].best == ro.trace[i].best);
  REQUIRE(ra.best_x == ro.best_x);
}

TEST_CASE("bo baseline: budget equal to the design size returns its best") {
  Domain d = Domain::cube(2, -1.0, 1.0);
  Objective f = sphere_objective(2);
  RunConfig cfg;
  cfg.budget = 5;  // 2D + 1
  cfg.seed = 3;
  RunRecord rec = run_bo_baseline(f, d, cfg);
  REQUIRE(rec.evaluations == 5);
  REQUIRE(rec.iterations == 0);
}

TEST_CASE("bo baseline: solves a 1D quadratic within budget 30") {
  Domain d = Domain::cube(1, -1.0, 1.0);
  Objective f = Objective(1, [](std::span<const double> x) {
    return (x[0] - 0.3) * (x[0] - 0.3) - 0.7;
  });
  RunConfig cfg;
  cfg.budget = 30;
  cfg.seed = 11;
  RunRecord rec = run_bo_baseline(f, d, cfg);
  REQUIRE(rec.best_value - (-0.7) <= 1e-2);
  REQUIRE(rec.evaluations == 30);
}

TEST_CASE("default presets match the published table") {
  PsoParams a1 = default_params(Variant::A1);
  REQUIRE(a1.omega == 0.42);
  REQUIRE(a1.phi_p == 1.2);
  REQUIRE(a1.phi_g == 1.2);
  REQUIRE(a1.phi_h == 0.75);
  PsoParams a2 = default_params(Variant::A2);
  REQUIRE(a2.phi_p == 1.55);
  REQUIRE(a2.phi_g == 0.75);
  PsoParams a3 = default_params(Variant::A3);
  REQUIRE(a3.phi_p == 0.75);
  REQUIRE(a3.phi_g == 1.55);
  PsoParams b = default_params(Variant::B);
  REQUIRE(b.omega == 0.42);
  REQUIRE(b.phi_p == 1.55);
  REQUIRE(b.phi_g == 1.55);
  REQUIRE(b.phi_h == 0.0);
  PsoParams spso = default_params(Variant::Spso2011);
  REQUIRE(spso.omega == Catch::Approx(1.0 / (2.0 * std::log(2.0))).margin(1e-15));
  REQUIRE(spso.phi_p == Catch::Approx(0.5 + std::log(2.0)).margin(1e-15));
  REQUIRE(spso.phi_g == spso.phi_p);
  REQUIRE(default_params(Variant::C1).n_par == 50);
}

TEST_CASE("variant parsing round-trips") {
  for (Variant v : {Variant::Opso, Variant::Spso2011, Variant::A1, Variant::A2, Variant::A3,
                    Variant::B, Variant::C1, Variant::C2, Variant::Bo})
    REQUIRE(variant_from_name(variant_name(v)) == v);
  REQUIRE(variant_from_name("SPSO2011") == Variant::Spso2011);
  REQUIRE_THROWS_AS(variant_from_name("nope"), std::invalid_argument);
}

TEST_CASE("run rejects invalid configurations") {
  Domain d = Domain::cube(2, -1.0, 1.0);
  Objective f = sphere_objective(2);
  PsoParams par = default_params(Variant::Spso2011);
  RunConfig cfg;
  cfg.budget = 10;  // below n_par = 50
  REQUIRE_THROWS_AS(run(f, d, par, cfg), std::invalid_argument);
  Objective f3 = sphere_objective(3);
  cfg.budget = 100;
  REQUIRE_THROWS_AS(run(f3, d, par, cfg), std::invalid_argument);
  REQUIRE_THROWS_AS(run(f, d, default_params(Variant::Bo), cfg), std::invalid_argument);
}
