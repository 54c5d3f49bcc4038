#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpswarm/rng.hpp"

namespace gpswarm {

using Vec = std::vector<double>;

inline double squared_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

inline double norm(std::span<const double> a) {
  double s = 0.0;
  for (double v : a) s += v * v;
  return std::sqrt(s);
}

// Axis-aligned box search region.
struct Domain {
  Vec lower;
  Vec upper;

  Domain(Vec lo, Vec up) : lower(std::move(lo)), upper(std::move(up)) {
    if (lower.empty() || lower.size() != upper.size())
      throw std::invalid_argument("Domain: bounds must be non-empty and of equal length");
    for (std::size_t i = 0; i < lower.size(); ++i)
      if (!(lower[i] < upper[i]))
        throw std::invalid_argument("Domain: lower bound must be strictly below upper bound");
  }

  static Domain cube(std::size_t dim, double lo, double hi) {
    return Domain(Vec(dim, lo), Vec(dim, hi));
  }

  std::size_t dim() const { return lower.size(); }
  double range(std::size_t i) const { return upper[i] - lower[i]; }

  double diameter() const {
    double s = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) s += range(i) * range(i);
    return std::sqrt(s);
  }

  bool contains(std::span<const double> x) const {
    if (x.size() != dim()) return false;
    for (std::size_t i = 0; i < dim(); ++i)
      if (x[i] < lower[i] || x[i] > upper[i]) return false;
    return true;
  }

  Vec clamp(std::span<const double> x) const {
    Vec out(x.begin(), x.end());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (out[i] < lower[i]) out[i] = lower[i];
      if (out[i] > upper[i]) out[i] = upper[i];
    }
    return out;
  }
};

// Black-box objective with an evaluation counter. The counter is shared across
// copies of the handle so the caller's accounting survives passing by value.
class Objective {
 public:
  Objective(std::size_t dim, std::function<double(std::span<const double>)> fn)
      : dim_(dim), fn_(std::move(fn)), calls_(std::make_shared<std::atomic<long long>>(0)) {
    if (dim_ == 0) throw std::invalid_argument("Objective: dimension must be positive");
    if (!fn_) throw std::invalid_argument("Objective: missing callable");
  }

  std::size_t dim() const { return dim_; }
  long long eval_count() const { return calls_->load(); }

  double operator()(std::span<const double> x) {
    calls_->fetch_add(1, std::memory_order_relaxed);
    return fn_(x);
  }

 private:
  std::size_t dim_;
  std::function<double(std::span<const double>)> fn_;
  std::shared_ptr<std::atomic<long long>> calls_;
};

struct Particle {
  Vec x;              // current position
  Vec v;              // current velocity
  Vec best_x;         // personal best position
  double best_value = std::numeric_limits<double>::infinity();
  double value = std::numeric_limits<double>::infinity();  // objective at x
  std::uint64_t eval_id = 0;  // id of the evaluation that produced `value`
};

// One retained observation. Entries are identified by evaluation id, not by
// coordinates; duplicate coordinates at distinct ids are distinct points.
struct MemoryEntry {
  std::uint64_t id = 0;
  Vec x;
  double value = 0.0;
};

struct SwarmState {
  std::vector<Particle> particles;
  Vec best_x;
  double best_value = std::numeric_limits<double>::infinity();
  std::vector<MemoryEntry> memory;
  long iteration = 0;
  std::uint64_t next_eval_id = 0;

  // Global best is defined as the minimum over personal bests.
  void refresh_global_best() {
    for (const Particle& p : particles) {
      if (p.best_value < best_value) {
        best_value = p.best_value;
        best_x = p.best_x;
      }
    }
  }
};

inline Vec uniform_in_domain(Rng& rng, const Domain& d) {
  Vec x(d.dim());
  for (std::size_t i = 0; i < d.dim(); ++i) x[i] = rng.uniform(d.lower[i], d.upper[i]);
  return x;
}

// Uniform draw from the closed ball around `center`. Direction comes from a
// normalized Gaussian vector, the radius from radius * u^(1/D); rejection-free.
// Consumes exactly D normal draws followed by one uniform draw.
inline Vec sample_in_ball(Rng& rng, std::span<const double> center, double radius) {
  const std::size_t dim = center.size();
  Vec dir(dim);
  double n2 = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    dir[i] = rng.normal();
    n2 += dir[i] * dir[i];
  }
  double u = rng.uniform01();
  Vec out(center.begin(), center.end());
  if (radius <= 0.0) return out;
  double nrm = std::sqrt(n2);
  if (nrm == 0.0) {  // all-zero Gaussian vector; fall back to a fixed direction
    dir.assign(dim, 0.0);
    dir[0] = 1.0;
    nrm = 1.0;
  }
  double scale = radius * std::pow(u, 1.0 / static_cast<double>(dim)) / nrm;
  for (std::size_t i = 0; i < dim; ++i) out[i] += scale * dir[i];
  return out;
}

// Absorbing walls with damped reflection: out-of-bounds components are set to
// the violated bound and the matching velocity component becomes -0.5 * v.
inline void clamp_to_domain(Vec& x, Vec& v, const Domain& d) {
  for (std::size_t i = 0; i < d.dim(); ++i) {
    if (x[i] < d.lower[i]) {
      x[i] = d.lower[i];
      v[i] = -0.5 * v[i];
    } else if (x[i] > d.upper[i]) {
      x[i] = d.upper[i];
      v[i] = -0.5 * v[i];
    }
  }
}

}  // namespace gpswarm
