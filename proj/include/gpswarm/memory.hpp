#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>
#include <vector>

#include "gpswarm/core.hpp"
#include "gpswarm/gp.hpp"

namespace gpswarm {

struct MemoryConfig {
  double rho = 1.15;    // confidence multiplier; 1.15 ~ the 75% interval
  std::size_t cap = 0;  // hard bound on retained entries; 0 = caller default
};

// An observation is informative when it falls outside the model's
// [mu - rho sigma, mu + rho sigma] band at its own location.
inline bool is_informative(const GpModel& model, double rho, std::span<const double> x,
                           double value) {
  auto [mu, var] = model.mean_var_at(x);
  return std::abs(value - mu) > rho * std::sqrt(var);
}

inline std::vector<MemoryEntry> select_informative(const GpModel& model,
                                                   const MemoryConfig& cfg,
                                                   const std::vector<MemoryEntry>& batch) {
  std::vector<MemoryEntry> kept;
  for (const MemoryEntry& e : batch)
    if (is_informative(model, cfg.rho, e.x, e.value)) kept.push_back(e);
  return kept;
}

// Standardized residual |f(x) - mu(x)| / sigma(x); infinite when sigma = 0 and
// the value deviates, zero when it matches exactly.
inline double surprise(const GpModel& model, const MemoryEntry& e) {
  auto [mu, var] = model.mean_var_at(e.x);
  double dev = std::abs(e.value - mu);
  double sigma = std::sqrt(var);
  if (sigma == 0.0) return dev == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return dev / sigma;
}

// Evict the least surprising entries until the cap holds. Ties broken by id
// (older entries leave first) so eviction is deterministic.
inline void enforce_memory_cap(std::vector<MemoryEntry>& memory, const GpModel& model,
                               std::size_t cap) {
  if (cap == 0 || memory.size() <= cap) return;
  std::vector<std::pair<double, std::size_t>> ranked(memory.size());
  for (std::size_t i = 0; i < memory.size(); ++i) ranked[i] = {surprise(model, memory[i]), i};
  std::sort(ranked.begin(), ranked.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;  // most surprising first
    return memory[a.second].id > memory[b.second].id;
  });
  ranked.resize(cap);
  std::sort(ranked.begin(), ranked.end(),
            [&](const auto& a, const auto& b) { return memory[a.second].id < memory[b.second].id; });
  std::vector<MemoryEntry> survivors;
  survivors.reserve(cap);
  for (const auto& [s, idx] : ranked) survivors.push_back(std::move(memory[idx]));
  memory = std::move(survivors);
}

// Memory update of one iteration: append the informative subset of the current
// particle evaluations (skipping ids already present), then enforce the cap.
// The full current sweep still reaches the next fit transiently through the
// memory-union-swarm training set; only the selected points persist.
inline void update_memory(SwarmState& state, const GpModel& model, const MemoryConfig& cfg) {
  std::unordered_set<std::uint64_t> present;
  present.reserve(state.memory.size());
  for (const MemoryEntry& e : state.memory) present.insert(e.id);

  std::vector<MemoryEntry> batch;
  batch.reserve(state.particles.size());
  for (const Particle& p : state.particles) {
    if (present.count(p.eval_id)) continue;
    batch.push_back(MemoryEntry{p.eval_id, p.x, p.value});
  }
  for (MemoryEntry& e : select_informative(model, cfg, batch))
    state.memory.push_back(std::move(e));
  enforce_memory_cap(state.memory, model, cfg.cap);
}

}  // namespace gpswarm
