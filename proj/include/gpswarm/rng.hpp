#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace gpswarm {

// One SplitMix64 step. Only used for seed derivation, never as the run generator.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic child seed from a base seed and a salt. Chaining calls with
// distinct salts yields independent-looking streams for parallel runs.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
  std::uint64_t s = base ^ (0x9e3779b97f4a7c15ULL * (salt + 1));
  std::uint64_t a = splitmix64_next(s);
  std::uint64_t b = splitmix64_next(s);
  return a ^ (b >> 1);
}

// Seeded generator with hand-rolled distributions on top of mt19937_64.
// The engine's output sequence is fixed by the standard, but the std::
// distribution adaptors are not; rolling our own keeps draw sequences
// bit-identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Standard normal via Box-Muller; consumes exactly two uniform draws per call.
  double normal() {
    double u1 = 1.0 - uniform01();  // (0, 1], keeps the log finite
    double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  // Independent child stream; does not advance this generator.
  Rng child(std::uint64_t salt) const { return Rng(derive_seed(seed_, salt)); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace gpswarm
