#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gpswarm/core.hpp"
#include "gpswarm/rng.hpp"

namespace gpswarm {

struct UnknownFunction : std::invalid_argument {
  explicit UnknownFunction(const std::string& name)
      : std::invalid_argument("unknown benchmark function: " + name) {}
};

namespace bench_detail {

constexpr double kPi = 3.14159265358979323846;
constexpr double kE = 2.71828182845904523536;
// x* sin(sqrt(x*)) at the Schwefel optimum x* = 420.9687462275036
constexpr double kSchwefelOffset = 418.98288727243370;
constexpr double kSchwefelOpt = 420.9687462275036;

inline double sphere(std::span<const double> z) {
  double s = 0.0;
  for (double v : z) s += v * v;
  return s;
}

inline double elliptic(std::span<const double> z) {
  const std::size_t d = z.size();
  double s = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    double e = d > 1 ? 6.0 * static_cast<double>(i) / static_cast<double>(d - 1) : 0.0;
    s += std::pow(10.0, e) * z[i] * z[i];
  }
  return s;
}

inline double bent_cigar(std::span<const double> z) {
  double s = z[0] * z[0];
  for (std::size_t i = 1; i < z.size(); ++i) s += 1e6 * z[i] * z[i];
  return s;
}

inline double discus(std::span<const double> z) {
  double s = 1e6 * z[0] * z[0];
  for (std::size_t i = 1; i < z.size(); ++i) s += z[i] * z[i];
  return s;
}

inline double diff_powers(std::span<const double> z) {
  const std::size_t d = z.size();
  double s = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    double e = 2.0 + (d > 1 ? 4.0 * static_cast<double>(i) / static_cast<double>(d - 1) : 0.0);
    s += std::pow(std::abs(z[i]), e);
  }
  return s;
}

inline double rosenbrock(std::span<const double> z) {
  if (z.size() == 1) return (1.0 - z[0]) * (1.0 - z[0]);
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < z.size(); ++i) {
    double a = z[i + 1] - z[i] * z[i];
    double b = z[i] - 1.0;
    s += 100.0 * a * a + b * b;
  }
  return s;
}

inline double schaffer_f7(std::span<const double> z) {
  const std::size_t d = z.size();
  if (d == 1) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < d; ++i) {
    double si = std::sqrt(z[i] * z[i] + z[i + 1] * z[i + 1]);
    double t = std::sin(50.0 * std::pow(si, 0.2));
    s += std::sqrt(si) * (1.0 + t * t);
  }
  s /= static_cast<double>(d - 1);
  return s * s;
}

inline double ackley(std::span<const double> z) {
  const double d = static_cast<double>(z.size());
  double sq = 0.0, cs = 0.0;
  for (double v : z) {
    sq += v * v;
    cs += std::cos(2.0 * kPi * v);
  }
  return -20.0 * std::exp(-0.2 * std::sqrt(sq / d)) - std::exp(cs / d) + 20.0 + kE;
}

inline double griewank(std::span<const double> z) {
  double s = 0.0, p = 1.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    s += z[i] * z[i];
    p *= std::cos(z[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return 1.0 + s / 4000.0 - p;
}

inline double rastrigin(std::span<const double> z) {
  double s = 10.0 * static_cast<double>(z.size());
  for (double v : z) s += v * v - 10.0 * std::cos(2.0 * kPi * v);
  return s;
}

inline double schwefel(std::span<const double> z) {
  double s = kSchwefelOffset * static_cast<double>(z.size());
  for (double v : z) s -= v * std::sin(std::sqrt(std::abs(v)));
  return s;
}

inline double expanded_schaffer_f6(std::span<const double> z) {
  auto g = [](double x, double y) {
    double r2 = x * x + y * y;
    double t = std::sin(std::sqrt(r2));
    double denom = 1.0 + 0.001 * r2;
    return 0.5 + (t * t - 0.5) / (denom * denom);
  };
  const std::size_t d = z.size();
  double s = 0.0;
  for (std::size_t i = 0; i < d; ++i) s += g(z[i], z[(i + 1) % d]);
  return s;
}

}  // namespace bench_detail

struct FunctionInfo {
  std::string_view name;
  double default_lo, default_hi;
  double cec_offset;  // target value f(x*) in the CEC2013 listing
  double (*raw)(std::span<const double>);
  double optimum_coord;  // raw optimum is this value repeated per dimension
};

inline const std::vector<FunctionInfo>& function_registry() {
  using namespace bench_detail;
  static const std::vector<FunctionInfo> reg = {
      {"sphere", -100.0, 100.0, -1400.0, &sphere, 0.0},
      {"elliptic", -100.0, 100.0, -1300.0, &elliptic, 0.0},
      {"bent_cigar", -100.0, 100.0, -1200.0, &bent_cigar, 0.0},
      {"discus", -100.0, 100.0, -1100.0, &discus, 0.0},
      {"diff_powers", -100.0, 100.0, -1000.0, &diff_powers, 0.0},
      {"rosenbrock", -100.0, 100.0, -900.0, &rosenbrock, 1.0},
      {"schaffer_f7", -100.0, 100.0, -800.0, &schaffer_f7, 0.0},
      {"ackley", -100.0, 100.0, -700.0, &ackley, 0.0},
      {"griewank", -100.0, 100.0, -500.0, &griewank, 0.0},
      {"rastrigin", -100.0, 100.0, -400.0, &rastrigin, 0.0},
      {"schwefel", -500.0, 500.0, -100.0, &schwefel, kSchwefelOpt},
      {"expanded_schaffer_f6", -100.0, 100.0, 600.0, &expanded_schaffer_f6, 0.0},
  };
  return reg;
}

inline const FunctionInfo& function_info(const std::string& name) {
  for (const FunctionInfo& f : function_registry())
    if (f.name == name) return f;
  throw UnknownFunction(name);
}

// Rotation matrix with determinant +1 from twice-orthonormalized Gaussian
// columns (row-major, rot[i] is row i).
inline std::vector<Vec> random_rotation(Rng& rng, std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("random_rotation: dimension must be positive");
  std::vector<Vec> cols(dim, Vec(dim));
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t i = 0; i < dim; ++i) cols[j][i] = rng.normal();

  auto orthonormalize = [&]() {
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t k = 0; k < j; ++k) {
        double dot = 0.0;
        for (std::size_t i = 0; i < dim; ++i) dot += cols[j][i] * cols[k][i];
        for (std::size_t i = 0; i < dim; ++i) cols[j][i] -= dot * cols[k][i];
      }
      double nrm = norm(cols[j]);
      while (nrm < 1e-12) {  // degenerate draw; resample the column
        for (std::size_t i = 0; i < dim; ++i) cols[j][i] = rng.normal();
        for (std::size_t k = 0; k < j; ++k) {
          double dot = 0.0;
          for (std::size_t i = 0; i < dim; ++i) dot += cols[j][i] * cols[k][i];
          for (std::size_t i = 0; i < dim; ++i) cols[j][i] -= dot * cols[k][i];
        }
        nrm = norm(cols[j]);
      }
      for (std::size_t i = 0; i < dim; ++i) cols[j][i] /= nrm;
    }
  };
  orthonormalize();
  orthonormalize();  // second pass tightens orthogonality to machine precision

  // determinant sign via Gaussian elimination on a copy
  std::vector<Vec> m = cols;
  double sign = 1.0;
  for (std::size_t c = 0; c < dim; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < dim; ++r)
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      sign = -sign;
    }
    if (m[c][c] == 0.0) {
      sign = 0.0;
      break;
    }
    if (m[c][c] < 0.0) sign = -sign;
    for (std::size_t r = c + 1; r < dim; ++r) {
      double f = m[r][c] / m[c][c];
      for (std::size_t i = c; i < dim; ++i) m[r][i] -= f * m[c][i];
    }
  }
  if (sign < 0.0)
    for (std::size_t i = 0; i < dim; ++i) cols[dim - 1][i] = -cols[dim - 1][i];

  // columns were built; emit rows
  std::vector<Vec> rot(dim, Vec(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) rot[i][j] = cols[j][i];
  return rot;
}

// One concrete benchmark instance: f(x) = raw(R (x - shift)) + offset.
struct BenchSpec {
  std::string name;
  std::size_t dim = 0;
  Domain domain = Domain::cube(1, 0.0, 1.0);
  Vec shift;                  // empty = no shift
  std::vector<Vec> rotation;  // empty = identity
  double offset = 0.0;
  Vec optimum_x;          // location where the wrapped function attains `offset`
  double optimum_value = 0.0;
};

struct BenchOptions {
  bool with_shift = false;
  bool with_rotation = false;
  std::uint64_t seed = 0;
  std::optional<std::pair<double, double>> domain;  // override the preset box
  std::optional<double> offset;
};

inline BenchSpec make_spec(const std::string& name, std::size_t dim,
                           const BenchOptions& opt = {}) {
  const FunctionInfo& info = function_info(name);
  if (dim == 0) throw std::invalid_argument("make_spec: dimension must be positive");
  BenchSpec spec;
  spec.name = name;
  spec.dim = dim;
  double lo = opt.domain ? opt.domain->first : info.default_lo;
  double hi = opt.domain ? opt.domain->second : info.default_hi;
  spec.domain = Domain::cube(dim, lo, hi);
  spec.offset = opt.offset ? *opt.offset : info.cec_offset;
  spec.optimum_value = spec.offset;

  Rng rng(derive_seed(opt.seed, 0xbe9cf));
  if (opt.with_rotation) spec.rotation = random_rotation(rng, dim);

  Vec raw_opt(dim, info.optimum_coord);
  if (opt.with_shift) {
    // Draw the optimum location uniformly in the inner 80% of the box, then
    // back out the shift so that R (x - shift) lands on the raw optimum there.
    Vec target(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      double margin = 0.1 * spec.domain.range(i);
      target[i] = rng.uniform(spec.domain.lower[i] + margin, spec.domain.upper[i] - margin);
    }
    Vec rt_opt(dim, 0.0);  // R^T raw_opt
    if (!spec.rotation.empty()) {
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) rt_opt[i] += spec.rotation[j][i] * raw_opt[j];
    } else {
      rt_opt = raw_opt;
    }
    spec.shift.resize(dim);
    for (std::size_t i = 0; i < dim; ++i) spec.shift[i] = target[i] - rt_opt[i];
    spec.optimum_x = target;
  } else {
    spec.optimum_x = raw_opt;
    if (!spec.rotation.empty()) {
      // unshifted but rotated: optimum at R^T raw_opt
      Vec rt_opt(dim, 0.0);
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) rt_opt[i] += spec.rotation[j][i] * raw_opt[j];
      spec.optimum_x = rt_opt;
    }
  }
  return spec;
}

inline Objective make_function(const BenchSpec& spec) {
  const FunctionInfo& info = function_info(spec.name);
  if (!spec.shift.empty() && spec.shift.size() != spec.dim)
    throw std::invalid_argument("make_function: shift length mismatch");
  if (!spec.rotation.empty() && spec.rotation.size() != spec.dim)
    throw std::invalid_argument("make_function: rotation size mismatch");
  BenchSpec s = spec;
  auto raw = info.raw;
  return Objective(spec.dim, [s, raw](std::span<const double> x) {
    Vec z(x.begin(), x.end());
    if (!s.shift.empty())
      for (std::size_t i = 0; i < s.dim; ++i) z[i] -= s.shift[i];
    if (!s.rotation.empty()) {
      Vec r(s.dim, 0.0);
      for (std::size_t i = 0; i < s.dim; ++i)
        for (std::size_t j = 0; j < s.dim; ++j) r[i] += s.rotation[i][j] * z[j];
      z = std::move(r);
    }
    return raw(z) + s.offset;
  });
}

}  // namespace gpswarm
