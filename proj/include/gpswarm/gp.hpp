#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gpswarm/core.hpp"
#include "gpswarm/nelder_mead.hpp"
#include "gpswarm/rng.hpp"

namespace gpswarm {

struct FactorizationFailure : std::runtime_error {
  FactorizationFailure() : std::runtime_error("Gram matrix not positive definite after jitter escalation") {}
};

struct FitFailure : std::runtime_error {
  FitFailure() : std::runtime_error("every hyperparameter restart failed factorization") {}
};

struct NotFitted : std::logic_error {
  NotFitted() : std::logic_error("GpModel used before fitting") {}
};

// Squared-exponential kernel with constant offset and white-noise nugget:
//   K(x, y) = amp^2 exp(-|x-y|^2 / length^2) + bias^2 + nugget^2 [x = y].
struct KernelParams {
  double amp = 1.0;     // signal amplitude
  double bias = 0.0;    // constant-offset amplitude
  double nugget = 0.0;  // white-noise amplitude
  double length = 1.0;  // length scale, domain units
};

// The identity term is decided by point index, never by coordinate equality:
// duplicate coordinates at distinct indices are distinct points.
inline double kernel(const KernelParams& p, std::span<const double> x,
                     std::span<const double> y, bool same_index) {
  double v = p.amp * p.amp * std::exp(-squared_distance(x, y) / (p.length * p.length)) +
             p.bias * p.bias;
  if (same_index) v += p.nugget * p.nugget;
  return v;
}

namespace gp_detail {

inline Eigen::MatrixXd squared_distances(const std::vector<Vec>& X) {
  const Eigen::Index n = static_cast<Eigen::Index>(X.size());
  Eigen::MatrixXd d2(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    d2(i, i) = 0.0;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      double d = squared_distance(X[i], X[j]);
      d2(i, j) = d;
      d2(j, i) = d;
    }
  }
  return d2;
}

inline Eigen::MatrixXd gram_from_d2(const KernelParams& p, const Eigen::MatrixXd& d2) {
  Eigen::MatrixXd k =
      (p.amp * p.amp) * (-d2 / (p.length * p.length)).array().exp().matrix();
  k.array() += p.bias * p.bias;
  k.diagonal().array() += p.nugget * p.nugget;
  return k;
}

struct GramFactor {
  Eigen::MatrixXd lower;     // Cholesky factor L with L L^T = K + jitter I
  double jitter = 0.0;       // diagonal jitter that was actually applied
  int escalations = 0;       // number of ladder steps taken
};

// Escalating-jitter Cholesky: try the raw matrix, then 1e-10 .. 1e-6 in
// factor-10 steps. Throws FactorizationFailure when the ladder is exhausted.
inline GramFactor factor_gram(Eigen::MatrixXd k) {
  GramFactor out;
  double jitter = 0.0;
  for (int attempt = 0;; ++attempt) {
    Eigen::MatrixXd trial = k;
    if (jitter > 0.0) trial.diagonal().array() += jitter;
    Eigen::LLT<Eigen::MatrixXd> llt(trial);
    if (llt.info() == Eigen::Success) {
      out.lower = llt.matrixL();
      out.jitter = jitter;
      out.escalations = attempt;
      return out;
    }
    if (jitter >= 1e-6) throw FactorizationFailure();
    jitter = (jitter == 0.0) ? 1e-10 : jitter * 10.0;
  }
}

inline double lml_from_factor(const GramFactor& f, const Eigen::VectorXd& y) {
  Eigen::VectorXd alpha = f.lower.triangularView<Eigen::Lower>().solve(y);
  f.lower.transpose().triangularView<Eigen::Upper>().solveInPlace(alpha);
  double logdet = 2.0 * f.lower.diagonal().array().log().sum();
  return -0.5 * y.dot(alpha) - 0.5 * logdet;
}

// Center and scale to unit spread; with fewer than two targets the transform
// is the identity (the prior mean 0 applies to the raw value).
inline void standardize(const Vec& y, double& mean, double& scale, Eigen::VectorXd& out) {
  const std::size_t n = y.size();
  mean = 0.0;
  scale = 1.0;
  if (n >= 2) {
    for (double v : y) mean += v;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double v : y) ss += (v - mean) * (v - mean);
    scale = std::sqrt(ss / static_cast<double>(n - 1));
    if (!(scale > 1e-12)) scale = 1.0;
  }
  out.resize(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    out[static_cast<Eigen::Index>(i)] = (y[i] - mean) / scale;
}

}  // namespace gp_detail

// Data term plus complexity term of the log marginal likelihood,
//   -1/2 y^T K^-1 y - 1/2 log det K,
// with the constant omitted. Evaluated through the jittered Cholesky factor.
inline double log_marginal_likelihood(const KernelParams& p, const std::vector<Vec>& X,
                                      const Vec& y) {
  if (X.empty() || X.size() != y.size())
    throw std::invalid_argument("log_marginal_likelihood: need |X| = |y| >= 1");
  auto factor = gp_detail::factor_gram(gp_detail::gram_from_d2(p, gp_detail::squared_distances(X)));
  Eigen::VectorXd yv = Eigen::Map<const Eigen::VectorXd>(y.data(), static_cast<Eigen::Index>(y.size()));
  return gp_detail::lml_from_factor(factor, yv);
}

// Search box for the restarted maximum-likelihood fit, in natural scale.
// Ranges follow the target spread s_y and the domain diameter.
struct HyperGrid {
  double amp_lo, amp_hi;
  double bias_lo, bias_hi;
  double nugget_lo, nugget_hi;
  double length_lo, length_hi;

  static HyperGrid from(double s_y, double diameter) {
    if (!(s_y > 1e-12)) s_y = 1.0;
    if (!(diameter > 0.0)) diameter = 1.0;
    return HyperGrid{1e-2 * s_y, 1e2 * s_y, 1e-6 * s_y, 10.0 * s_y,
                     1e-6 * s_y, s_y,       1e-2 * diameter, diameter};
  }
};

// Restarted maximum-likelihood estimate of the kernel parameters.
// Targets are centered and scaled to unit spread before fitting, so the
// returned parameters live on the standardized-target scale (GpModel::fit
// applies the identical transform). Each restart draws a log-uniform start
// from the grid and runs a simplex descent in log-parameter space; the best
// final likelihood wins, ties broken by first-found.
inline KernelParams fit_hyperparams(Rng& rng, const std::vector<Vec>& X, const Vec& y,
                                    int restarts, double domain_diameter) {
  if (X.size() < 2 || X.size() != y.size())
    throw std::invalid_argument("fit_hyperparams: need |X| = |y| >= 2");
  if (restarts < 1) throw std::invalid_argument("fit_hyperparams: restarts must be >= 1");

  double ymean, yscale;
  Eigen::VectorXd ystd;
  gp_detail::standardize(y, ymean, yscale, ystd);

  const HyperGrid grid = HyperGrid::from(1.0, domain_diameter);
  const Eigen::MatrixXd d2 = gp_detail::squared_distances(X);

  auto params_from_log = [](const Vec& t) {
    auto safe_exp = [](double v) { return std::exp(std::clamp(v, -40.0, 40.0)); };
    return KernelParams{safe_exp(t[0]), safe_exp(t[1]), safe_exp(t[2]), safe_exp(t[3])};
  };
  auto neg_lml = [&](const Vec& t) {
    KernelParams p = params_from_log(t);
    try {
      double v = gp_detail::lml_from_factor(gp_detail::factor_gram(gp_detail::gram_from_d2(p, d2)), ystd);
      return std::isfinite(v) ? -v : 1e300;
    } catch (const FactorizationFailure&) {
      return 1e300;
    }
  };
  auto log_uniform = [&](double lo, double hi) {
    return std::log(lo) + rng.uniform01() * (std::log(hi) - std::log(lo));
  };

  KernelParams best_params;
  double best_lml = -std::numeric_limits<double>::infinity();
  bool any = false;
  const Vec step(4, 0.5);  // half a natural-log unit
  for (int r = 0; r < restarts; ++r) {
    Vec t0 = {log_uniform(grid.amp_lo, grid.amp_hi), log_uniform(grid.bias_lo, grid.bias_hi),
              log_uniform(grid.nugget_lo, grid.nugget_hi), log_uniform(grid.length_lo, grid.length_hi)};
    // a few percent of a log unit is ample parameter resolution here
    SimplexResult res = nelder_mead(neg_lml, t0, step, 200 * 4, 1e-6, 0.05);
    if (res.value >= 1e300) continue;
    double lml = -res.value;
    if (!any || lml > best_lml) {
      any = true;
      best_lml = lml;
      best_params = params_from_log(res.x);
    }
  }
  if (!any) throw FitFailure();
  return best_params;
}

// Zero-mean squared-exponential GP over standardized targets with cached
// Cholesky factorization. Queries are always treated as new point indices,
// so the prior variance at a query includes the nugget term.
class GpModel {
 public:
  GpModel() = default;

  static GpModel fit(const KernelParams& params, std::vector<Vec> X, const Vec& y) {
    if (X.empty() || X.size() != y.size())
      throw std::invalid_argument("GpModel::fit: need |X| = |y| >= 1");
    GpModel m;
    m.params_ = params;
    m.x_ = std::move(X);
    Eigen::VectorXd ystd;
    gp_detail::standardize(y, m.ymean_, m.yscale_, ystd);
    auto factor = gp_detail::factor_gram(
        gp_detail::gram_from_d2(params, gp_detail::squared_distances(m.x_)));
    m.lower_ = std::move(factor.lower);
    m.jitter_ = factor.jitter;
    m.jitter_escalations_ = factor.escalations;
    m.alpha_ = m.lower_.triangularView<Eigen::Lower>().solve(ystd);
    m.lower_.transpose().triangularView<Eigen::Upper>().solveInPlace(m.alpha_);
    m.fitted_ = true;
    return m;
  }

  bool fitted() const { return fitted_; }
  std::size_t size() const { return x_.size(); }
  const KernelParams& params() const { return params_; }
  const std::vector<Vec>& train_x() const { return x_; }
  double target_mean() const { return ymean_; }
  double target_scale() const { return yscale_; }
  double jitter() const { return jitter_; }
  int jitter_escalations() const { return jitter_escalations_; }

  // Posterior mean only; cheap (no triangular solve).
  double mean_at(std::span<const double> q) const {
    require_fitted();
    double m = 0.0;
    for (std::size_t i = 0; i < x_.size(); ++i)
      m += kernel(params_, q, x_[i], false) * alpha_[static_cast<Eigen::Index>(i)];
    return ymean_ + yscale_ * m;
  }

  // Posterior mean and variance; the variance is floored at zero.
  std::pair<double, double> mean_var_at(std::span<const double> q) const {
    require_fitted();
    const Eigen::Index n = static_cast<Eigen::Index>(x_.size());
    Eigen::VectorXd k(n);
    for (Eigen::Index i = 0; i < n; ++i)
      k[i] = kernel(params_, q, x_[static_cast<std::size_t>(i)], false);
    double mean = ymean_ + yscale_ * k.dot(alpha_);
    Eigen::VectorXd v = lower_.triangularView<Eigen::Lower>().solve(k);
    double prior = params_.amp * params_.amp + params_.bias * params_.bias +
                   params_.nugget * params_.nugget;
    double var = std::max(0.0, prior - v.squaredNorm());
    return {mean, yscale_ * yscale_ * var};
  }

  void posterior(const std::vector<Vec>& queries, Vec& mean_out, Vec& var_out) const {
    require_fitted();
    mean_out.resize(queries.size());
    var_out.resize(queries.size());
    for (std::size_t i = 0; i < queries.size(); ++i) {
      auto [m, v] = mean_var_at(queries[i]);
      mean_out[i] = m;
      var_out[i] = v;
    }
  }

  double sigma_at(std::span<const double> q) const { return std::sqrt(mean_var_at(q).second); }

 private:
  void require_fitted() const {
    if (!fitted_) throw NotFitted();
  }

  KernelParams params_;
  std::vector<Vec> x_;
  double ymean_ = 0.0;
  double yscale_ = 1.0;
  Eigen::MatrixXd lower_;
  Eigen::VectorXd alpha_;
  double jitter_ = 0.0;
  int jitter_escalations_ = 0;
  bool fitted_ = false;
};

enum class Acquisition { Mean, Lcb, MaxVar };

// Multiplier for the lower confidence bound m(x) - kappa * sigma(x); 1.6 puts
// the bound at the 90% band (Phi(1.6) ~ 0.945 one-sided).
inline constexpr double kLcbKappa = 1.6;

inline double acquisition_value(const GpModel& m, Acquisition acq, std::span<const double> x) {
  switch (acq) {
    case Acquisition::Mean:
      return m.mean_at(x);
    case Acquisition::Lcb: {
      auto [mean, var] = m.mean_var_at(x);
      return mean - kLcbKappa * std::sqrt(var);
    }
    case Acquisition::MaxVar:
      return -m.sigma_at(x);
  }
  return 0.0;
}

// Local minimizer of the acquisition surface (for MaxVar this maximizes the
// posterior standard deviation). Simplex search started at `start`, with the
// surface evaluated on domain-clamped points and the result clamped again.
inline Vec surrogate_argmin(const GpModel& m, const Domain& d, Acquisition acq,
                            const Vec& start) {
  if (!m.fitted()) throw NotFitted();
  auto f = [&](const Vec& x) { return acquisition_value(m, acq, d.clamp(x)); };
  Vec x0 = d.clamp(start);
  Vec step(d.dim());
  for (std::size_t i = 0; i < d.dim(); ++i) {
    step[i] = 0.1 * d.range(i);
    if (x0[i] + step[i] > d.upper[i]) step[i] = -step[i];
  }
  SimplexResult res =
      nelder_mead(f, x0, step, 200 * static_cast<int>(d.dim()), 1e-6);
  return d.clamp(res.x);
}

}  // namespace gpswarm
