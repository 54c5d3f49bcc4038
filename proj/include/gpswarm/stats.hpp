#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace gpswarm {

namespace stats_detail {

// Continued fraction for the regularized incomplete beta function
// (modified Lentz method).
inline double beta_cf(double a, double b, double x) {
  constexpr double tiny = 1e-300;
  constexpr double eps = 1e-15;
  double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 500; ++m) {
    double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < eps) break;
  }
  return h;
}

}  // namespace stats_detail

inline double log_beta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// Regularized incomplete beta function I_x(a, b).
inline double reg_inc_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::invalid_argument("reg_inc_beta: a, b must be > 0");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  double front = std::exp(a * std::log(x) + b * std::log1p(-x) - log_beta(a, b));
  if (x < (a + 1.0) / (a + b + 2.0)) return front * stats_detail::beta_cf(a, b, x) / a;
  return 1.0 - std::exp(b * std::log1p(-x) + a * std::log(x) - log_beta(a, b)) *
                   stats_detail::beta_cf(b, a, 1.0 - x) / b;
}

// P(T <= t) for Student's t with df degrees of freedom.
inline double student_cdf(double t, double df) {
  if (!(df > 0.0)) throw std::invalid_argument("student_cdf: df must be > 0");
  if (std::isinf(t)) return t > 0.0 ? 1.0 : 0.0;
  double x = df / (df + t * t);
  double half_tail = 0.5 * reg_inc_beta(0.5 * df, 0.5, x);
  return t >= 0.0 ? 1.0 - half_tail : half_tail;
}

struct WelchResult {
  double t = 0.0;
  double df = 0.0;
  double p = 0.5;  // P(T <= t), alternative mean(a) < mean(b)
};

// One-sided two-sample t-test for mean(a) < mean(b). Welch by default
// (Welch-Satterthwaite degrees of freedom); `pooled` switches to the
// equal-variance Student form. When both variances vanish the test is
// degenerate: p = 0.5 for equal means, 0 or 1 otherwise.
inline WelchResult welch_one_sided(std::span<const double> a, std::span<const double> b,
                                   bool pooled = false) {
  const std::size_t na = a.size(), nb = b.size();
  if (na < 2 || nb < 2)
    throw std::invalid_argument("welch_one_sided: both samples need >= 2 elements");
  auto mean_var = [](std::span<const double> s) {
    double m = 0.0;
    for (double v : s) m += v;
    m /= static_cast<double>(s.size());
    double ss = 0.0;
    for (double v : s) ss += (v - m) * (v - m);
    return std::pair<double, double>{m, ss / static_cast<double>(s.size() - 1)};
  };
  auto [ma, va] = mean_var(a);
  auto [mb, vb] = mean_var(b);

  WelchResult r;
  if (va == 0.0 && vb == 0.0) {
    r.df = static_cast<double>(na + nb - 2);
    if (ma == mb) {
      r.t = 0.0;
      r.p = 0.5;
    } else {
      r.t = ma < mb ? -std::numeric_limits<double>::infinity()
                    : std::numeric_limits<double>::infinity();
      r.p = ma < mb ? 0.0 : 1.0;
    }
    return r;
  }

  if (pooled) {
    double sp2 = ((na - 1) * va + (nb - 1) * vb) / static_cast<double>(na + nb - 2);
    r.t = (ma - mb) / std::sqrt(sp2 * (1.0 / na + 1.0 / nb));
    r.df = static_cast<double>(na + nb - 2);
  } else {
    double sa = va / static_cast<double>(na);
    double sb = vb / static_cast<double>(nb);
    r.t = (ma - mb) / std::sqrt(sa + sb);
    r.df = (sa + sb) * (sa + sb) /
           (sa * sa / static_cast<double>(na - 1) + sb * sb / static_cast<double>(nb - 1));
  }
  r.p = student_cdf(r.t, r.df);
  return r;
}

inline double sample_mean(std::span<const double> s) {
  double m = 0.0;
  for (double v : s) m += v;
  return m / static_cast<double>(s.size());
}

inline double sample_sd(std::span<const double> s) {
  if (s.size() < 2) return 0.0;
  double m = sample_mean(s);
  double ss = 0.0;
  for (double v : s) ss += (v - m) * (v - m);
  return std::sqrt(ss / static_cast<double>(s.size() - 1));
}

inline double sample_median(std::vector<double> s) {
  if (s.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::size_t n = s.size();
  std::nth_element(s.begin(), s.begin() + n / 2, s.end());
  double hi = s[n / 2];
  if (n % 2 == 1) return hi;
  std::nth_element(s.begin(), s.begin() + n / 2 - 1, s.end());
  return 0.5 * (s[n / 2 - 1] + hi);
}

}  // namespace gpswarm
