#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "gpswarm/core.hpp"

namespace gpswarm {

struct SimplexResult {
  Vec x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Nelder-Mead downhill simplex with the standard coefficients
// (reflection 1, expansion 2, contraction 0.5, shrink 0.5).
// Stops once the relative spread of vertex values drops below rel_tol and the
// simplex has contracted well below the initial step (a value criterion alone
// stalls on simplices straddling a minimum symmetrically), or at max_iter.
template <typename F>
SimplexResult nelder_mead(F&& f, const Vec& start, const Vec& step, int max_iter,
                          double rel_tol, double size_tol_factor = 1e-3) {
  const std::size_t n = start.size();
  std::vector<Vec> verts(n + 1, start);
  for (std::size_t i = 0; i < n; ++i) verts[i + 1][i] += step[i];

  Vec size_tol(n);
  for (std::size_t i = 0; i < n; ++i)
    size_tol[i] = std::max(size_tol_factor * std::abs(step[i]), 1e-12);

  std::vector<double> vals(n + 1);
  for (std::size_t i = 0; i <= n; ++i) vals[i] = f(verts[i]);

  std::vector<std::size_t> order(n + 1);
  SimplexResult res;
  for (res.iterations = 0; res.iterations < max_iter; ++res.iterations) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    const std::size_t best = order[0], worst = order[n], second = order[n - 1];

    double spread = 2.0 * std::abs(vals[worst] - vals[best]) /
                    (std::abs(vals[worst]) + std::abs(vals[best]) + 1e-30);
    if (spread < rel_tol) {
      bool small = true;
      for (std::size_t i = 0; i < n && small; ++i)
        for (std::size_t k = 0; k <= n; ++k)
          if (std::abs(verts[k][i] - verts[best][i]) > size_tol[i]) {
            small = false;
            break;
          }
      if (small) {
        res.converged = true;
        break;
      }
    }

    Vec centroid(n, 0.0);  // of all vertices except the worst
    for (std::size_t k = 0; k <= n; ++k) {
      if (k == worst) continue;
      for (std::size_t i = 0; i < n; ++i) centroid[i] += verts[k][i];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    auto blend = [&](double t) {
      Vec p(n);
      for (std::size_t i = 0; i < n; ++i) p[i] = centroid[i] + t * (verts[worst][i] - centroid[i]);
      return p;
    };

    Vec refl = blend(-1.0);
    double frefl = f(refl);
    if (frefl < vals[best]) {
      Vec exp_pt = blend(-2.0);
      double fexp = f(exp_pt);
      if (fexp < frefl) {
        verts[worst] = std::move(exp_pt);
        vals[worst] = fexp;
      } else {
        verts[worst] = std::move(refl);
        vals[worst] = frefl;
      }
    } else if (frefl < vals[second]) {
      verts[worst] = std::move(refl);
      vals[worst] = frefl;
    } else {
      bool outside = frefl < vals[worst];
      Vec contr = blend(outside ? -0.5 : 0.5);
      double fcontr = f(contr);
      if (fcontr < std::min(frefl, vals[worst])) {
        verts[worst] = std::move(contr);
        vals[worst] = fcontr;
      } else {
        // shrink toward the best vertex
        for (std::size_t k = 0; k <= n; ++k) {
          if (k == best) continue;
          for (std::size_t i = 0; i < n; ++i)
            verts[k][i] = verts[best][i] + 0.5 * (verts[k][i] - verts[best][i]);
          vals[k] = f(verts[k]);
        }
      }
    }
  }

  std::size_t best = 0;
  for (std::size_t k = 1; k <= n; ++k)
    if (vals[k] < vals[best]) best = k;
  res.x = verts[best];
  res.value = vals[best];
  return res;
}

}  // namespace gpswarm
