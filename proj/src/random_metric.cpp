#include "ghmetric/random_metric.hpp"

#include <algorithm>

namespace ghmetric {

FiniteMetricSpace gen_random_metric(int n, double diam_bound, SplitMix64& rng) {
  if (n < 1) throw InputError("point count must be at least 1");
  if (n == 1) return one_point();
  if (!(diam_bound > 0)) throw InputError("diameter bound must be positive");

  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double v = rng.uniform(0.5, 1.5);
      d[i][j] = v;
      d[j][i] = v;
    }
  }

  // Shortest-path closure enforces the triangle inequality; entries stay
  // positive because every edge weight is.
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double via = d[i][k] + d[k][j];
        if (via < d[i][j]) {
          d[i][j] = via;
          d[j][i] = via;
        }
      }
    }
  }

  double dmax = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) dmax = std::max(dmax, d[i][j]);

  // Rescale so the diameter lands on diam_bound exactly: maximal entries are
  // pinned, the rest clamped against one-ulp overshoot.
  const double s = diam_bound / dmax;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double v = d[i][j] == dmax ? diam_bound : std::min(d[i][j] * s, diam_bound);
      d[i][j] = v;
      d[j][i] = v;
    }
  }

  return validate_metric(d, {}, kDefaultTolerance);
}

}  // namespace ghmetric
