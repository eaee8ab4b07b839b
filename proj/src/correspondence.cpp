#include "ghmetric/correspondence.hpp"

#include <algorithm>
#include <cmath>

namespace ghmetric {

bool covers_both(const std::vector<IndexPair>& pairs, int nx, int ny) {
  std::vector<bool> x_hit(nx, false), y_hit(ny, false);
  for (const auto& [i, j] : pairs) {
    if (i < 0 || i >= nx || j < 0 || j >= ny) return false;
    x_hit[i] = true;
    y_hit[j] = true;
  }
  return std::all_of(x_hit.begin(), x_hit.end(), [](bool b) { return b; }) &&
         std::all_of(y_hit.begin(), y_hit.end(), [](bool b) { return b; });
}

Correspondence make_correspondence(std::vector<IndexPair> pairs, int nx, int ny) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  if (!covers_both(pairs, nx, ny)) {
    throw NotACorrespondence("relation does not cover both point sets (" +
                             std::to_string(nx) + " x " + std::to_string(ny) + ")");
  }
  return {std::move(pairs)};
}

Correspondence identity_correspondence(int n) {
  Correspondence c;
  c.pairs.reserve(n);
  for (int i = 0; i < n; ++i) c.pairs.emplace_back(i, i);
  return c;
}

Correspondence full_correspondence(int nx, int ny) {
  Correspondence c;
  c.pairs.reserve(static_cast<std::size_t>(nx) * ny);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) c.pairs.emplace_back(i, j);
  return c;
}

Correspondence inverse(const Correspondence& corr) {
  Correspondence out;
  out.pairs.reserve(corr.pairs.size());
  for (const auto& [i, j] : corr.pairs) out.pairs.emplace_back(j, i);
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

double pair_set_distortion(const FiniteMetricSpace& X, const FiniteMetricSpace& Y,
                           const std::vector<IndexPair>& pairs) {
  double dis = 0.0;
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      const double gap = std::abs(X.dist(pairs[a].first, pairs[b].first) -
                                  Y.dist(pairs[a].second, pairs[b].second));
      dis = std::max(dis, gap);
    }
  }
  return dis;
}

double distortion(const FiniteMetricSpace& X, const FiniteMetricSpace& Y,
                  const Correspondence& corr) {
  if (!covers_both(corr.pairs, X.size(), Y.size())) {
    throw NotACorrespondence("distortion needs a correspondence covering both spaces");
  }
  return pair_set_distortion(X, Y, corr.pairs);
}

}  // namespace ghmetric
