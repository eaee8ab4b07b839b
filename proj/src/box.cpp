#include "ghmetric/box.hpp"

#include <cmath>

namespace ghmetric {

BoxPoint make_box_point(std::vector<double> coords, std::vector<double> bounds) {
  if (coords.size() != bounds.size()) {
    throw DimensionMismatch("box point has " + std::to_string(coords.size()) +
                            " coordinates but " + std::to_string(bounds.size()) + " bounds");
  }
  if (bounds.empty()) throw EmptySequence();
  for (std::size_t n = 0; n < bounds.size(); ++n) {
    if (!(bounds[n] > 0)) throw NonpositiveTerm(static_cast<int>(n) + 1, bounds[n]);
    if (!(coords[n] >= 0.0) || coords[n] > bounds[n]) {
      throw InputError("coordinate " + std::to_string(n + 1) + " = " +
                       std::to_string(coords[n]) + " outside [0, " +
                       std::to_string(bounds[n]) + "]");
    }
  }
  return {std::move(coords), std::move(bounds)};
}

double box_linf_distance(const BoxPoint& x, const BoxPoint& y) {
  if (x.bounds != y.bounds) {
    throw DimensionMismatch("box points live in different ambient boxes");
  }
  double best = 0.0;
  for (std::size_t n = 0; n < x.coords.size(); ++n) {
    best = std::max(best, std::abs(x.coords[n] - y.coords[n]));
  }
  return best;
}

BeadSpace embed_box_point(const BoxPoint& x) {
  std::vector<double> doubled;
  doubled.reserve(x.bounds.size());
  for (double r : x.bounds) doubled.push_back(2.0 * r);

  std::vector<FiniteMetricSpace> blocks;
  blocks.reserve(x.coords.size());
  for (double c : x.coords) {
    blocks.push_back(c > 0.0 ? two_point(c) : one_point());
  }
  return build_bead(doubled, blocks);
}

}  // namespace ghmetric
