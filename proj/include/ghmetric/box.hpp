#pragma once

#include <vector>

#include "ghmetric/bead.hpp"

namespace ghmetric {

// A point of the box prod [0, r_n] under the sup distance.
struct BoxPoint {
  std::vector<double> coords;
  std::vector<double> bounds;
};

BoxPoint make_box_point(std::vector<double> coords, std::vector<double> bounds);

// max_n |x_n - y_n|; both points must live in the same box.
double box_linf_distance(const BoxPoint& x, const BoxPoint& y);

// Coordinate x_n becomes the two-point block x_n*2pt (diameter 2*x_n), or the
// one-point block at x_n = 0, strung on the doubled gap sequence (2*r_n) so
// every block fits its bound. GH distance between two embedded points equals
// their sup distance.
BeadSpace embed_box_point(const BoxPoint& x);

}  // namespace ghmetric
