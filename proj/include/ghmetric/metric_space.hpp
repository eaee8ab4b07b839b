#pragma once

#include <string>
#include <vector>

#include "ghmetric/errors.hpp"

namespace ghmetric {

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr int kIsometrySearchCap = 8;

// A finite metric space: labeled points plus a validated distance matrix.
// Immutable after construction; points are addressed by index, labels are
// display-only metadata.
class FiniteMetricSpace {
 public:
  FiniteMetricSpace() = default;

  int size() const { return n_; }
  double dist(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<std::string>& labels() const { return labels_; }
  double tolerance() const { return tol_; }

  const std::vector<double>& flat() const { return d_; }
  std::vector<std::vector<double>> rows() const;

  // Skips validation. For internal construction whose validity is implied by
  // construction (scaling, generated matrices already repaired).
  static FiniteMetricSpace unchecked(int n, std::vector<double> flat,
                                     std::vector<std::string> labels, double tol);

 private:
  int n_ = 0;
  std::vector<double> d_;
  std::vector<std::string> labels_;
  double tol_ = kDefaultTolerance;
};

// Scans a matrix for metric-axiom violations: zero diagonal, symmetry,
// positivity off the diagonal, triangle inequality (within tol).
std::vector<MetricViolation> check_metric(const std::vector<std::vector<double>>& matrix,
                                          double tol = kDefaultTolerance);

// Builds a validated space or throws MetricError carrying every violation found.
// Empty labels get defaults p0..p{n-1}.
FiniteMetricSpace validate_metric(const std::vector<std::vector<double>>& matrix,
                                  std::vector<std::string> labels = {},
                                  double tol = kDefaultTolerance);

double diameter(const FiniteMetricSpace& space);

// Multiplies every distance by t > 0. The result carries tolerance t * tol.
FiniteMetricSpace scale(const FiniteMetricSpace& space, double t);

struct IsometryMatch {
  bool isometric = false;
  std::vector<int> mapping;  // mapping[i] = matched index in the second space
};

// Brute-force bijection search, capped at max_points (factorial growth).
// Size mismatch yields {false}, never an error.
IsometryMatch is_isometric(const FiniteMetricSpace& a, const FiniteMetricSpace& b,
                           double tol = kDefaultTolerance,
                           int max_points = kIsometrySearchCap);

// The one-point space.
FiniteMetricSpace one_point(const std::string& label = "p0");

// Two points at distance 2s (the pair {-s, +s} on the line).
FiniteMetricSpace two_point(double s);

}  // namespace ghmetric
