#include "ghmetric/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ghmetric {

namespace {

std::string default_label(int i) { return "p" + std::to_string(i); }

std::string summarize(const std::vector<MetricViolation>& violations) {
  std::ostringstream out;
  out << "metric validation failed with " << violations.size() << " violation(s)";
  if (!violations.empty()) out << ": " << violations.front().describe();
  if (violations.size() > 1) out << "; ...";
  return out.str();
}

}  // namespace

std::string MetricViolation::describe() const {
  std::ostringstream out;
  switch (kind) {
    case ViolationKind::NotSquare:
      out << "not-square";
      if (i >= 0) out << ": row " << i << " has the wrong length";
      break;
    case ViolationKind::NegativeEntry:
      out << "negative-entry at (" << i << "," << j << "): " << slack;
      break;
    case ViolationKind::AsymmetricEntry:
      out << "asymmetric-entry at (" << i << "," << j << "): difference " << slack;
      break;
    case ViolationKind::NonzeroDiagonal:
      out << "nonzero-diagonal at (" << i << "," << i << "): " << slack;
      break;
    case ViolationKind::ZeroOffDiagonal:
      out << "zero-off-diagonal at (" << i << "," << j << ")";
      break;
    case ViolationKind::TriangleViolation:
      out << "triangle-violation (" << i << "," << j << "," << k << "): d(" << i << "," << j
          << ") exceeds d(" << i << "," << k << ") + d(" << k << "," << j << ") by " << slack;
      break;
  }
  return out.str();
}

MetricError::MetricError(std::vector<MetricViolation> v)
    : InputError(summarize(v)), violations(std::move(v)) {}

std::vector<std::vector<double>> FiniteMetricSpace::rows() const {
  std::vector<std::vector<double>> out(n_);
  for (int i = 0; i < n_; ++i) {
    out[i].assign(d_.begin() + static_cast<std::ptrdiff_t>(i) * n_,
                  d_.begin() + static_cast<std::ptrdiff_t>(i + 1) * n_);
  }
  return out;
}

FiniteMetricSpace FiniteMetricSpace::unchecked(int n, std::vector<double> flat,
                                               std::vector<std::string> labels, double tol) {
  FiniteMetricSpace s;
  s.n_ = n;
  s.d_ = std::move(flat);
  s.labels_ = std::move(labels);
  s.tol_ = tol;
  return s;
}

std::vector<MetricViolation> check_metric(const std::vector<std::vector<double>>& matrix,
                                          double tol) {
  if (tol < 0) throw InputError("validation tolerance must be nonnegative");
  std::vector<MetricViolation> out;

  const int n = static_cast<int>(matrix.size());
  if (n == 0) {
    out.push_back({ViolationKind::NotSquare});
    return out;
  }
  bool square = true;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(matrix[i].size()) != n) {
      out.push_back({ViolationKind::NotSquare, i});
      square = false;
    }
  }
  if (!square) return out;

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!std::isfinite(matrix[i][j])) {
        throw InputError("non-finite entry at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
      }
    }
  }

  for (int i = 0; i < n; ++i) {
    if (std::abs(matrix[i][i]) > tol) {
      out.push_back({ViolationKind::NonzeroDiagonal, i, i, -1, matrix[i][i]});
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double v = matrix[i][j];
      if (v < 0 && -v > tol) {
        out.push_back({ViolationKind::NegativeEntry, i, j, -1, v});
      } else if (v <= tol) {
        out.push_back({ViolationKind::ZeroOffDiagonal, i, j, -1, v});
      }
      const double diff = matrix[i][j] - matrix[j][i];
      if (std::abs(diff) > tol) {
        out.push_back({ViolationKind::AsymmetricEntry, i, j, -1, diff});
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const double slack = matrix[i][j] - matrix[i][k] - matrix[k][j];
        if (slack > tol) {
          out.push_back({ViolationKind::TriangleViolation, i, j, k, slack});
        }
      }
    }
  }
  return out;
}

FiniteMetricSpace validate_metric(const std::vector<std::vector<double>>& matrix,
                                  std::vector<std::string> labels, double tol) {
  const int n = static_cast<int>(matrix.size());
  if (n == 0) throw InputError("a metric space needs at least one point");
  auto violations = check_metric(matrix, tol);
  if (!violations.empty()) throw MetricError(std::move(violations));

  if (labels.empty()) {
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back(default_label(i));
  } else if (static_cast<int>(labels.size()) != n) {
    throw InputError("label count " + std::to_string(labels.size()) +
                     " does not match matrix size " + std::to_string(n));
  }

  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : matrix) flat.insert(flat.end(), row.begin(), row.end());
  return FiniteMetricSpace::unchecked(n, std::move(flat), std::move(labels), tol);
}

double diameter(const FiniteMetricSpace& space) {
  double best = 0.0;
  const int n = space.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) best = std::max(best, space.dist(i, j));
  return best;
}

FiniteMetricSpace scale(const FiniteMetricSpace& space, double t) {
  if (!(t > 0) || !std::isfinite(t)) throw NonpositiveScale(t);
  std::vector<double> flat = space.flat();
  for (double& v : flat) v *= t;
  return FiniteMetricSpace::unchecked(space.size(), std::move(flat), space.labels(),
                                      t * space.tolerance());
}

namespace {

bool extend_isometry(const FiniteMetricSpace& a, const FiniteMetricSpace& b, double tol,
                     std::vector<int>& mapping, std::vector<bool>& used, int depth) {
  const int n = a.size();
  if (depth == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    bool ok = true;
    for (int prev = 0; prev < depth && ok; ++prev) {
      if (std::abs(a.dist(depth, prev) - b.dist(cand, mapping[prev])) > tol) ok = false;
    }
    if (!ok) continue;
    mapping[depth] = cand;
    used[cand] = true;
    if (extend_isometry(a, b, tol, mapping, used, depth + 1)) return true;
    used[cand] = false;
  }
  return false;
}

}  // namespace

IsometryMatch is_isometric(const FiniteMetricSpace& a, const FiniteMetricSpace& b, double tol,
                           int max_points) {
  if (a.size() != b.size()) return {};
  if (a.size() > max_points) {
    throw SearchTooLarge("isometry search is capped at " + std::to_string(max_points) +
                         " points, got " + std::to_string(a.size()));
  }
  std::vector<int> mapping(a.size(), -1);
  std::vector<bool> used(a.size(), false);
  if (extend_isometry(a, b, tol, mapping, used, 0)) return {true, std::move(mapping)};
  return {};
}

FiniteMetricSpace one_point(const std::string& label) {
  return FiniteMetricSpace::unchecked(1, {0.0}, {label}, 0.0);
}

FiniteMetricSpace two_point(double s) {
  if (!(s > 0) || !std::isfinite(s)) throw NonpositiveScale(s);
  const double d = 2.0 * s;
  return FiniteMetricSpace::unchecked(2, {0.0, d, d, 0.0}, {"p0", "p1"}, 0.0);
}

}  // namespace ghmetric
