#pragma once

#include <utility>
#include <vector>

#include "ghmetric/metric_space.hpp"

namespace ghmetric {

using IndexPair = std::pair<int, int>;

// A relation between two point sets whose projections cover both sides.
// Pairs are kept sorted and unique; (i, j) pairs index the first and second
// space respectively.
struct Correspondence {
  std::vector<IndexPair> pairs;
};

bool covers_both(const std::vector<IndexPair>& pairs, int nx, int ny);

// Sorts, dedupes, range-checks and verifies coverage of both sides.
Correspondence make_correspondence(std::vector<IndexPair> pairs, int nx, int ny);

Correspondence identity_correspondence(int n);
Correspondence full_correspondence(int nx, int ny);

// Swaps the roles of the two spaces: pairs (j, i), re-sorted.
Correspondence inverse(const Correspondence& corr);

// max |d_X(x, xi) - d_Y(y, eta)| over all pairs of pairs. Throws
// NotACorrespondence when coverage is violated.
double distortion(const FiniteMetricSpace& X, const FiniteMetricSpace& Y,
                  const Correspondence& corr);

// Same sup without the coverage check, for internal search loops.
double pair_set_distortion(const FiniteMetricSpace& X, const FiniteMetricSpace& Y,
                           const std::vector<IndexPair>& pairs);

}  // namespace ghmetric
