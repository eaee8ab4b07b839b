#pragma once

#include "ghmetric/metric_space.hpp"
#include "ghmetric/rng.hpp"

namespace ghmetric {

// Draws a random symmetric positive matrix, repairs it to a metric by
// replacing each entry with the shortest-path distance through the complete
// graph it defines, then rescales so the diameter equals diam_bound exactly.
// n = 1 yields the one-point space regardless of the stream.
FiniteMetricSpace gen_random_metric(int n, double diam_bound, SplitMix64& rng);

}  // namespace ghmetric
