#pragma once

#include <cstdint>
#include <string>

#include "ghmetric/correspondence.hpp"
#include "ghmetric/metric_space.hpp"

namespace ghmetric {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

enum class SolveMethod { oracle, branch_and_bound, bounds_only };
const char* to_string(SolveMethod method);

struct GHResult {
  double value = 0.0;                  // the GH distance (half the optimal distortion)
  Correspondence optimal;              // certificate: distortion(optimal) == 2 * value
  std::uint64_t nodes_explored = 0;
  double lower_bound_used = 0.0;
  SolveMethod method = SolveMethod::branch_and_bound;
  bool is_optimal = true;              // false when the node budget ran out
};

// Exhaustive oracle: enumerates every relation on X x Y (2^(|X||Y|) masks),
// filters correspondences, returns the exact minimum with a certificate.
// Requires |X|*|Y| <= 20; ties resolved to the lexicographically smallest
// pair set. Independent of the branch-and-bound path by construction.
GHResult gh_bruteforce(const FiniteMetricSpace& X, const FiniteMetricSpace& Y);

// Exact GH distance by branch-and-bound over function pairs (f: X->Y,
// g: Y->X), scoring the union graph(f) u graph(g)^-1. Every correspondence
// contains such a union and distortion is monotone under restriction, so the
// minimum over unions equals the minimum over all correspondences.
//
// Phase 1 finds the optimal value with admissible >= pruning against the
// incumbent; phase 2 re-walks the tree at the fixed optimum and returns the
// lexicographically smallest optimal pair set, so the certificate does not
// depend on exploration order or on the hints supplied.
//
// hints seed the incumbent (e.g. a block-union correspondence for bead
// spaces). On budget exhaustion the best incumbent is returned with
// is_optimal = false and a still-valid lower bound.
GHResult gh_exact(const FiniteMetricSpace& X, const FiniteMetricSpace& Y,
                  std::uint64_t node_budget = kDefaultNodeBudget,
                  const std::vector<Correspondence>& hints = {});

struct GHBounds {
  double lower = 0.0;        // half the diameter gap
  double upper = 0.0;        // min(half the heuristic distortion, max diameter)
  Correspondence witness;    // the heuristic correspondence tried
  bool witness_attains = false;  // whether upper equals half its distortion
};

GHBounds gh_bounds(const FiniteMetricSpace& X, const FiniteMetricSpace& Y);

// {"value":..., "optimal_pairs":[[i,j]...], "nodes":..., "method":..., "optimal":...}
std::string gh_result_to_json(const GHResult& result);

}  // namespace ghmetric
