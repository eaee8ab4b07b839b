#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ghmetric/bead.hpp"
#include "ghmetric/gh_solver.hpp"
#include "ghmetric/metric_space.hpp"

namespace ghmetric {

inline constexpr std::uint64_t kDefaultSeed = 20250811;

// Seeded experiment shape. When r is empty the gap terms follow the geometric
// sequence r1 * rho^(n-1) truncated to `blocks` terms; otherwise r is used as
// given and must have `blocks` entries.
struct ExperimentConfig {
  std::uint64_t seed = kDefaultSeed;
  int trials = 25;
  int blocks = 2;
  int max_block_points = 2;
  std::vector<double> r;
  double rho = 0.5;
  double r1 = 1.0;
  double tolerance = 1e-9;
  std::uint64_t node_budget = kDefaultNodeBudget;
  int jobs = 1;  // concurrent trials; results are ordered by trial index
};

void validate_config(const ExperimentConfig& cfg);
std::vector<double> resolve_gap_terms(const ExperimentConfig& cfg);

// Per-trial seed: first output of SplitMix64 seeded with seed + index, so
// trial streams are decorrelated but fully determined by (seed, index).
std::uint64_t trial_seed(std::uint64_t seed, int index);

// GH between two beads over the same gap terms, seeded with the block-union
// of the optimal per-block correspondences. rhs_value is the blockwise max.
struct BeadComparison {
  GHResult bead_result;            // lhs: GH of the two bead spaces
  double rhs_value = 0.0;          // max_n GH(X_n, Y_n)
  std::uint64_t block_nodes = 0;   // nodes spent on the blockwise solves
  bool all_complete = true;
};

BeadComparison compare_bead_gh(const BeadSpace& bx, const BeadSpace& by,
                               std::uint64_t node_budget);

struct TheoremTrial {
  int index = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double deviation = 0.0;
  std::uint64_t nodes = 0;
  bool complete = true;
  double wall_ms = 0.0;  // diagnostic only; never part of the rendered report
};

struct TheoremReport {
  ExperimentConfig cfg;
  std::vector<double> gap_terms;
  std::vector<TheoremTrial> trials;
  double max_deviation = 0.0;
  int failures = 0;     // deviation > tolerance with both searches complete
  int incomplete = 0;   // trials that exhausted the node budget
};

// For each trial: generate random block lists X, Y with diam <= r_n, build
// both beads, compare GH of the beads against the blockwise maximum.
TheoremReport check_theorem(const ExperimentConfig& cfg);

// Canonical report text: byte-identical for identical (seed, config),
// independent of cfg.jobs. Wall times are deliberately excluded.
std::string render_theorem_report(const TheoremReport& report);

struct AxiomCheck {
  std::string property;
  int checks = 0;
  double max_violation = 0.0;
  double limit = 0.0;

  bool ok() const { return max_violation <= limit; }
};

struct AxiomReport {
  std::uint64_t seed = 0;
  int pool_size = 0;
  std::vector<AxiomCheck> entries;

  bool all_pass() const;
  int failures() const;
};

// Property battery over a seeded random pool: symmetry, triangle inequality
// over all 3-subsets, scaling identities, the one-point rule, the 2-Lipschitz
// diameter bound, oracle equivalence, inverse/restriction distortion laws and
// zero-distance isometry.
AxiomReport check_axioms(const ExperimentConfig& cfg);

std::string render_axiom_report(const AxiomReport& report);

}  // namespace ghmetric
