#pragma once

#include <compare>
#include <vector>

#include "ghmetric/correspondence.hpp"
#include "ghmetric/metric_space.hpp"

namespace ghmetric {

// Position in the bead chain 0 < 1 < ... < N < omega < omega+1, stored as a
// dense rank 0..N+2 (omega = N+1).
struct BeadIndex {
  int rank = 0;
  auto operator<=>(const BeadIndex&) const = default;
};

// The gap arithmetic of a bead space. terms holds r_1..r_N (all positive),
// total their sum c, and gaps the inter-block gap sequence indexed by rank:
//   gaps[0]   = 2c
//   gaps[n]   = r_n + r_{n+1}   for 1 <= n < N
//   gaps[N]   = r_N             (finite-truncation tail, r_{N+1} := 0)
//   gaps[N+1] = 8c              (the omega gap)
// The boundary multipliers 2c and 8c are fixed by the construction and are
// exposed read-only through this struct.
struct GapSequence {
  std::vector<double> terms;
  double total = 0.0;
  std::vector<double> gaps;

  int block_count() const { return static_cast<int>(terms.size()); }
  BeadIndex origin() const { return {0}; }
  BeadIndex block(int n) const;  // 1-based, throws on range
  BeadIndex omega() const { return {block_count() + 1}; }
  BeadIndex omega_plus_one() const { return {block_count() + 2}; }
};

GapSequence gap_sequence(const std::vector<double>& r);

// Distance between any point of block a and any point of block b (a < b):
// 3 * sum of gaps[a..b). Throws BadOrder when a >= b.
double bead_gap(const GapSequence& g, BeadIndex a, BeadIndex b);

// A bead space: one-point sentinel blocks at ranks 0, omega, omega+1 around
// the input blocks, cross-block distances constant per block pair.
struct BeadSpace {
  FiniteMetricSpace space;
  GapSequence gaps;
  std::vector<int> block_of;      // rank of the block containing each point
  std::vector<int> block_offset;  // first point index of each rank, size N+3
  std::vector<FiniteMetricSpace> blocks;  // sentinels included, size N+3

  int block_count() const { return gaps.block_count(); }
  int block_size(int rank) const { return blocks[rank].size(); }
};

// Assembles and validates the bead space over 3 + sum |X_n| points.
// Requires |blocks| = N and diameter(blocks[n]) <= r_n (tolerance 1e-9);
// the result has diameter 36c - 3r_1.
BeadSpace build_bead(const std::vector<double>& r,
                     const std::vector<FiniteMetricSpace>& blocks);

struct BlockUnion {
  Correspondence corr;  // on bead point indices
  double distortion;    // exact; equals max_n distortion(R_n)
};

// Unites per-block correspondences R_1..R_N (sentinels matched pointwise)
// into a correspondence between two beads built over the same gap sequence.
// Cross-block pair-pairs contribute zero because gaps depend only on ranks,
// so the exact distortion equals the blockwise maximum.
BlockUnion block_union_distortion(const BeadSpace& bx, const BeadSpace& by,
                                  const std::vector<Correspondence>& per_block);

}  // namespace ghmetric
