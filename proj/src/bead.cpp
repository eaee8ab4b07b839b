#include "ghmetric/bead.hpp"

#include <algorithm>

namespace ghmetric {

BeadIndex GapSequence::block(int n) const {
  if (n < 1 || n > block_count()) {
    throw InputError("block index " + std::to_string(n) + " outside 1.." +
                     std::to_string(block_count()));
  }
  return {n};
}

GapSequence gap_sequence(const std::vector<double>& r) {
  if (r.empty()) throw EmptySequence();
  for (std::size_t n = 0; n < r.size(); ++n) {
    if (!(r[n] > 0)) throw NonpositiveTerm(static_cast<int>(n) + 1, r[n]);
  }
  GapSequence g;
  g.terms = r;
  for (double v : r) g.total += v;

  const int N = g.block_count();
  g.gaps.resize(static_cast<std::size_t>(N) + 2);
  g.gaps[0] = 2.0 * g.total;
  for (int n = 1; n < N; ++n) g.gaps[n] = r[n - 1] + r[n];
  g.gaps[N] = r[N - 1];
  g.gaps[N + 1] = 8.0 * g.total;
  return g;
}

double bead_gap(const GapSequence& g, BeadIndex a, BeadIndex b) {
  const int top = g.block_count() + 2;
  if (a.rank < 0 || b.rank < 0 || a.rank > top || b.rank > top) {
    throw InputError("bead index outside 0.." + std::to_string(top));
  }
  if (!(a < b)) throw BadOrder(a.rank, b.rank);
  double sum = 0.0;
  for (int t = a.rank; t < b.rank; ++t) sum += g.gaps[t];
  return 3.0 * sum;
}

BeadSpace build_bead(const std::vector<double>& r,
                     const std::vector<FiniteMetricSpace>& blocks) {
  GapSequence g = gap_sequence(r);
  const int N = g.block_count();
  if (static_cast<int>(blocks.size()) != N) {
    throw InputError("gap sequence has " + std::to_string(N) + " terms but " +
                     std::to_string(blocks.size()) + " blocks were given");
  }
  for (int n = 1; n <= N; ++n) {
    const double d = diameter(blocks[n - 1]);
    if (d > r[n - 1] + kDefaultTolerance) throw BlockTooLarge(n, d, r[n - 1]);
  }

  BeadSpace bead;
  bead.gaps = std::move(g);
  bead.blocks.reserve(static_cast<std::size_t>(N) + 3);
  bead.blocks.push_back(one_point("p0"));
  for (const auto& block : blocks) bead.blocks.push_back(block);
  bead.blocks.push_back(one_point("pw"));
  bead.blocks.push_back(one_point("pw1"));

  const int ranks = N + 3;
  bead.block_offset.resize(ranks);
  int total = 0;
  for (int rank = 0; rank < ranks; ++rank) {
    bead.block_offset[rank] = total;
    total += bead.blocks[rank].size();
  }

  std::vector<std::vector<double>> mat(total, std::vector<double>(total, 0.0));
  std::vector<std::string> labels(total);
  bead.block_of.resize(total);
  for (int rank = 0; rank < ranks; ++rank) {
    const auto& block = bead.blocks[rank];
    const int off = bead.block_offset[rank];
    for (int s = 0; s < block.size(); ++s) {
      bead.block_of[off + s] = rank;
      if (rank == 0 || rank >= N + 1) {
        labels[off + s] = block.labels()[s];
      } else {
        labels[off + s] = "b" + std::to_string(rank) + ":" + block.labels()[s];
      }
      for (int t = 0; t < block.size(); ++t) mat[off + s][off + t] = block.dist(s, t);
    }
  }
  for (int a = 0; a < ranks; ++a) {
    for (int b = a + 1; b < ranks; ++b) {
      const double gap = bead_gap(bead.gaps, {a}, {b});
      for (int s = 0; s < bead.blocks[a].size(); ++s) {
        for (int t = 0; t < bead.blocks[b].size(); ++t) {
          mat[bead.block_offset[a] + s][bead.block_offset[b] + t] = gap;
          mat[bead.block_offset[b] + t][bead.block_offset[a] + s] = gap;
        }
      }
    }
  }

  bead.space = validate_metric(mat, std::move(labels), kDefaultTolerance);
  return bead;
}

BlockUnion block_union_distortion(const BeadSpace& bx, const BeadSpace& by,
                                  const std::vector<Correspondence>& per_block) {
  const int N = bx.block_count();
  if (by.block_count() != N || bx.gaps.terms != by.gaps.terms) {
    throw InputError("bead spaces were built over different gap sequences");
  }
  if (static_cast<int>(per_block.size()) != N) {
    throw InputError("expected " + std::to_string(N) + " per-block correspondences, got " +
                     std::to_string(per_block.size()));
  }

  std::vector<IndexPair> pairs;
  for (int rank : {0, N + 1, N + 2}) {
    pairs.emplace_back(bx.block_offset[rank], by.block_offset[rank]);
  }
  for (int n = 1; n <= N; ++n) {
    const Correspondence local =
        make_correspondence(per_block[n - 1].pairs, bx.block_size(n), by.block_size(n));
    for (const auto& [a, b] : local.pairs) {
      pairs.emplace_back(bx.block_offset[n] + a, by.block_offset[n] + b);
    }
  }
  std::sort(pairs.begin(), pairs.end());

  BlockUnion out;
  out.corr = Correspondence{std::move(pairs)};
  out.distortion = distortion(bx.space, by.space, out.corr);
  return out;
}

}  // namespace ghmetric
