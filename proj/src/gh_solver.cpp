#include "ghmetric/gh_solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

#include <json.hpp>

namespace ghmetric {

const char* to_string(SolveMethod method) {
  switch (method) {
    case SolveMethod::oracle: return "oracle";
    case SolveMethod::branch_and_bound: return "branch-and-bound";
    case SolveMethod::bounds_only: return "bounds-only";
  }
  return "unknown";
}

namespace {

std::vector<std::vector<double>> sorted_rows(const FiniteMetricSpace& s) {
  auto rows = s.rows();
  for (auto& row : rows) std::sort(row.begin(), row.end());
  return rows;
}

// Matches points with similar sorted distance profiles; any valid
// correspondence works here, a good one just prunes earlier.
std::vector<IndexPair> greedy_union(const FiniteMetricSpace& X, const FiniteMetricSpace& Y) {
  const int nx = X.size(), ny = Y.size();
  const auto px = sorted_rows(X), py = sorted_rows(Y);
  const int m = std::min(nx, ny);
  auto cost = [&](int i, int j) {
    double c = 0.0;
    for (int t = 0; t < m; ++t) c += std::abs(px[i][t] - py[j][t]);
    return c;
  };

  std::vector<IndexPair> pairs;
  std::vector<bool> covered(ny, false);
  for (int i = 0; i < nx; ++i) {
    int best = 0;
    double best_cost = cost(i, 0);
    for (int j = 1; j < ny; ++j) {
      const double c = cost(i, j);
      // Equal-cost ties spread onto uncovered targets.
      if (c < best_cost || (c == best_cost && covered[best] && !covered[j])) {
        best_cost = c;
        best = j;
      }
    }
    pairs.emplace_back(i, best);
    covered[best] = true;
  }
  for (int j = 0; j < ny; ++j) {
    if (covered[j]) continue;
    int best = 0;
    double best_cost = cost(0, j);
    for (int i = 1; i < nx; ++i) {
      const double c = cost(i, j);
      if (c < best_cost) {
        best_cost = c;
        best = i;
      }
    }
    pairs.emplace_back(best, j);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

std::vector<int> eccentricity_order(const FiniteMetricSpace& s) {
  const int n = s.size();
  std::vector<double> ecc(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ecc[i] = std::max(ecc[i], s.dist(i, j));
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return ecc[a] > ecc[b]; });
  return order;
}

// Branch-and-bound over (f, g) unions. Bound comparisons are exact float
// comparisons; an epsilon there could cut the optimum.
struct Search {
  const FiniteMetricSpace& x;
  const FiniteMetricSpace& y;
  std::vector<int> order;  // X points, decreasing eccentricity
  std::uint64_t budget = 0;
  std::uint64_t nodes = 0;
  bool out_of_budget = false;

  std::vector<IndexPair> path;
  std::vector<int> cover;  // per Y point, number of f-pairs hitting it

  // Phase 1: `bound` is the incumbent distortion, improved on every strictly
  // better leaf. Phase 2 (tie_break): `bound` is the fixed optimum and every
  // optimal leaf competes for the lexicographically smallest pair set.
  bool tie_break = false;
  double bound = std::numeric_limits<double>::infinity();
  std::vector<IndexPair> best;
  bool found_canonical = false;
  std::vector<IndexPair> canonical;

  Search(const FiniteMetricSpace& X, const FiniteMetricSpace& Y)
      : x(X), y(Y), order(eccentricity_order(X)), cover(Y.size(), 0) {}

  double extend(int xi, int yj, double partial) const {
    double m = partial;
    for (const auto& [pi, pj] : path) {
      m = std::max(m, std::abs(x.dist(xi, pi) - y.dist(yj, pj)));
    }
    return m;
  }

  bool pruned(double partial) const {
    return tie_break ? partial > bound : partial >= bound;
  }

  void leaf(double dis) {
    if (tie_break) {
      if (dis > bound) return;
      auto set = path;
      std::sort(set.begin(), set.end());
      if (!found_canonical || set < canonical) {
        canonical = std::move(set);
        found_canonical = true;
      }
      return;
    }
    if (dis < bound) {
      bound = dis;
      best = path;
      std::sort(best.begin(), best.end());
    }
  }

  void dive_g(const std::vector<int>& uncovered, std::size_t gi, double partial) {
    if (++nodes > budget) {
      out_of_budget = true;
      return;
    }
    if (gi == uncovered.size()) {
      leaf(partial);
      return;
    }
    const int yj = uncovered[gi];
    for (int xi = 0; xi < x.size(); ++xi) {
      const double d = extend(xi, yj, partial);
      if (pruned(d)) continue;
      path.emplace_back(xi, yj);
      dive_g(uncovered, gi + 1, d);
      path.pop_back();
      if (out_of_budget) return;
    }
  }

  void dive_f(std::size_t depth, double partial) {
    if (++nodes > budget) {
      out_of_budget = true;
      return;
    }
    if (depth == order.size()) {
      std::vector<int> uncovered;
      for (int j = 0; j < y.size(); ++j)
        if (cover[j] == 0) uncovered.push_back(j);
      dive_g(uncovered, 0, partial);
      return;
    }
    const int xi = order[depth];
    for (int yj = 0; yj < y.size(); ++yj) {
      const double d = extend(xi, yj, partial);
      if (pruned(d)) continue;
      path.emplace_back(xi, yj);
      ++cover[yj];
      dive_f(depth + 1, d);
      --cover[yj];
      path.pop_back();
      if (out_of_budget) return;
    }
  }
};

double diameter_lower_bound(const FiniteMetricSpace& X, const FiniteMetricSpace& Y) {
  return 0.5 * std::abs(diameter(X) - diameter(Y));
}

}  // namespace

GHResult gh_exact(const FiniteMetricSpace& X, const FiniteMetricSpace& Y,
                  std::uint64_t node_budget, const std::vector<Correspondence>& hints) {
  if (node_budget == 0) throw InputError("node budget must be positive");
  const double lower = diameter_lower_bound(X, Y);

  std::vector<IndexPair> incumbent = greedy_union(X, Y);
  double incumbent_dis = pair_set_distortion(X, Y, incumbent);
  for (const Correspondence& hint : hints) {
    const double dis = distortion(X, Y, hint);
    auto pairs = hint.pairs;
    std::sort(pairs.begin(), pairs.end());
    if (dis < incumbent_dis || (dis == incumbent_dis && pairs < incumbent)) {
      incumbent_dis = dis;
      incumbent = std::move(pairs);
    }
  }

  Search search(X, Y);
  search.budget = node_budget;
  search.bound = incumbent_dis;
  search.best = incumbent;
  search.dive_f(0, 0.0);

  GHResult result;
  result.lower_bound_used = lower;
  result.method = SolveMethod::branch_and_bound;
  if (search.out_of_budget) {
    result.value = 0.5 * search.bound;
    result.optimal = Correspondence{search.best};
    result.nodes_explored = search.nodes;
    result.is_optimal = false;
    return result;
  }

  // Value is proven optimal; re-walk at the fixed optimum for the canonical
  // certificate. A budget hit here only degrades the tie-break, not the value.
  search.tie_break = true;
  search.dive_f(0, 0.0);

  result.value = 0.5 * search.bound;
  result.optimal = Correspondence{search.found_canonical ? search.canonical : search.best};
  result.nodes_explored = search.nodes;
  result.is_optimal = true;
  return result;
}

GHResult gh_bruteforce(const FiniteMetricSpace& X, const FiniteMetricSpace& Y) {
  const int nx = X.size(), ny = Y.size();
  const int k = nx * ny;
  if (k > 20) {
    throw SearchTooLarge("brute-force oracle enumerates 2^(" + std::to_string(k) +
                         ") relations; limit is |X|*|Y| <= 20");
  }

  // |d_X - d_Y| table over pair slots: slot b encodes the pair (b / ny, b % ny).
  std::vector<double> table(static_cast<std::size_t>(k) * k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      table[static_cast<std::size_t>(a) * k + b] =
          std::abs(X.dist(a / ny, b / ny) - Y.dist(a % ny, b % ny));
    }
  }
  std::vector<std::uint32_t> row_mask(nx, 0), col_mask(ny, 0);
  for (int b = 0; b < k; ++b) {
    row_mask[b / ny] |= 1u << b;
    col_mask[b % ny] |= 1u << b;
  }

  double best = std::numeric_limits<double>::infinity();
  std::vector<IndexPair> best_pairs;
  int slots[20];

  const std::uint32_t limit = static_cast<std::uint32_t>((1ull << k) - 1);
  for (std::uint32_t mask = 1; mask <= limit; ++mask) {
    bool covered = true;
    for (int i = 0; i < nx && covered; ++i) covered = (mask & row_mask[i]) != 0;
    for (int j = 0; j < ny && covered; ++j) covered = (mask & col_mask[j]) != 0;
    if (!covered) continue;

    int count = 0;
    for (std::uint32_t bits = mask; bits; bits &= bits - 1) {
      slots[count++] = std::countr_zero(bits);
    }
    double dis = 0.0;
    for (int a = 0; a < count; ++a) {
      const double* row = table.data() + static_cast<std::size_t>(slots[a]) * k;
      for (int b = a + 1; b < count; ++b) dis = std::max(dis, row[slots[b]]);
    }

    if (dis > best) continue;
    std::vector<IndexPair> pairs;
    pairs.reserve(count);
    for (int a = 0; a < count; ++a) pairs.emplace_back(slots[a] / ny, slots[a] % ny);
    if (dis < best || pairs < best_pairs) {
      best = dis;
      best_pairs = std::move(pairs);
    }
  }

  GHResult result;
  result.value = 0.5 * best;
  result.optimal = Correspondence{std::move(best_pairs)};
  result.nodes_explored = limit;
  result.lower_bound_used = diameter_lower_bound(X, Y);
  result.method = SolveMethod::oracle;
  result.is_optimal = true;
  return result;
}

GHBounds gh_bounds(const FiniteMetricSpace& X, const FiniteMetricSpace& Y) {
  GHBounds out;
  out.lower = diameter_lower_bound(X, Y);
  const double cap = std::max(diameter(X), diameter(Y));
  auto pairs = greedy_union(X, Y);
  const double half_dis = 0.5 * pair_set_distortion(X, Y, pairs);
  out.upper = std::min(half_dis, cap);
  out.witness = Correspondence{std::move(pairs)};
  out.witness_attains = half_dis <= cap;
  return out;
}

std::string gh_result_to_json(const GHResult& result) {
  nlohmann::json doc;
  doc["value"] = result.value;
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [i, j] : result.optimal.pairs) pairs.push_back({i, j});
  doc["optimal_pairs"] = std::move(pairs);
  doc["nodes"] = result.nodes_explored;
  doc["method"] = to_string(result.method);
  doc["optimal"] = result.is_optimal;
  return doc.dump();
}

}  // namespace ghmetric
