#include "ghmetric/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <sstream>
#include <thread>

#include "ghmetric/format.hpp"
#include "ghmetric/random_metric.hpp"

namespace ghmetric {

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw InputError("trials must be at least 1");
  if (cfg.blocks < 1) throw InputError("blocks must be at least 1");
  if (cfg.max_block_points < 1) throw InputError("max block points must be at least 1");
  if (!(cfg.tolerance >= 0)) throw InputError("tolerance must be nonnegative");
  if (cfg.node_budget == 0) throw InputError("node budget must be positive");
  if (cfg.jobs < 1) throw InputError("jobs must be at least 1");
  if (cfg.r.empty()) {
    if (!(cfg.rho > 0 && cfg.rho < 1)) throw InputError("rho must lie in (0, 1)");
    if (!(cfg.r1 > 0)) throw InputError("r1 must be positive");
  } else {
    if (static_cast<int>(cfg.r.size()) != cfg.blocks) {
      throw InputError("r has " + std::to_string(cfg.r.size()) + " entries but blocks=" +
                       std::to_string(cfg.blocks));
    }
    for (std::size_t n = 0; n < cfg.r.size(); ++n) {
      if (!(cfg.r[n] > 0)) throw NonpositiveTerm(static_cast<int>(n) + 1, cfg.r[n]);
    }
  }
}

std::vector<double> resolve_gap_terms(const ExperimentConfig& cfg) {
  if (!cfg.r.empty()) return cfg.r;
  std::vector<double> out;
  out.reserve(cfg.blocks);
  double v = cfg.r1;
  for (int n = 0; n < cfg.blocks; ++n) {
    out.push_back(v);
    v *= cfg.rho;
  }
  return out;
}

std::uint64_t trial_seed(std::uint64_t seed, int index) {
  SplitMix64 mixer(seed + static_cast<std::uint64_t>(index));
  return mixer.next();
}

BeadComparison compare_bead_gh(const BeadSpace& bx, const BeadSpace& by,
                               std::uint64_t node_budget) {
  BeadComparison out;
  const int N = bx.block_count();
  std::vector<Correspondence> per_block;
  per_block.reserve(N);
  for (int n = 1; n <= N; ++n) {
    const GHResult res = gh_exact(bx.blocks[n], by.blocks[n], node_budget);
    out.rhs_value = std::max(out.rhs_value, res.value);
    out.block_nodes += res.nodes_explored;
    out.all_complete = out.all_complete && res.is_optimal;
    per_block.push_back(res.optimal);
  }
  const BlockUnion hint = block_union_distortion(bx, by, per_block);
  out.bead_result = gh_exact(bx.space, by.space, node_budget, {hint.corr});
  out.all_complete = out.all_complete && out.bead_result.is_optimal;
  return out;
}

namespace {

std::vector<FiniteMetricSpace> random_blocks(const std::vector<double>& r, int max_points,
                                             SplitMix64& rng) {
  std::vector<FiniteMetricSpace> out;
  out.reserve(r.size());
  for (double bound : r) {
    const int points = rng.uniform_int(1, max_points);
    const double diam = bound * rng.uniform(0.2, 1.0);
    out.push_back(gen_random_metric(points, diam, rng));
  }
  return out;
}

TheoremTrial run_trial(const ExperimentConfig& cfg, const std::vector<double>& terms,
                       int index) {
  const auto t0 = std::chrono::steady_clock::now();
  SplitMix64 rng(trial_seed(cfg.seed, index));
  const auto xs = random_blocks(terms, cfg.max_block_points, rng);
  const auto ys = random_blocks(terms, cfg.max_block_points, rng);
  const BeadSpace bx = build_bead(terms, xs);
  const BeadSpace by = build_bead(terms, ys);
  const BeadComparison cmp = compare_bead_gh(bx, by, cfg.node_budget);

  TheoremTrial trial;
  trial.index = index;
  trial.lhs = cmp.bead_result.value;
  trial.rhs = cmp.rhs_value;
  trial.deviation = std::abs(trial.lhs - trial.rhs);
  trial.nodes = cmp.bead_result.nodes_explored + cmp.block_nodes;
  trial.complete = cmp.all_complete;
  trial.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return trial;
}

}  // namespace

TheoremReport check_theorem(const ExperimentConfig& cfg) {
  validate_config(cfg);
  TheoremReport report;
  report.cfg = cfg;
  report.gap_terms = resolve_gap_terms(cfg);
  gap_sequence(report.gap_terms);  // fail fast on bad terms

  report.trials.resize(cfg.trials);
  const int jobs = std::min(cfg.jobs, cfg.trials);
  if (jobs <= 1) {
    for (int i = 0; i < cfg.trials; ++i) report.trials[i] = run_trial(cfg, report.gap_terms, i);
  } else {
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= cfg.trials) return;
        try {
          report.trials[i] = run_trial(cfg, report.gap_terms, i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  for (const TheoremTrial& t : report.trials) {
    if (!t.complete) {
      ++report.incomplete;
      continue;
    }
    report.max_deviation = std::max(report.max_deviation, t.deviation);
    if (t.deviation > cfg.tolerance) ++report.failures;
  }
  return report;
}

std::string render_theorem_report(const TheoremReport& report) {
  std::ostringstream out;
  out << "check-theorem seed=" << report.cfg.seed << " trials=" << report.cfg.trials
      << " blocks=" << report.cfg.blocks << " max-points=" << report.cfg.max_block_points
      << " r=" << join12(report.gap_terms) << " budget=" << report.cfg.node_budget
      << " tolerance=" << fmt12(report.cfg.tolerance) << "\n";
  for (const TheoremTrial& t : report.trials) {
    out << "trial " << t.index << ": lhs=" << fmt12(t.lhs) << " rhs=" << fmt12(t.rhs)
        << " dev=" << fmt12(t.deviation) << " nodes=" << t.nodes
        << " complete=" << (t.complete ? "yes" : "no") << "\n";
  }
  out << "summary: trials=" << report.trials.size() << " failures=" << report.failures
      << " incomplete=" << report.incomplete << " max-dev=" << fmt12(report.max_deviation)
      << "\n";
  return out.str();
}

bool AxiomReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const AxiomCheck& e) { return e.ok(); });
}

int AxiomReport::failures() const {
  int n = 0;
  for (const auto& e : entries) n += e.ok() ? 0 : 1;
  return n;
}

namespace {

Correspondence random_correspondence(int nx, int ny, SplitMix64& rng) {
  std::vector<IndexPair> pairs;
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      if (rng.next_unit() < 0.4) pairs.emplace_back(i, j);

  std::vector<bool> x_hit(nx, false), y_hit(ny, false);
  for (const auto& [i, j] : pairs) {
    x_hit[i] = true;
    y_hit[j] = true;
  }
  for (int i = 0; i < nx; ++i)
    if (!x_hit[i]) pairs.emplace_back(i, rng.uniform_int(0, ny - 1));
  for (int j = 0; j < ny; ++j)
    if (!y_hit[j]) pairs.emplace_back(rng.uniform_int(0, nx - 1), j);
  return make_correspondence(std::move(pairs), nx, ny);
}

// Minimal sub-correspondence: one image per X point, one preimage per
// leftover Y point, all chosen inside R.
Correspondence minimal_restriction(const Correspondence& corr, int nx, int ny) {
  std::vector<IndexPair> pairs;
  std::vector<bool> y_hit(ny, false);
  for (int i = 0; i < nx; ++i) {
    for (const auto& [a, b] : corr.pairs) {
      if (a == i) {
        pairs.emplace_back(a, b);
        y_hit[b] = true;
        break;
      }
    }
  }
  for (int j = 0; j < ny; ++j) {
    if (y_hit[j]) continue;
    for (const auto& [a, b] : corr.pairs) {
      if (b == j) {
        pairs.emplace_back(a, b);
        break;
      }
    }
  }
  return make_correspondence(std::move(pairs), nx, ny);
}

FiniteMetricSpace rotate_points(const FiniteMetricSpace& s) {
  const int n = s.size();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = (i + 1) % n;
  std::vector<std::vector<double>> mat(n, std::vector<double>(n, 0.0));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = s.labels()[perm[i]];
    for (int j = 0; j < n; ++j) mat[i][j] = s.dist(perm[i], perm[j]);
  }
  return validate_metric(mat, std::move(labels), s.tolerance());
}

}  // namespace

AxiomReport check_axioms(const ExperimentConfig& cfg) {
  constexpr int kPool = 12;
  constexpr int kPoolMaxPoints = 4;
  const std::uint64_t budget = cfg.node_budget;

  SplitMix64 rng(cfg.seed);
  std::vector<FiniteMetricSpace> pool;
  pool.reserve(kPool);
  for (int i = 0; i < kPool; ++i) {
    const int n = rng.uniform_int(1, kPoolMaxPoints);
    const double diam = rng.uniform(0.5, 2.0);
    pool.push_back(gen_random_metric(n, diam, rng));
  }

  AxiomReport report;
  report.seed = cfg.seed;
  report.pool_size = kPool;

  AxiomCheck symmetry{"symmetry", 0, 0.0, 0.0};
  AxiomCheck triangle{"triangle-inequality", 0, 0.0, 1e-9};
  AxiomCheck one_point_rule{"one-point-rule", 0, 0.0, 1e-9};
  AxiomCheck scaling{"scaling", 0, 0.0, 1e-9};
  AxiomCheck scale_diff{"scale-difference", 0, 0.0, 1e-9};
  AxiomCheck lipschitz{"diameter-lipschitz", 0, 0.0, 0.0};
  AxiomCheck oracle{"oracle-equivalence", 0, 0.0, 1e-12};
  AxiomCheck inv_dis{"inverse-distortion", 0, 0.0, 0.0};
  AxiomCheck restriction{"restriction-monotone", 0, 0.0, 0.0};
  AxiomCheck zero_iso{"zero-implies-isometric", 0, 0.0, 0.0};

  std::vector<std::vector<double>> gh(kPool, std::vector<double>(kPool, 0.0));
  for (int i = 0; i < kPool; ++i) {
    for (int j = i + 1; j < kPool; ++j) {
      const double forward = gh_exact(pool[i], pool[j], budget).value;
      const double backward = gh_exact(pool[j], pool[i], budget).value;
      gh[i][j] = gh[j][i] = forward;
      symmetry.max_violation = std::max(symmetry.max_violation, std::abs(forward - backward));
      ++symmetry.checks;
    }
  }

  for (int i = 0; i < kPool; ++i) {
    for (int j = i + 1; j < kPool; ++j) {
      for (int k = 0; k < kPool; ++k) {
        if (k == i || k == j) continue;
        triangle.max_violation =
            std::max(triangle.max_violation, gh[i][j] - gh[i][k] - gh[k][j]);
        ++triangle.checks;
      }
    }
  }
  triangle.max_violation = std::max(triangle.max_violation, 0.0);

  const FiniteMetricSpace single = one_point();
  for (const auto& space : pool) {
    const double got = gh_exact(space, single, budget).value;
    one_point_rule.max_violation =
        std::max(one_point_rule.max_violation, std::abs(got - 0.5 * diameter(space)));
    ++one_point_rule.checks;
  }

  const double ts[] = {0.5, 2.0, 3.0};
  int scaled_pairs = 0;
  for (int i = 0; i < kPool && scaled_pairs < 10; ++i) {
    for (int j = i + 1; j < kPool && scaled_pairs < 10; ++j) {
      for (double t : ts) {
        const double got = gh_exact(scale(pool[i], t), scale(pool[j], t), budget).value;
        scaling.max_violation = std::max(scaling.max_violation, std::abs(got - t * gh[i][j]));
        ++scaling.checks;
      }
      ++scaled_pairs;
    }
  }

  const std::pair<double, double> st[] = {{2.0, 0.5}, {3.0, 1.0}};
  for (const auto& space : pool) {
    for (const auto& [t, s] : st) {
      const double got = gh_exact(scale(space, t), scale(space, s), budget).value;
      const double expected = 0.5 * std::abs(t - s) * diameter(space);
      scale_diff.max_violation = std::max(scale_diff.max_violation, std::abs(got - expected));
      ++scale_diff.checks;
    }
  }

  for (int i = 0; i < kPool; ++i) {
    for (int j = i + 1; j < kPool; ++j) {
      const double gap = std::abs(diameter(pool[i]) - diameter(pool[j]));
      lipschitz.max_violation = std::max(lipschitz.max_violation, gap - 2.0 * gh[i][j]);
      ++lipschitz.checks;
    }
  }
  lipschitz.max_violation = std::max(lipschitz.max_violation, 0.0);

  for (int i = 0; i < kPool; ++i) {
    for (int j = i + 1; j < kPool; ++j) {
      if (pool[i].size() * pool[j].size() > 20) continue;
      const double brute = gh_bruteforce(pool[i], pool[j]).value;
      oracle.max_violation = std::max(oracle.max_violation, std::abs(gh[i][j] - brute));
      ++oracle.checks;
    }
  }

  for (int i = 0; i < kPool; ++i) {
    for (int j = i + 1; j < kPool; ++j) {
      const Correspondence corr =
          random_correspondence(pool[i].size(), pool[j].size(), rng);
      const double dis = distortion(pool[i], pool[j], corr);
      const double dis_inv = distortion(pool[j], pool[i], inverse(corr));
      inv_dis.max_violation = std::max(inv_dis.max_violation, std::abs(dis - dis_inv));
      ++inv_dis.checks;

      const Correspondence sub =
          minimal_restriction(corr, pool[i].size(), pool[j].size());
      restriction.max_violation =
          std::max(restriction.max_violation, distortion(pool[i], pool[j], sub) - dis);
      ++restriction.checks;
    }
  }
  restriction.max_violation = std::max(restriction.max_violation, 0.0);

  for (int i = 0; i < kPool; ++i) {
    const FiniteMetricSpace rotated = rotate_points(pool[i]);
    const double value = gh_exact(pool[i], rotated, budget).value;
    const bool iso = is_isometric(pool[i], rotated, 1e-9).isometric;
    zero_iso.max_violation =
        std::max(zero_iso.max_violation, std::max(value, iso ? 0.0 : 1.0));
    ++zero_iso.checks;
  }
  for (int i = 0; i < kPool; ++i) {
    for (int j = i + 1; j < kPool; ++j) {
      if (gh[i][j] != 0.0) continue;
      const bool iso = is_isometric(pool[i], pool[j], 1e-9).isometric;
      zero_iso.max_violation = std::max(zero_iso.max_violation, iso ? 0.0 : 1.0);
      ++zero_iso.checks;
    }
  }

  report.entries = {symmetry,  triangle,    one_point_rule, scaling,     scale_diff,
                    lipschitz, oracle,      inv_dis,        restriction, zero_iso};
  return report;
}

std::string render_axiom_report(const AxiomReport& report) {
  std::ostringstream out;
  out << "check-axioms seed=" << report.seed << " pool=" << report.pool_size << "\n";
  for (const AxiomCheck& e : report.entries) {
    out << "property=" << e.property << " checks=" << e.checks
        << " max-violation=" << fmt12(e.max_violation) << " limit=" << fmt12(e.limit)
        << " status=" << (e.ok() ? "ok" : "FAIL") << "\n";
  }
  out << "summary: properties=" << report.entries.size() << " failures=" << report.failures()
      << "\n";
  return out.str();
}

}  // namespace ghmetric
