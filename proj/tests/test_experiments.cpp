#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ghmetric/experiments.hpp"
#include "ghmetric/random_metric.hpp"

using namespace ghmetric;

TEST_CASE("random metric generator honors its contract") {
  SplitMix64 rng(7);
  CHECK(gen_random_metric(1, 1.0, rng).size() == 1);

  for (int round = 0; round < 10; ++round) {
    const double bound = rng.uniform(0.2, 3.0);
    const auto space = gen_random_metric(4, bound, rng);
    CHECK(check_metric(space.rows(), 1e-9).empty());
    CHECK(diameter(space) == bound);  // pinned exactly
  }
}

TEST_CASE("random metric generator is seed-deterministic") {
  SplitMix64 a(99), b(99);
  const auto x = gen_random_metric(5, 1.0, a);
  const auto y = gen_random_metric(5, 1.0, b);
  CHECK(x.flat() == y.flat());
}

TEST_CASE("config validation") {
  ExperimentConfig cfg;
  cfg.trials = 0;
  CHECK_THROWS_AS(validate_config(cfg), InputError);
  cfg = {};
  cfg.r = {1.0};  // blocks defaults to 2
  CHECK_THROWS_AS(validate_config(cfg), InputError);
  cfg = {};
  cfg.rho = 1.5;
  CHECK_THROWS_AS(validate_config(cfg), InputError);
  cfg = {};
  cfg.r = {1.0, -0.5};
  CHECK_THROWS_AS(validate_config(cfg), NonpositiveTerm);
  cfg = {};
  CHECK_NOTHROW(validate_config(cfg));
  CHECK(resolve_gap_terms(cfg) == std::vector<double>{1.0, 0.5});
}

TEST_CASE("bead comparison on fixed blocks gives lhs = rhs = 0.3") {
  const std::vector<double> r = {1.0, 0.5};
  const auto bx = build_bead(r, {two_point(0.4), two_point(0.25)});
  const auto by = build_bead(r, {two_point(0.1), two_point(0.25)});
  const auto cmp = compare_bead_gh(bx, by, kDefaultNodeBudget);
  REQUIRE(cmp.all_complete);
  CHECK(cmp.rhs_value == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(cmp.bead_result.value == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(std::abs(cmp.bead_result.value - cmp.rhs_value) <= 1e-9);
}

TEST_CASE("one-block bead comparison matches the one-point rule") {
  SplitMix64 rng(77);
  const std::vector<double> r = {1.0};
  const auto block = gen_random_metric(2, 0.8, rng);
  const auto bx = build_bead(r, {block});
  const auto by = build_bead(r, {one_point()});
  const auto cmp = compare_bead_gh(bx, by, kDefaultNodeBudget);
  REQUIRE(cmp.all_complete);
  CHECK(cmp.rhs_value == doctest::Approx(0.5 * diameter(block)).epsilon(1e-12));
  CHECK(std::abs(cmp.bead_result.value - cmp.rhs_value) <= 1e-9);
}

TEST_CASE("check_theorem runs clean on the default shape") {
  ExperimentConfig cfg;
  cfg.trials = 6;
  const auto report = check_theorem(cfg);
  CHECK(report.trials.size() == 6);
  CHECK(report.failures == 0);
  CHECK(report.incomplete == 0);
  CHECK(report.max_deviation <= 1e-9);
  for (const auto& t : report.trials) CHECK(t.complete);
}

TEST_CASE("reports are byte-identical across runs and parallelism") {
  ExperimentConfig cfg;
  cfg.trials = 5;
  cfg.seed = 4242;

  const std::string serial_a = render_theorem_report(check_theorem(cfg));
  const std::string serial_b = render_theorem_report(check_theorem(cfg));
  cfg.jobs = 4;
  const std::string parallel_a = render_theorem_report(check_theorem(cfg));
  const std::string parallel_b = render_theorem_report(check_theorem(cfg));

  CHECK(serial_a == serial_b);
  CHECK(serial_a == parallel_a);
  CHECK(parallel_a == parallel_b);
}

TEST_CASE("trial seeds differ per index but not per run") {
  CHECK(trial_seed(1, 0) != trial_seed(1, 1));
  CHECK(trial_seed(1, 5) == trial_seed(1, 5));
  CHECK(trial_seed(1, 0) != trial_seed(2, 0));
}

TEST_CASE("axiom battery passes on a seeded pool") {
  ExperimentConfig cfg;
  cfg.seed = 31337;
  const auto report = check_axioms(cfg);
  CHECK(report.all_pass());
  CHECK(report.failures() == 0);
  CHECK(report.entries.size() == 10);
  for (const auto& e : report.entries) {
    CAPTURE(e.property);
    CHECK(e.checks > 0);
    CHECK(e.max_violation <= e.limit);
  }
  // the render is stable
  CHECK(render_axiom_report(report) == render_axiom_report(check_axioms(cfg)));
}
