#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ghmetric/gh_solver.hpp"
#include "ghmetric/random_metric.hpp"

using namespace ghmetric;

namespace {

// 3-point path 0 - 1 - 2 with unit steps.
FiniteMetricSpace path3() { return validate_metric({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}); }

}  // namespace

TEST_CASE("distortion of hand-checked relations") {
  const auto pair = two_point(1.0);
  CHECK(distortion(pair, pair, identity_correspondence(2)) == 0.0);

  // all d_X terms vanish, so the sup is diam(Y)
  const auto single = one_point();
  const auto y = validate_metric({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  CHECK(distortion(single, y, full_correspondence(1, 3)) == 2.0);

  // frozen by direct evaluation of the 9 pair-pairs
  const auto corr = make_correspondence({{0, 0}, {1, 0}, {2, 1}}, 3, 2);
  CHECK(distortion(path3(), pair, corr) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("distortion rejects non-correspondences") {
  const auto x = path3();
  const auto y = two_point(1.0);
  CHECK_THROWS_AS(distortion(x, y, Correspondence{{{0, 0}, {1, 1}}}), NotACorrespondence);
  CHECK_THROWS_AS(distortion(x, y, Correspondence{{{0, 0}, {1, 0}, {2, 5}}}),
                  NotACorrespondence);
  CHECK_THROWS_AS(make_correspondence({{0, 0}}, 2, 1), NotACorrespondence);
}

TEST_CASE("bruteforce oracle on the canonical instances") {
  CHECK(gh_bruteforce(one_point(), one_point()).value == 0.0);
  CHECK(gh_bruteforce(two_point(1.0), one_point()).value == 1.0);
  // frozen: exhaustive enumeration over all 2^6 relations gives 1/2
  const auto res = gh_bruteforce(path3(), two_point(1.0));
  CHECK(res.value == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(distortion(path3(), two_point(1.0), res.optimal) ==
        doctest::Approx(2 * res.value).epsilon(1e-12));
  CHECK(res.method == SolveMethod::oracle);
  CHECK(res.is_optimal);
}

TEST_CASE("bruteforce refuses oversized instances") {
  SplitMix64 rng(3);
  const auto a = gen_random_metric(5, 1.0, rng);
  const auto b = gen_random_metric(5, 1.0, rng);
  CHECK_THROWS_AS(gh_bruteforce(a, b), SearchTooLarge);
}

TEST_CASE("exact solver on the canonical instances") {
  CHECK(gh_exact(scale(two_point(1.0), 1.5), scale(two_point(1.0), 0.5)).value ==
        doctest::Approx(1.0).epsilon(1e-12));

  SplitMix64 rng(17);
  const auto x = gen_random_metric(4, 2.0, rng);
  CHECK(gh_exact(x, x).value == 0.0);

  const auto equilateral =
      validate_metric({{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}});
  CHECK(gh_exact(equilateral, one_point()).value == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("result invariants: certificate distortion and lower bound") {
  SplitMix64 rng(23);
  for (int round = 0; round < 15; ++round) {
    const auto a = gen_random_metric(rng.uniform_int(1, 4), rng.uniform(0.5, 2.0), rng);
    const auto b = gen_random_metric(rng.uniform_int(1, 4), rng.uniform(0.5, 2.0), rng);
    const auto res = gh_exact(a, b);
    CHECK(distortion(a, b, res.optimal) == doctest::Approx(2 * res.value).epsilon(1e-9));
    CHECK(res.value >= res.lower_bound_used);
    CHECK(res.is_optimal);
  }
}

TEST_CASE("budget exhaustion returns a flagged incumbent") {
  SplitMix64 rng(31);
  const auto a = gen_random_metric(4, 2.0, rng);
  const auto b = gen_random_metric(4, 1.0, rng);
  const auto res = gh_exact(a, b, 3);
  CHECK_FALSE(res.is_optimal);
  CHECK(res.value >= res.lower_bound_used);
  CHECK(distortion(a, b, res.optimal) == doctest::Approx(2 * res.value).epsilon(1e-12));
  CHECK(res.nodes_explored <= 4);

  CHECK_THROWS_AS(gh_exact(a, b, 0), InputError);
}

TEST_CASE("deterministic value and lexicographically smallest certificate") {
  const auto pair = two_point(1.0);
  const auto r1 = gh_exact(pair, pair);
  const auto r2 = gh_exact(pair, pair);
  CHECK(r1.value == r2.value);
  CHECK(r1.optimal.pairs == r2.optimal.pairs);
  // both the identity and the swap achieve zero distortion; the tie breaks
  // to the lexicographically smallest pair set
  CHECK(r1.optimal.pairs == std::vector<IndexPair>{{0, 0}, {1, 1}});

  // hints must not change the certificate either
  const auto swapped = make_correspondence({{0, 1}, {1, 0}}, 2, 2);
  const auto hinted = gh_exact(pair, pair, kDefaultNodeBudget, {swapped});
  CHECK(hinted.optimal.pairs == r1.optimal.pairs);
}

TEST_CASE("bounds pinch on diameter-separated instances") {
  const auto single = one_point();
  const auto pair = two_point(1.0);

  auto b = gh_bounds(pair, single);
  CHECK(b.lower == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(b.upper == doctest::Approx(1.0).epsilon(1e-12));

  CHECK(gh_bounds(pair, pair).lower == 0.0);

  b = gh_bounds(scale(pair, 1.5), scale(pair, 0.5));
  CHECK(b.lower == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(gh_exact(scale(pair, 1.5), scale(pair, 0.5)).value ==
        doctest::Approx(b.lower).epsilon(1e-12));
}

TEST_CASE("property: bounds bracket the exact value") {
  SplitMix64 rng(37);
  for (int round = 0; round < 20; ++round) {
    const auto a = gen_random_metric(rng.uniform_int(1, 4), rng.uniform(0.5, 2.0), rng);
    const auto b = gen_random_metric(rng.uniform_int(1, 4), rng.uniform(0.5, 2.0), rng);
    const auto bounds = gh_bounds(a, b);
    const double value = gh_exact(a, b).value;
    CHECK(bounds.lower <= value + 1e-12);
    CHECK(value <= bounds.upper + 1e-12);
    CHECK(distortion(a, b, bounds.witness) >= 2 * value - 1e-12);
  }
}

TEST_CASE("property: oracle equivalence on small random pairs") {
  SplitMix64 rng(41);
  for (int round = 0; round < 25; ++round) {
    const auto a = gen_random_metric(rng.uniform_int(1, 4), rng.uniform(0.5, 2.0), rng);
    const auto b = gen_random_metric(rng.uniform_int(1, 4), rng.uniform(0.5, 2.0), rng);
    CHECK(std::abs(gh_exact(a, b).value - gh_bruteforce(a, b).value) <= 1e-12);
  }
}

TEST_CASE("property: symmetry, one-point rule and scaling identities") {
  SplitMix64 rng(43);
  for (int round = 0; round < 10; ++round) {
    const auto a = gen_random_metric(rng.uniform_int(1, 4), rng.uniform(0.5, 2.0), rng);
    const auto b = gen_random_metric(rng.uniform_int(1, 4), rng.uniform(0.5, 2.0), rng);

    CHECK(gh_exact(a, b).value == gh_exact(b, a).value);
    CHECK(gh_exact(a, one_point()).value == doctest::Approx(0.5 * diameter(a)).epsilon(1e-12));

    const double base = gh_exact(a, b).value;
    for (double t : {0.5, 2.0, 3.0}) {
      CHECK(gh_exact(scale(a, t), scale(b, t)).value ==
            doctest::Approx(t * base).epsilon(1e-9));
    }
    for (auto [t, s] : {std::pair{2.0, 0.5}, std::pair{3.0, 1.0}}) {
      CHECK(gh_exact(scale(a, t), scale(a, s)).value ==
            doctest::Approx(0.5 * std::abs(t - s) * diameter(a)).epsilon(1e-9));
    }
  }
}

TEST_CASE("property: triangle inequality over pool triples") {
  SplitMix64 rng(47);
  std::vector<FiniteMetricSpace> pool;
  for (int i = 0; i < 6; ++i) {
    pool.push_back(gen_random_metric(rng.uniform_int(1, 4), rng.uniform(0.5, 2.0), rng));
  }
  std::vector<std::vector<double>> gh(pool.size(), std::vector<double>(pool.size(), 0.0));
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j)
      gh[i][j] = gh[j][i] = gh_exact(pool[i], pool[j]).value;
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j)
      for (std::size_t k = 0; k < pool.size(); ++k) {
        if (k == i || k == j) continue;
        CHECK(gh[i][j] <= gh[i][k] + gh[k][j] + 1e-9);
      }
}

TEST_CASE("property: inverse and restriction distortion laws") {
  SplitMix64 rng(53);
  for (int round = 0; round < 20; ++round) {
    const auto a = gen_random_metric(rng.uniform_int(2, 4), rng.uniform(0.5, 2.0), rng);
    const auto b = gen_random_metric(rng.uniform_int(2, 4), rng.uniform(0.5, 2.0), rng);
    const auto full = full_correspondence(a.size(), b.size());
    CHECK(distortion(a, b, full) == distortion(b, a, inverse(full)));

    // dropping pairs (while keeping coverage) never increases distortion
    std::vector<IndexPair> sub;
    for (int i = 0; i < a.size(); ++i) sub.emplace_back(i, rng.uniform_int(0, b.size() - 1));
    for (int j = 0; j < b.size(); ++j) sub.emplace_back(rng.uniform_int(0, a.size() - 1), j);
    const auto corr = make_correspondence(sub, a.size(), b.size());
    CHECK(distortion(a, b, corr) <= distortion(a, b, full));
    CHECK(distortion(a, b, corr) == distortion(b, a, inverse(corr)));
  }
}

TEST_CASE("zero distance implies isometry on small instances") {
  SplitMix64 rng(59);
  const auto a = gen_random_metric(4, 2.0, rng);
  std::vector<std::vector<double>> mat(4, std::vector<double>(4, 0.0));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) mat[i][j] = a.dist((i + 1) % 4, (j + 1) % 4);
  const auto rotated = validate_metric(mat);
  CHECK(gh_exact(a, rotated).value == 0.0);
  CHECK(is_isometric(a, rotated).isometric);
}

TEST_CASE("result json carries the schema fields") {
  const auto res = gh_exact(two_point(1.0), one_point());
  const std::string doc = gh_result_to_json(res);
  CHECK(doc.find("\"value\"") != std::string::npos);
  CHECK(doc.find("\"optimal_pairs\"") != std::string::npos);
  CHECK(doc.find("\"nodes\"") != std::string::npos);
  CHECK(doc.find("\"method\":\"branch-and-bound\"") != std::string::npos);
  CHECK(doc.find("\"optimal\":true") != std::string::npos);
}
