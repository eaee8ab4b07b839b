#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ghmetric/box.hpp"
#include "ghmetric/gh_solver.hpp"

using namespace ghmetric;

TEST_CASE("sup distance between box points") {
  const std::vector<double> r = {1.0, 0.5};
  const auto x = make_box_point({1.0, 0.25}, r);
  const auto y = make_box_point({0.5, 0.25}, r);
  CHECK(box_linf_distance(x, x) == 0.0);
  CHECK(box_linf_distance(x, y) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(box_linf_distance(make_box_point({0.0, 0.0}, r), make_box_point({1.0, 0.5}, r)) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("box point validation") {
  CHECK_THROWS_AS(make_box_point({0.5}, {1.0, 0.5}), DimensionMismatch);
  CHECK_THROWS_AS(make_box_point({1.5}, {1.0}), InputError);
  CHECK_THROWS_AS(make_box_point({-0.1}, {1.0}), InputError);
  CHECK_THROWS_AS(make_box_point({0.5}, {0.0}), NonpositiveTerm);
  CHECK_THROWS_AS(
      box_linf_distance(make_box_point({0.1}, {1.0}), make_box_point({0.1}, {0.9})),
      DimensionMismatch);
}

TEST_CASE("embedding shape: zero coordinates become one-point blocks") {
  const auto bead = embed_box_point(make_box_point({0.0, 0.0}, {1.0, 0.5}));
  CHECK(bead.space.size() == 5);  // 3 sentinels + two singleton blocks
  CHECK(bead.block_size(1) == 1);
  CHECK(bead.block_size(2) == 1);

  const auto mixed = embed_box_point(make_box_point({0.0, 0.25}, {1.0, 0.5}));
  CHECK(mixed.block_size(1) == 1);
  CHECK(mixed.block_size(2) == 2);
  CHECK(diameter(mixed.blocks[2]) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("embedded beads use the doubled gap terms and diameter identity") {
  const std::vector<double> r = {1.0, 0.5};
  const auto bead = embed_box_point(make_box_point({1.0, 0.5}, r));
  CHECK(bead.gaps.terms == std::vector<double>{2.0, 1.0});
  const double c = bead.gaps.total;
  CHECK(diameter(bead.space) == doctest::Approx(36 * c - 3 * 2.0).epsilon(1e-9));
  CHECK(diameter(bead.space) ==
        doctest::Approx(72 * 1.5 - 6 * 1.0).epsilon(1e-9));  // 72c - 6r1 over the original r
}

TEST_CASE("embedding is isometric on the worked pairs") {
  const std::vector<double> r = {1.0, 0.5};
  const auto x = make_box_point({1.0, 0.25}, r);
  const auto y = make_box_point({0.5, 0.25}, r);
  const auto bx = embed_box_point(x);
  const auto by = embed_box_point(y);
  const auto res = gh_exact(bx.space, by.space);
  REQUIRE(res.is_optimal);
  CHECK(std::abs(res.value - box_linf_distance(x, y)) <= 1e-9);
}

TEST_CASE("single-coordinate embedding recovers |s - t|") {
  const std::vector<double> r = {1.0};
  const auto bs = embed_box_point(make_box_point({0.9}, r));
  const auto bt = embed_box_point(make_box_point({0.2}, r));
  const auto res = gh_exact(bs.space, bt.space);
  REQUIRE(res.is_optimal);
  CHECK(res.value == doctest::Approx(0.7).epsilon(1e-9));
}

TEST_CASE("degenerate coordinate contributes exactly t") {
  const std::vector<double> r = {1.0};
  const auto zero = embed_box_point(make_box_point({0.0}, r));
  const auto tee = embed_box_point(make_box_point({0.35}, r));
  const auto res = gh_exact(zero.space, tee.space);
  REQUIRE(res.is_optimal);
  CHECK(res.value == doctest::Approx(0.35).epsilon(1e-9));
  // matches GH(one-point, t*two-point) = t directly
  CHECK(gh_exact(one_point(), two_point(0.35)).value ==
        doctest::Approx(0.35).epsilon(1e-12));
}
